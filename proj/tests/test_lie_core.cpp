#include <algorithm>
#include <catch_amalgamated.hpp>
#include <random>
#include <set>

#include "flagcalc/errors.hpp"
#include "flagcalc/weyl_group.hpp"

using namespace flagcalc;

namespace {

using Matrix = std::vector<std::vector<int>>;

// Reflection s_i as an integer matrix acting on simple-root coordinates.
Matrix reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  Matrix m(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    m[j][j] = 1;
    m[i][j] -= rs.cartan()[i][j];
  }
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Order of the group generated by the reflection matrices (brute force).
std::size_t matrix_group_order(const RootSystem& rs) {
  std::set<Matrix> seen;
  std::vector<Matrix> queue;
  Matrix id(rs.rank(), std::vector<int>(rs.rank(), 0));
  for (int i = 0; i < rs.rank(); ++i) id[i][i] = 1;
  seen.insert(id);
  queue.push_back(id);
  std::vector<Matrix> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(reflection_matrix(rs, i));
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : gens) {
      Matrix m = matmul(queue[h], g);
      if (seen.insert(m).second) queue.push_back(m);
    }
  return seen.size();
}

// Subword criterion: u <= w iff u is a product of a subword of a fixed
// reduced word of w.
bool subword_leq(const WeylGroup& g, WeylElement u, WeylElement w) {
  Word word = g.reduced_word(w);
  const std::size_t l = word.size();
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < l; ++k)
      if (mask & (1u << k)) sub.push_back(word[k]);
    if (g.from_word(sub) == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("root systems have the expected root counts", "[lie_core]") {
  struct Case {
    Family f;
    int n;
    int positive;
  };
  for (auto c : {Case{Family::A, 1, 1}, Case{Family::A, 2, 3}, Case{Family::A, 4, 10},
                 Case{Family::B, 2, 4}, Case{Family::B, 4, 16}, Case{Family::C, 3, 9},
                 Case{Family::D, 4, 12}, Case{Family::D, 5, 20}, Case{Family::G, 2, 6},
                 Case{Family::F, 4, 24}, Case{Family::E, 6, 36}}) {
    RootSystem rs(c.f, c.n);
    CHECK(rs.num_positive() == c.positive);
    for (int i = 0; i < c.n; ++i) {
      CHECK(rs.cartan()[i][i] == 2);
      for (int j = 0; j < c.n; ++j) {
        if (i != j) CHECK(rs.cartan()[i][j] <= 0);
        // pairing from coordinates reproduces the Cartan matrix
        CHECK(rs.pair(rs.root(j), rs.coroot(i)) == rs.cartan()[i][j]);
      }
    }
  }
}

TEST_CASE("A2 highest root is alpha1 + alpha2", "[lie_core]") {
  RootSystem rs(Family::A, 2);
  CHECK(rs.root(rs.highest_root()) == IntVector{1, 1});
  CHECK(rs.num_positive() == 3);
}

TEST_CASE("invalid family/rank pairs are configuration errors", "[lie_core]") {
  CHECK_THROWS_AS(RootSystem(Family::A, 0), ConfigError);
  CHECK_THROWS_AS(RootSystem(Family::B, 1), ConfigError);
  CHECK_THROWS_AS(RootSystem(Family::D, 3), ConfigError);
  CHECK_THROWS_AS(RootSystem(Family::F, 3), ConfigError);
  CHECK_THROWS_AS(RootSystem(Family::G, 3), ConfigError);
  CHECK_THROWS_AS(family_from_letter('X'), ConfigError);
}

TEST_CASE("Weyl group orders match brute-force matrix closure", "[lie_core]") {
  CHECK(WeylGroup(RootSystem(Family::A, 1)).size() == 2);
  RootSystem b4(Family::B, 4);
  CHECK(matrix_group_order(b4) == 384);
  CHECK(WeylGroup(b4).size() == 384);
  RootSystem d5(Family::D, 5);
  CHECK(WeylGroup(d5).size() == 16 * 120);
  CHECK(matrix_group_order(d5) == 1920);
  RootSystem g2(Family::G, 2);
  CHECK(WeylGroup(g2).size() == matrix_group_order(g2));
  RootSystem f4(Family::F, 4);
  CHECK(WeylGroup(f4).size() == 1152);
}

TEST_CASE("enumeration bound raises a resource error", "[lie_core]") {
  try {
    WeylGroup g(RootSystem(Family::A, 3), 10);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
}

TEST_CASE("A2 elements and lengths", "[lie_core]") {
  WeylGroup g(RootSystem(Family::A, 2));
  REQUIRE(g.size() == 6);
  std::set<WeylElement> elems;
  for (Word w : {Word{}, Word{0}, Word{1}, Word{0, 1}, Word{1, 0}, Word{0, 1, 0}}) {
    WeylElement e = g.from_word(w);
    CHECK(g.length(e) == static_cast<int>(w.size()));
    elems.insert(e);
  }
  CHECK(elems.size() == 6);
  CHECK(g.from_word({0, 1, 0}) == g.from_word({1, 0, 1}));
  CHECK(g.longest() == g.from_word({0, 1, 0}));
  WeylGroup a1(RootSystem(Family::A, 1));
  CHECK(a1.length(a1.simple(0)) == 1);
}

TEST_CASE("group table invariants", "[lie_core]") {
  for (auto [f, n] : {std::pair{Family::A, 3}, std::pair{Family::B, 3}, std::pair{Family::G, 2}}) {
    WeylGroup g{RootSystem(f, n)};
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    CHECK(g.length(g.identity()) == 0);
    for (int trial = 0; trial < 200; ++trial) {
      WeylElement a = g.element(pick(rng)), b = g.element(pick(rng)), c = g.element(pick(rng));
      CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
      CHECK(g.length(g.multiply(a, b)) <= g.length(a) + g.length(b));
      CHECK((g.length(g.multiply(a, b)) - g.length(a) - g.length(b)) % 2 == 0);
      CHECK(g.from_word(g.reduced_word(a)) == a);
      CHECK(static_cast<int>(g.reduced_word(a).size()) == g.length(a));
    }
  }
}

TEST_CASE("A2 Bruhat examples", "[lie_core]") {
  WeylGroup g(RootSystem(Family::A, 2));
  for (std::size_t k = 0; k < g.size(); ++k) CHECK(g.bruhat_leq(g.identity(), g.element(k)));
  CHECK_FALSE(g.bruhat_leq(g.from_word({0, 1}), g.from_word({1, 0})));
  CHECK(g.bruhat_leq(g.from_word({0}), g.from_word({0, 1, 0})));
}

TEST_CASE("Bruhat order agrees with the subword criterion in rank <= 3", "[lie_core]") {
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::A, 3}, std::pair{Family::B, 2},
                      std::pair{Family::B, 3}, std::pair{Family::C, 3}, std::pair{Family::G, 2}}) {
    WeylGroup g{RootSystem(f, n)};
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        WeylElement u = g.element(i), w = g.element(j);
        bool leq = g.bruhat_leq(u, w);
        if (leq != subword_leq(g, u, w)) ++mismatches;
        if (leq) CHECK(g.length(u) <= g.length(w));
        if (leq && g.bruhat_leq(w, u)) CHECK(u == w);
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("Bruhat covers are reflections with length +1", "[lie_core]") {
  WeylGroup g(RootSystem(Family::B, 3));
  for (std::size_t k = 0; k < g.size(); ++k) {
    WeylElement w = g.element(k);
    for (auto c : g.coatoms(w)) {
      CHECK(g.length(c) + 1 == g.length(w));
      WeylElement t = g.multiply(g.inverse(c), w);
      bool is_reflection = false;
      for (int r = 0; r < g.roots().num_positive(); ++r) is_reflection |= g.reflection(r) == t;
      CHECK(is_reflection);
    }
  }
}

TEST_CASE("parabolic factorization examples", "[lie_core]") {
  WeylGroup g(RootSystem(Family::A, 2));
  Parabolic p(g, std::vector<int>{1});
  auto [up, lp] = p.factorize(g.longest());
  CHECK(up == g.from_word({1, 0}));
  CHECK(lp == g.from_word({1}));
  auto [a, b] = p.factorize(g.simple(1));
  CHECK(a == g.identity());
  CHECK(b == g.simple(1));
  Parabolic empty(g, std::uint32_t{0});
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto [x, y] = empty.factorize(g.element(k));
    CHECK(x == g.element(k));
    CHECK(y == g.identity());
  }
}

TEST_CASE("parabolic factorization invariants for every parabolic in rank <= 3", "[lie_core]") {
  for (auto [f, n] : {std::pair{Family::A, 3}, std::pair{Family::B, 3}, std::pair{Family::C, 3},
                      std::pair{Family::G, 2}}) {
    WeylGroup g{RootSystem(f, n)};
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Parabolic p(g, mask);
      CHECK(p.num_cosets() * p.levi_group().size() == g.size());
      for (std::size_t k = 0; k < g.size(); ++k) {
        WeylElement u = g.element(k);
        auto [up, lp] = p.factorize(u);
        CHECK(g.multiply(up, lp) == u);
        CHECK(g.length(up) + g.length(lp) == g.length(u));
        CHECK(p.is_min_rep(up));
        CHECK(p.coset_of(lp) == p.coset_of(g.identity()));
      }
      CHECK(p.longest_levi() == g.multiply(g.longest(), p.longest_min_rep()));
    }
  }
}

TEST_CASE("cominuscule elements", "[lie_core]") {
  WeylGroup a2(RootSystem(Family::A, 2));
  auto comin = cominuscule_group(a2);
  std::set<WeylElement> expect{a2.identity(), a2.from_word({1, 0}), a2.from_word({0, 1})};
  CHECK(std::set<WeylElement>(comin.begin(), comin.end()) == expect);
  CHECK(cominuscule_root_of(a2, a2.from_word({1, 0})) == 0);

  WeylGroup g2(RootSystem(Family::G, 2));
  CHECK(cominuscule_group(g2).size() == 1);
  WeylGroup b3(RootSystem(Family::B, 3));
  CHECK(cominuscule_group(b3).size() == 2);
}

TEST_CASE("W^comin is a subgroup of order |coweight / coroot|", "[lie_core]") {
  for (auto [f, n] : {std::pair{Family::A, 1}, std::pair{Family::A, 2}, std::pair{Family::A, 3},
                      std::pair{Family::A, 4}, std::pair{Family::B, 2}, std::pair{Family::B, 3},
                      std::pair{Family::C, 3}, std::pair{Family::D, 4}, std::pair{Family::D, 5},
                      std::pair{Family::G, 2}, std::pair{Family::F, 4}}) {
    WeylGroup g{RootSystem(f, n)};
    auto comin = cominuscule_group(g);
    std::set<WeylElement> set(comin.begin(), comin.end());
    for (auto a : comin) {
      CHECK(set.contains(g.inverse(a)));
      for (auto b : comin) CHECK(set.contains(g.multiply(a, b)));
      if (a != g.identity()) {
        int gamma = cominuscule_root_of(g, a);
        int negatives = 0;
        for (int i = 0; i < n; ++i) negatives += g.roots().is_positive(g.act(a, i)) ? 0 : 1;
        CHECK(negatives == 1);
        CHECK_FALSE(g.roots().is_positive(g.act(a, gamma)));
      }
    }
    CHECK(static_cast<std::int64_t>(comin.size()) == coweight_quotient_order(g.roots()));
    CHECK(coweight_quotient_order(g.roots()) == g.roots().cartan_determinant());
  }
}
