#include <catch_amalgamated.hpp>
#include <random>

#include "flagcalc/errors.hpp"
#include "flagcalc/quantum.hpp"

using namespace flagcalc;

namespace {

struct Space {
  Family f;
  int n;
  std::vector<int> levi;
};

struct Setup {
  WeylGroup g;
  FlagVariety fv;
  Localization loc;
  QuantumRing ring;
  explicit Setup(const Space& s) : g(RootSystem(s.f, s.n)), fv(g, s.levi), loc(fv), ring(fv) {}
};

Degree zero_degree(const FlagVariety& fv) {
  return Degree::zero(fv.degree_size());
}

std::size_t pos(const FlagVariety& fv, const Word& w) {
  return fv.point(fv.group().from_word(w));
}

// Classical equivariant product by pointwise multiplication of restrictions.
std::vector<Poly> classical_oracle(const Localization& loc, std::size_t a, std::size_t b) {
  return loc.expand(loc.opposite(a) * loc.opposite(b));
}

const std::vector<Space> kSpaces = {
    {Family::A, 1, {}},  {Family::A, 2, {}},     {Family::A, 2, {1}}, {Family::B, 2, {}},
    {Family::C, 2, {0}}, {Family::A, 3, {0, 2}}, {Family::G, 2, {}},
};

}  // namespace

TEST_CASE("P1 Chevalley product", "[quantum]") {
  Setup s({Family::A, 1, {}});
  const QClass prod = s.ring.chevalley(0, 1);
  QClass expected(2);
  expected.add(Degree({0}), 1, Poly::variable(0));
  expected.add(Degree({1}), 0, Poly(1));
  CHECK(prod == expected);
  CHECK(s.ring.product(1, 1) == expected);
}

TEST_CASE("Chevalley with the unit is the divisor", "[quantum]") {
  for (const Space& sp : kSpaces) {
    Setup s(sp);
    for (int beta : s.fv.parabolic().non_levi()) {
      const std::size_t sb = s.fv.point(s.g.simple(beta));
      CHECK(s.ring.chevalley(beta, 0) ==
            QClass::schubert(s.fv.num_points(), sb, s.fv.degree_size()));
    }
  }
}

TEST_CASE("Chevalley rejects Levi roots", "[quantum]") {
  Setup s({Family::A, 2, {1}});
  CHECK_THROWS_AS(s.ring.chevalley(1, 0), UsageError);
}

TEST_CASE("classical part of Chevalley matches localization", "[quantum]") {
  for (const Space& sp : kSpaces) {
    Setup s(sp);
    for (int beta : s.fv.parabolic().non_levi()) {
      const std::size_t sb = s.fv.point(s.g.simple(beta));
      for (std::size_t u = 0; u < s.fv.num_points(); ++u) {
        const QClass c = s.ring.chevalley(beta, u).classical();
        const auto oracle = classical_oracle(s.loc, sb, u);
        for (std::size_t w = 0; w < oracle.size(); ++w)
          CHECK(c.coefficient(zero_degree(s.fv), w) == oracle[w]);
      }
    }
  }
}

TEST_CASE("non-equivariant Chevalley on A2/B matches intersection numbers", "[quantum]") {
  Setup s({Family::A, 2, {}});
  const auto& par = s.fv.parabolic();
  for (int beta : {0, 1}) {
    const std::size_t sb = s.fv.point(s.g.simple(beta));
    for (std::size_t u = 0; u < 6; ++u) {
      const QClass c = s.ring.chevalley(beta, u).non_equivariant().classical();
      for (std::size_t w = 0; w < 6; ++w) {
        if (par.length(w) != par.length(u) + 1) {
          CHECK(c.coefficient(zero_degree(s.fv), w).is_zero());
          continue;
        }
        const Poly n = s.loc.integrate(s.loc.opposite(sb) * s.loc.opposite(u) * s.loc.schubert(w));
        REQUIRE(n.is_constant());
        CHECK(c.coefficient(zero_degree(s.fv), w) == n);
      }
    }
  }
}

TEST_CASE("unit and commutativity", "[quantum]") {
  for (const Space& sp : kSpaces) {
    Setup s(sp);
    const std::size_t n = s.fv.num_points();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(s.ring.product(a, 0) == QClass::schubert(n, a, s.fv.degree_size()));
      for (std::size_t b = a + 1; b < n; ++b) CHECK(s.ring.product(a, b) == s.ring.product(b, a));
    }
  }
}

TEST_CASE("q = 0 equals the classical equivariant product", "[quantum]") {
  for (const Space& sp : kSpaces) {
    Setup s(sp);
    const std::size_t n = s.fv.num_points();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const QClass c = s.ring.product(a, b).classical();
        const auto oracle = classical_oracle(s.loc, a, b);
        for (std::size_t w = 0; w < n; ++w) CHECK(c.coefficient(zero_degree(s.fv), w) == oracle[w]);
      }
  }
}

TEST_CASE("non-equivariant q = 0 coefficients are intersection numbers", "[quantum]") {
  for (const Space& sp :
       {Space{Family::A, 2, {}}, Space{Family::B, 2, {}}, Space{Family::A, 3, {0, 2}}}) {
    Setup s(sp);
    const auto& par = s.fv.parabolic();
    const std::size_t n = s.fv.num_points();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const QClass c = s.ring.product(a, b).non_equivariant();
        for (std::size_t w = 0; w < n; ++w) {
          if (par.length(w) != par.length(a) + par.length(b)) continue;
          const Poly num =
              s.loc.integrate(s.loc.opposite(a) * s.loc.opposite(b) * s.loc.schubert(w));
          CHECK(c.coefficient(zero_degree(s.fv), w) == num);
        }
      }
  }
}

TEST_CASE("associativity on sampled triples", "[quantum]") {
  std::mt19937 rng(20240611);
  for (const Space& sp :
       {Space{Family::A, 2, {}}, Space{Family::B, 2, {}}, Space{Family::A, 3, {0, 2}},
        Space{Family::G, 2, {}}, Space{Family::A, 3, {}}}) {
    Setup s(sp);
    const std::size_t n = s.fv.num_points();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      const QClass xa = QClass::schubert(n, a, s.fv.degree_size());
      const QClass xc = QClass::schubert(n, c, s.fv.degree_size());
      const QClass left = s.ring.product(s.ring.product(a, b), xc);
      const QClass right = s.ring.product(xa, s.ring.product(b, c));
      INFO(s.fv.name() << " " << a << " " << b << " " << c);
      CHECK(left == right);
    }
  }
}

TEST_CASE("projective spaces follow h^(n+1) = q", "[quantum]") {
  for (int n : {1, 2, 3}) {
    std::vector<int> levi;
    for (int i = 1; i < n; ++i) levi.push_back(i);
    Setup s({Family::A, n, levi});
    const auto& par = s.fv.parabolic();
    for (std::size_t a = 0; a <= static_cast<std::size_t>(n); ++a)
      for (std::size_t b = 0; b <= static_cast<std::size_t>(n); ++b) {
        const int k = par.length(a) + par.length(b);
        QClass expected(n + 1);
        const int e = k > n ? 1 : 0;
        const int target = k - e * (n + 1);
        for (std::size_t w = 0; w <= static_cast<std::size_t>(n); ++w)
          if (par.length(w) == target) expected.add(Degree({e}), w, Poly(1));
        CHECK(s.ring.product(a, b).non_equivariant() == expected);
      }
  }
}

TEST_CASE("P2 point squared is q times the line", "[quantum]") {
  Setup s({Family::A, 2, {1}});
  const std::size_t pt = pos(s.fv, {1, 0});
  const std::size_t line = pos(s.fv, {0});
  QClass expected(3);
  expected.add(Degree({1}), line, Poly(1));
  CHECK(s.ring.product(pt, pt).non_equivariant() == expected);
}

TEST_CASE("Fl3 non-equivariant products", "[quantum]") {
  // Values from the quantum Schubert polynomials x1x2 + q1, x1^2 - q1,
  // x1^2 x2 + q1 x1 reduced in the Givental-Kim presentation.
  Setup s({Family::A, 2, {}});
  const std::size_t s1 = pos(s.fv, {0}), s2 = pos(s.fv, {1});
  const std::size_t s12 = pos(s.fv, {0, 1}), s21 = pos(s.fv, {1, 0}), w0 = 5;
  auto q = [](int a, int b) { return Degree({a, b}); };
  auto single = [&](const Degree& d, std::size_t w) {
    QClass c(6);
    c.add(d, w, Poly(1));
    return c;
  };
  CHECK(s.ring.product(s1, s1).non_equivariant() == single(q(0, 0), s21) + single(q(1, 0), 0));
  CHECK(s.ring.product(s1, s21).non_equivariant() == single(q(1, 0), s2));
  CHECK(s.ring.product(s12, s12).non_equivariant() == single(q(0, 1), s21));
  CHECK(s.ring.product(s21, s21).non_equivariant() == single(q(1, 0), s12));
  CHECK(s.ring.product(s12, s21).non_equivariant() == single(q(1, 1), 0));
  CHECK(s.ring.product(s1, w0).non_equivariant() == single(q(1, 1), 0) + single(q(1, 0), s12));
  CHECK(s.ring.product(w0, w0).non_equivariant() == single(q(1, 1), s12) + single(q(1, 1), s21));
}

TEST_CASE("truncation overflow names the needed bound", "[quantum]") {
  Setup s({Family::A, 1, {}});
  const QClass x = QClass::schubert(2, 1, 1);
  CHECK_NOTHROW(s.ring.product(x, x, s.ring.default_bound()));
  try {
    s.ring.product(x, x, Degree({1}));
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("(2)") != std::string::npos);
  }
}

TEST_CASE("P1 translated Seidel instance", "[quantum][seidel]") {
  Setup s({Family::A, 1, {}});
  const WeylElement w = s.g.simple(0);
  // s.[X^s] = [X^s] - alpha [X^1]
  const QClass moved = to_qclass(s.loc, translate_class(s.fv, w, s.loc.opposite(1)));
  QClass expected_moved = QClass::schubert(2, 1, 1);
  expected_moved.add(Degree({0}), 0, -Poly::variable(0));
  CHECK(moved == expected_moved);
  QClass q1(2);
  q1.add(Degree({1}), 0, Poly(1));
  CHECK(s.ring.product(QClass::schubert(2, 1, 1), moved) == q1);
  const SeidelQhReport r = verify_seidel_qh(s.ring, s.loc, w, 1);
  CHECK(r.ok());
  CHECK(r.degree == Degree({1}));
}

TEST_CASE("Seidel identities on small spaces", "[quantum][seidel]") {
  for (const Space& sp : {Space{Family::A, 1, {}}, Space{Family::A, 2, {}}, Space{Family::A, 3, {}},
                          Space{Family::A, 2, {1}}, Space{Family::A, 3, {0, 2}},
                          Space{Family::B, 2, {}}, Space{Family::C, 2, {0}}}) {
    Setup s(sp);
    for (const auto& ce : cominuscule_elements(s.g)) {
      for (std::size_t u = 0; u < s.fv.num_points(); ++u) {
        const SeidelQhReport r = verify_seidel_qh(s.ring, s.loc, ce.element, u);
        INFO(s.fv.name() << " w=" << word_string(s.g, ce.element)
                         << " u=" << word_string(s.g, s.fv.rep(u)));
        for (const auto& f : r.failures) INFO(f);
        CHECK(r.ok());
      }
    }
  }
}

TEST_CASE("Seidel check rejects the identity", "[quantum][seidel]") {
  Setup s({Family::A, 2, {}});
  CHECK_THROWS_AS(verify_seidel_qh(s.ring, s.loc, s.g.identity(), 0), UsageError);
}
