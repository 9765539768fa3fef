#include <catch_amalgamated.hpp>
#include <deque>
#include <set>

#include "flagcalc/curves.hpp"
#include "flagcalc/errors.hpp"

using namespace flagcalc;

namespace {

// Reference BFS over states (vertex, degree spent), independent of the
// Pareto search used by the library.
Bitset bfs_oracle(const FlagVariety& fv, const Bitset& start, const Degree& d) {
  const auto& graph = fv.graph();
  std::set<std::pair<std::size_t, Degree>> seen;
  std::deque<std::pair<std::size_t, Degree>> queue;
  for (std::size_t p = 0; p < fv.num_points(); ++p)
    if (start[p]) {
      seen.insert({p, Degree::zero(d.size())});
      queue.push_back({p, Degree::zero(d.size())});
    }
  Bitset out(fv.num_points());
  while (!queue.empty()) {
    auto [p, spent] = queue.front();
    queue.pop_front();
    out.set(p);
    for (std::size_t e : graph.incident[p]) {
      const auto& edge = graph.edges[e];
      std::size_t q = edge.a == p ? edge.b : edge.a;
      Degree next = spent + edge.degree;
      if (!next.leq(d)) continue;
      if (seen.insert({q, next}).second) queue.push_back({q, next});
    }
  }
  return out;
}

Bitset single(const FlagVariety& fv, WeylElement w) {
  Bitset b(fv.num_points());
  b.set(fv.point(w));
  return b;
}

std::set<WeylElement> as_elements(const FlagVariety& fv, const Bitset& b) {
  std::set<WeylElement> out;
  for (std::size_t p = 0; p < fv.num_points(); ++p)
    if (b[p]) out.insert(fv.rep(p));
  return out;
}

}  // namespace

TEST_CASE("moment graph examples", "[curves]") {
  WeylGroup a1(RootSystem(Family::A, 1));
  FlagVariety p1(a1, std::uint32_t{0});
  REQUIRE(p1.graph().edges.size() == 1);
  CHECK(p1.graph().edges[0].degree == Degree({1}));

  WeylGroup a2(RootSystem(Family::A, 2));
  FlagVariety fl3(a2, std::uint32_t{0});
  CHECK(fl3.num_points() == 6);
  for (std::size_t p = 0; p < 6; ++p) CHECK(fl3.graph().incident[p].size() == 3);
  int theta_edges = 0;
  for (const auto& e : fl3.graph().edges) {
    if (e.alpha == a2.roots().highest_root()) {
      CHECK(e.degree == Degree({1, 1}));
      ++theta_edges;
    }
  }
  CHECK(theta_edges == 3);

  FlagVariety p2(a2, std::vector<int>{1});
  CHECK(p2.num_points() == 3);
  CHECK(p2.graph().edges.size() == 3);
  for (const auto& e : p2.graph().edges) CHECK(e.degree == Degree({1}));
}

TEST_CASE("full flag moment graph is |Phi+|-regular", "[curves]") {
  for (auto [f, n] : {std::pair{Family::A, 3}, std::pair{Family::B, 3}, std::pair{Family::G, 2},
                      std::pair{Family::D, 4}}) {
    WeylGroup g{RootSystem(f, n)};
    FlagVariety fv(g, std::uint32_t{0});
    for (std::size_t p = 0; p < fv.num_points(); ++p)
      CHECK(static_cast<int>(fv.graph().incident[p].size()) == g.roots().num_positive());
    for (const auto& e : fv.graph().edges) {
      CHECK(e.a != e.b);
      CHECK(e.degree.is_effective());
      CHECK_FALSE(e.degree.is_zero());
    }
  }
}

TEST_CASE("combinatorial neighborhoods on A2/B", "[curves]") {
  WeylGroup g(RootSystem(Family::A, 2));
  FlagVariety fv(g, std::uint32_t{0});
  Bitset start = single(fv, g.identity());
  CHECK(combinatorial_nbhd(fv, start, Degree({0, 0})) == start);
  CHECK(as_elements(fv, combinatorial_nbhd(fv, start, Degree({1, 0}))) ==
        std::set<WeylElement>{g.identity(), g.simple(0)});
  CHECK(combinatorial_nbhd(fv, start, Degree({1, 1})).count() == 6);
  CHECK_THROWS_AS(combinatorial_nbhd(fv, start, Degree({-1, 0})), InputError);
}

TEST_CASE("curve neighborhood elements on A2/B", "[curves]") {
  WeylGroup g(RootSystem(Family::A, 2));
  FlagVariety fv(g, std::uint32_t{0});
  CHECK(curve_nbhd_weyl(fv, g.simple(1), Side::Schubert, Degree({0, 0})) == g.simple(1));
  CHECK(curve_nbhd_weyl(fv, g.identity(), Side::Schubert, Degree({1, 1})) == g.longest());
  CHECK(curve_nbhd_weyl(fv, g.identity(), Side::Schubert, Degree({1, 0})) == g.simple(0));
  CHECK(curve_nbhd_weyl(fv, g.longest(), Side::Opposite, Degree({1, 0})) == g.from_word({0, 1}));
}

TEST_CASE("curve neighborhoods agree with the BFS oracle", "[curves]") {
  for (auto [f, n] : {std::pair{Family::A, 1}, std::pair{Family::A, 2}, std::pair{Family::A, 3},
                      std::pair{Family::B, 2}, std::pair{Family::B, 3}, std::pair{Family::C, 3},
                      std::pair{Family::G, 2}}) {
    WeylGroup g{RootSystem(f, n)};
    for (std::uint32_t mask = 0; mask < (1u << n) - 1; ++mask) {
      FlagVariety fv(g, mask);
      const auto& par = fv.parabolic();
      std::size_t mismatches = 0;
      for (const Degree& d : degrees_up_to(fv.degree_size(), 3)) {
        for (std::size_t p = 0; p < fv.num_points(); ++p) {
          WeylElement w = fv.rep(p);
          WeylElement ws = curve_nbhd_weyl(fv, w, Side::Schubert, d, false);
          if (par.down(par.position(ws)) != bfs_oracle(fv, par.down(p), d)) ++mismatches;
          WeylElement wo = curve_nbhd_weyl(fv, w, Side::Opposite, d, false);
          if (par.up(par.position(wo)) != bfs_oracle(fv, par.up(p), d)) ++mismatches;
        }
      }
      INFO(g.roots().name() << " Levi mask " << mask);
      CHECK(mismatches == 0);
    }
  }
}

TEST_CASE("D4 curve neighborhoods agree with the Pareto oracle", "[curves]") {
  WeylGroup g(RootSystem(Family::D, 4));
  for (std::uint32_t mask : {0u, 0b1110u, 0b1101u, 0b1011u, 0b0111u, 0b0101u}) {
    FlagVariety fv(g, mask);
    const auto& par = fv.parabolic();
    std::size_t mismatches = 0;
    auto degrees = degrees_up_to(fv.degree_size(), mask == 0 ? 2 : 3);
    for (std::size_t p = 0; p < fv.num_points(); ++p) {
      DegreeLabels labels(fv, par.down(p));
      for (const Degree& d : degrees) {
        WeylElement ws = curve_nbhd_weyl(fv, fv.rep(p), Side::Schubert, d, false);
        if (par.down(par.position(ws)) != labels.within(d)) ++mismatches;
      }
    }
    INFO("Levi mask " << mask);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("neighborhoods are monotone and saturate at the top", "[curves]") {
  WeylGroup g(RootSystem(Family::B, 3));
  for (std::uint32_t mask : {0u, 0b110u, 0b011u}) {
    FlagVariety fv(g, mask);
    const auto& par = fv.parabolic();
    WeylElement top = par.longest_min_rep();
    auto degrees = degrees_up_to(fv.degree_size(), 2);
    for (const Degree& d : degrees) {
      CHECK(curve_nbhd_weyl(fv, top, Side::Schubert, d) == top);
      CHECK(curve_nbhd_weyl(fv, g.identity(), Side::Opposite, d) == g.identity());
      for (const Degree& e : degrees) {
        if (!d.leq(e)) continue;
        for (std::size_t p = 0; p < fv.num_points(); ++p) {
          Bitset small = combinatorial_nbhd(fv, par.down(p), d);
          Bitset big = combinatorial_nbhd(fv, par.down(p), e);
          CHECK(small.is_subset_of(big));
        }
      }
    }
  }
}

TEST_CASE("minimal connecting degrees on A2/B", "[curves]") {
  WeylGroup g(RootSystem(Family::A, 2));
  FlagVariety fv(g, std::uint32_t{0});
  CHECK(min_connecting_degree(fv, g.longest(), g.simple(0)) == Degree({0, 0}));
  CHECK(min_connecting_degree(fv, g.identity(), g.longest()) == Degree({1, 1}));
  CHECK(min_connecting_degree(fv, g.simple(1), g.longest()) == Degree({1, 1}));
  auto all = min_connecting_degrees(fv, g.simple(1));
  for (std::size_t p = 0; p < fv.num_points(); ++p)
    CHECK(all[p] == min_connecting_degree(fv, g.simple(1), fv.rep(p)));
}

TEST_CASE("minimal connecting degree is the least degree meeting X^u", "[curves]") {
  WeylGroup g(RootSystem(Family::A, 3));
  for (std::uint32_t mask : {0u, 0b101u, 0b011u}) {
    FlagVariety fv(g, mask);
    const auto& par = fv.parabolic();
    auto degrees = degrees_up_to(fv.degree_size(), 3);
    for (std::size_t v = 0; v < fv.num_points(); ++v)
      for (std::size_t u = 0; u < fv.num_points(); ++u) {
        Degree dist = min_connecting_degree(fv, fv.rep(v), fv.rep(u));
        for (const Degree& d : degrees) {
          bool meets = bfs_oracle(fv, par.down(v), d).intersects(par.up(u));
          CHECK(meets == dist.leq(d));
        }
      }
  }
}

TEST_CASE("Seidel degree examples", "[curves]") {
  WeylGroup a1(RootSystem(Family::A, 1));
  FlagVariety p1(a1, std::uint32_t{0});
  CHECK(seidel_degree(p1, a1.simple(0), a1.identity()) == Degree({0}));
  CHECK(seidel_degree(p1, a1.simple(0), a1.simple(0)) == Degree({1}));
  CHECK(seidel_degree(p1, a1.identity(), a1.simple(0)) == Degree({0}));

  WeylGroup a2(RootSystem(Family::A, 2));
  FlagVariety fl3(a2, std::uint32_t{0});
  WeylElement w = a2.from_word({1, 0});
  CHECK(cominuscule_root_of(a2, w) == 0);
  CHECK(seidel_degree(fl3, w, a2.longest()) == Degree({1, 1}));
  CHECK(min_connecting_degree(fl3, a2.simple(1), a2.longest()) == Degree({1, 1}));
}

TEST_CASE("Seidel degree equals the minimal connecting degree", "[curves]") {
  for (auto [f, n] : {std::pair{Family::A, 1}, std::pair{Family::A, 2}, std::pair{Family::A, 3},
                      std::pair{Family::B, 2}, std::pair{Family::B, 3}, std::pair{Family::C, 3},
                      std::pair{Family::D, 4}}) {
    WeylGroup g{RootSystem(f, n)};
    for (std::uint32_t mask = 0; mask < (1u << n) - 1; ++mask) {
      FlagVariety fv(g, mask);
      const auto& par = fv.parabolic();
      std::size_t mismatches = 0;
      for (WeylElement w : cominuscule_group(g)) {
        if (w == g.identity()) continue;
        WeylElement v = par.min_rep(g.multiply(g.longest(), w));
        auto dists = min_connecting_degrees(fv, v);
        for (std::size_t u = 0; u < fv.num_points(); ++u)
          if (seidel_degree(fv, w, fv.rep(u)) != dists[u]) ++mismatches;
      }
      INFO(g.roots().name() << " Levi mask " << mask);
      CHECK(mismatches == 0);
    }
  }
}

TEST_CASE("translated neighborhoods", "[curves]") {
  WeylGroup a1(RootSystem(Family::A, 1));
  FlagVariety p1(a1, std::uint32_t{0});
  WeylElement s = a1.simple(0);
  auto t0 = gamma_e_translated(p1, s, s, Degree({0}));
  CHECK(t0.u_prime == p1.parabolic().min_rep(a1.multiply(s, s)));
  CHECK(t0.translation == s);
  auto t1 = gamma_e_translated(p1, s, s, Degree({1}));
  CHECK(t1.u_prime == a1.identity());
  CHECK(t1.fixed.count() == 2);

  WeylGroup a2(RootSystem(Family::A, 2));
  FlagVariety fl3(a2, std::uint32_t{0});
  WeylElement w = a2.from_word({1, 0});
  auto t = gamma_e_translated(fl3, w, a2.identity(), Degree({0, 0}));
  CHECK(t.u_prime == w);
  CHECK(t.translation == a2.from_word({0, 1}));
  const auto& par = fl3.parabolic();
  CHECK(t.fixed == translate_points(fl3, a2.inverse(w), par.up(par.position(w))));
}

TEST_CASE("w^-1.X^w and X_(w0 w) share fixed points for every cominuscule root", "[curves]") {
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::A, 3}, std::pair{Family::B, 2},
                      std::pair{Family::B, 3}, std::pair{Family::C, 3}, std::pair{Family::D, 4}}) {
    WeylGroup g{RootSystem(f, n)};
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      FlagVariety fv(g, mask);
      for (auto [gamma, w] : cominuscule_elements(g)) {
        INFO(g.roots().name() << " mask " << mask << " gamma " << gamma);
        CHECK(dualpoint_check(fv, gamma));
      }
    }
  }
}

TEST_CASE("curve neighborhoods factor through Levi decompositions", "[curves]") {
  WeylGroup a2(RootSystem(Family::A, 2));
  FlagVariety x(a2, std::uint32_t{0}), y1(a2, std::vector<int>{1}), y2(a2, std::vector<int>{0});
  CHECK(nbhd_projection_check(x, y1, y2, a2.longest(), Degree({1, 1})).ok());
  FlagVariety bad(a2, std::vector<int>{0});
  CHECK_THROWS_AS(nbhd_projection_check(bad, y1, y2, a2.longest(), Degree({0})), UsageError);

  WeylGroup a3(RootSystem(Family::A, 3));
  FlagVariety fl4(a3, std::uint32_t{0});
  FlagVariety q1(a3, std::vector<int>{1, 2}), q2(a3, std::vector<int>{0});
  auto dx = distance_table(fl4), d1 = distance_table(q1), d2 = distance_table(q2);
  std::size_t failures = 0;
  for (const Degree& d : degrees_up_to(3, 1))
    for (std::size_t u = 0; u < fl4.num_points(); ++u)
      if (!nbhd_projection_check(fl4, q1, q2, fl4.rep(u), d, dx, d1, d2).ok()) ++failures;
  CHECK(failures == 0);
}
