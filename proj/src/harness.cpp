#include "flagcalc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "flagcalc/cache.hpp"
#include "flagcalc/equivariant.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/projected_richardson.hpp"
#include "flagcalc/qk_psi.hpp"
#include "flagcalc/quantum.hpp"

namespace flagcalc {

using json = nlohmann::ordered_json;

namespace {

using GroupKey = std::pair<Family, int>;
using Groups = std::map<GroupKey, std::unique_ptr<WeylGroup>>;
using Task = std::function<std::vector<VerificationCase>()>;

std::uint32_t mask_of(const std::vector<int>& levi) {
  std::uint32_t m = 0;
  for (int i : levi) m |= 1u << i;
  return m;
}

std::vector<int> levi_of(std::uint32_t mask, int rank) {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if ((mask >> i) & 1u) out.push_back(i);
  return out;
}

json space_params(const SpaceSpec& s) {
  json p;
  p["type"] = std::string(1, family_letter(s.family));
  p["rank"] = s.rank;
  json levi = json::array();
  for (int i : s.levi) levi.push_back(i + 1);
  p["parabolic"] = levi;
  if (!s.label.empty()) p["case"] = s.label;
  return p;
}

json bitset_words(const FlagVariety& fv, const Bitset& b) {
  json out = json::array();
  for (std::size_t p = b.find_first(); p != Bitset::npos; p = b.find_next(p))
    out.push_back(word_string(fv.group(), fv.rep(p)));
  return out;
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

// Runs `body`, which fills the witness and returns whether the case passed.
VerificationCase run_case(const std::string& suite, const std::string& id, json params,
                          const std::function<bool(json&)>& body) {
  VerificationCase c{suite, id, CaseStatus::Pass, std::move(params), json::object(), 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    c.status = body(c.witness) ? CaseStatus::Pass : CaseStatus::Fail;
  } catch (const ResourceError& e) {
    c.status = CaseStatus::Skipped;
    c.witness["reason"] = e.what();
  } catch (const std::exception& e) {
    c.status = CaseStatus::Fail;
    c.witness["error"] = e.what();
  }
  c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return c;
}

const std::set<std::string> kEqualPairCases = {"B4Q7", "D5Q8", "Fl145"};
const std::set<std::string> kAllFixedCases = {"LG24", "OG48"};

// Suites. Each appends tasks for one space; a task may emit several cases.

void min_degree_tasks(const SpaceSpec& s, const WeylGroup& g, std::vector<Task>& tasks) {
  for (WeylElement w : cominuscule_group(g)) {
    if (w == g.identity()) continue;
    tasks.push_back([s, &g, w] {
      json params = space_params(s);
      params["w"] = word_string(g, w);
      return std::vector{
          run_case("min-degree", s.name() + " w=" + word_string(g, w), params, [&](json& wit) {
            FlagVariety fv(g, s.levi);
            const auto& par = fv.parabolic();
            const WeylElement v = par.min_rep(g.multiply(g.longest(), w));
            const auto dists = min_connecting_degrees(fv, v);
            std::size_t bad = 0;
            for (std::size_t u = 0; u < fv.num_points(); ++u) {
              const Degree d = seidel_degree(fv, w, fv.rep(u));
              if (d == dists[u]) continue;
              if (bad++ == 0)
                wit["counterexample"] = {{"u", word_string(g, fv.rep(u))},
                                         {"seidel_degree", d.to_string()},
                                         {"min_degree", dists[u].to_string()}};
            }
            wit["checked"] = fv.num_points();
            wit["mismatches"] = bad;
            return bad == 0;
          })};
    });
  }
}

void curve_nbhd_tasks(const SpaceSpec& s, const WeylGroup& g, int bound, std::vector<Task>& tasks) {
  for (Side side : {Side::Opposite, Side::Schubert}) {
    tasks.push_back([s, &g, bound, side] {
      const std::string sname = side == Side::Opposite ? "opposite" : "schubert";
      json params = space_params(s);
      params["side"] = sname;
      params["max_degree"] = bound;
      return std::vector{run_case("curve-nbhd", s.name() + " " + sname, params, [&](json& wit) {
        FlagVariety fv(g, s.levi);
        const auto& par = fv.parabolic();
        std::size_t checked = 0, bad = 0;
        for (const Degree& d : degrees_up_to(fv.degree_size(), bound))
          for (std::size_t w = 0; w < fv.num_points(); ++w) {
            const bool opp = side == Side::Opposite;
            const Bitset start = opp ? par.up(w) : par.down(w);
            const std::size_t got = fv.point(curve_nbhd_weyl(fv, fv.rep(w), side, d, false));
            const Bitset oracle = combinatorial_nbhd(fv, start, d);
            ++checked;
            if ((opp ? par.up(got) : par.down(got)) == oracle) continue;
            if (bad++ == 0)
              wit["counterexample"] = {{"w", word_string(g, fv.rep(w))},
                                       {"degree", d.to_string()},
                                       {"greedy", word_string(g, fv.rep(got))}};
          }
        wit["checked"] = checked;
        wit["mismatches"] = bad;
        return bad == 0;
      })};
    });
  }
}

void dualpoint_tasks(const SpaceSpec& s, const WeylGroup& g, std::vector<Task>& tasks) {
  for (const auto& ce : cominuscule_elements(g)) {
    tasks.push_back([s, &g, ce] {
      json params = space_params(s);
      params["gamma"] = ce.gamma + 1;
      return std::vector{run_case("dualpoint", s.name() + " gamma=" + std::to_string(ce.gamma + 1),
                                  params, [&](json& wit) {
                                    FlagVariety fv(g, s.levi);
                                    wit["w"] = word_string(g, ce.element);
                                    return dualpoint_check(fv, ce.gamma);
                                  })};
    });
  }
}

void nbhd_projection_tasks(const SpaceSpec& s, const WeylGroup& g, int bound,
                           std::vector<Task>& tasks) {
  const std::uint32_t p = mask_of(s.levi);
  const std::uint32_t full = (1u << s.rank) - 1;
  for (std::uint32_t q1 = 0; q1 < full; ++q1)
    for (std::uint32_t q2 = q1 + 1; q2 < full; ++q2) {
      if ((q1 & p) != p || (q2 & p) != p || (q1 & q2) != p || q1 == p || q2 == p) continue;
      tasks.push_back([s, &g, bound, q1, q2] {
        const auto l1 = levi_of(q1, s.rank), l2 = levi_of(q2, s.rank);
        json params = space_params(s);
        json j1 = json::array(), j2 = json::array();
        for (int i : l1) j1.push_back(i + 1);
        for (int i : l2) j2.push_back(i + 1);
        params["q1"] = j1;
        params["q2"] = j2;
        params["max_degree"] = bound;
        FlagVariety probe1(g, l1), probe2(g, l2);
        return std::vector{run_case(
            "nbhd-projection", s.name() + " = " + probe1.name() + " x " + probe2.name(), params,
            [&](json& wit) {
              FlagVariety x(g, s.levi), y1(g, l1), y2(g, l2);
              const auto dx = distance_table(x), d1 = distance_table(y1), d2 = distance_table(y2);
              std::size_t checked = 0, bad = 0;
              for (const Degree& d : degrees_up_to(x.degree_size(), bound))
                for (std::size_t u = 0; u < x.num_points(); ++u) {
                  ++checked;
                  const auto r = nbhd_projection_check(x, y1, y2, x.rep(u), d, dx, d1, d2);
                  if (r.ok()) continue;
                  if (bad++ == 0)
                    wit["counterexample"] = {{"u", word_string(g, x.rep(u))},
                                             {"degree", d.to_string()},
                                             {"fixed_sets_equal", r.fixed_sets_equal},
                                             {"dist_projection", r.dist_projection}};
                }
              wit["checked"] = checked;
              wit["mismatches"] = bad;
              return bad == 0;
            })};
      });
    }
}

void seidel_tasks(const SpaceSpec& s, const WeylGroup& g, const HarnessConfig& cfg,
                  std::vector<Task>& tasks) {
  const std::size_t limit = cfg.max_quantum_points;
  const std::uint64_t seed = cfg.seed;
  tasks.push_back([s, &g, limit, seed] {
    std::vector<VerificationCase> out;
    FlagVariety fv(g, s.levi);
    auto guard = [&] {
      if (fv.num_points() > limit)
        throw ResourceError(fv.name() + " has " + std::to_string(fv.num_points()) +
                            " fixed points; the quantum bound is " + std::to_string(limit));
    };
    Localization loc(fv);
    std::unique_ptr<QuantumRing> ring;
    for (WeylElement w : cominuscule_group(g)) {
      if (w == g.identity()) continue;
      json params = space_params(s);
      params["w"] = word_string(g, w);
      out.push_back(
          run_case("seidel", s.name() + " w=" + word_string(g, w), params, [&](json& wit) {
            guard();
            if (!ring) ring = std::make_unique<QuantumRing>(fv);
            std::size_t bad = 0;
            for (std::size_t u = 0; u < fv.num_points(); ++u) {
              const auto r = verify_seidel_qh(*ring, loc, w, u);
              if (r.ok()) continue;
              if (bad++ == 0)
                wit["counterexample"] = {{"u", word_string(g, fv.rep(u))},
                                         {"degree", r.degree.to_string()},
                                         {"failures", r.failures}};
            }
            wit["checked"] = fv.num_points();
            wit["mismatches"] = bad;
            return bad == 0;
          }));
    }
    json params = space_params(s);
    params["seed"] = seed;
    out.push_back(run_case("seidel", s.name() + " associativity", params, [&](json& wit) {
      guard();
      if (!ring) ring = std::make_unique<QuantumRing>(fv);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, fv.num_points() - 1);
      const std::size_t n = fv.num_points(), ds = fv.degree_size();
      for (int t = 0; t < 10; ++t) {
        const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        const QClass left = ring->product(ring->product(a, b), QClass::schubert(n, c, ds));
        const QClass right = ring->product(QClass::schubert(n, a, ds), ring->product(b, c));
        if (left == right) continue;
        wit["counterexample"] = {{"a", word_string(g, fv.rep(a))},
                                 {"b", word_string(g, fv.rep(b))},
                                 {"c", word_string(g, fv.rep(c))}};
        return false;
      }
      wit["triples"] = 10;
      return true;
    }));
    return out;
  });
}

void rigidity_tasks(const SpaceSpec& s, const WeylGroup& g, std::vector<Task>& tasks) {
  tasks.push_back([s, &g] {
    return std::vector{run_case("rigidity", s.name(), space_params(s), [&](json& wit) {
      FlagVariety fv(g, s.levi);
      Localization loc(fv);
      const RigidityReport r = rigidity_scan(fv, richardson_family(loc, false));
      wit["distinct_members"] = r.members.size();
      json pairs = json::array();
      for (const auto& p : r.pairs)
        pairs.push_back({{"a", r.members[p.a].label},
                         {"b", r.members[p.b].label},
                         {"constant", rational_string(p.constant)}});
      wit["proportional_pairs"] = pairs;
      wit["convexity_checked"] = r.convexity_checked;
      wit["convexity_violations"] = r.convexity_violations;
      return r.ok();
    })};
  });
}

void projrich_tasks(const SpaceSpec& s, const WeylGroup& g, std::vector<Task>& tasks) {
  tasks.push_back([s, &g] {
    return std::vector{run_case("projrich", s.name(), space_params(s), [&](json& wit) {
      FlagVariety full(g, std::vector<int>{});
      FlagVariety fv(g, s.levi);
      Localization loc(full);
      const DivisorScan scan = divisor_scan(loc, fv);
      bool consistent = true;
      json rows = json::array(), all_fixed = json::array();
      for (const auto& r : scan.rows) {
        const bool ok = !r.cls.is_zero() && r.cls.support() == r.fixed;
        consistent = consistent && ok;
        rows.push_back({{"beta", r.beta + 1},
                        {"fixed_points", r.fixed.count()},
                        {"all_fixed", r.all_fixed},
                        {"support_matches", ok}});
        if (r.all_fixed) all_fixed.push_back(r.beta + 1);
      }
      json pairs = json::array();
      for (const auto& p : scan.pairs)
        pairs.push_back({{"beta1", p.beta1 + 1},
                         {"beta2", p.beta2 + 1},
                         {"constant", rational_string(p.constant)}});
      wit["points"] = fv.num_points();
      wit["divisors"] = rows;
      wit["proportional_pairs"] = pairs;
      wit["all_fixed_divisors"] = all_fixed;
      wit["equal_pair"] = scan.any_equal_pair();
      if (kEqualPairCases.contains(s.label)) return consistent && scan.any_equal_pair();
      if (kAllFixedCases.contains(s.label))
        return consistent && scan.pairs.empty() && scan.any_all_fixed();
      return consistent;
    })};
  });
}

void psi_tasks(const SpaceSpec& s, const WeylGroup& g, int order, std::vector<Task>& tasks) {
  tasks.push_back([s, &g, order] {
    json params = space_params(s);
    params["q_order"] = order;
    std::vector<VerificationCase> out;
    FlagVariety fv(g, s.levi);
    std::optional<PsiMatrix> psi;
    out.push_back(run_case("psi", s.name() + " round trip", params, [&](json& wit) {
      psi = psi_matrix(fv, order);
      const PsiMatrix inv = invert_psi(*psi);
      const bool right = (*psi * inv).is_identity(), left = (inv * *psi).is_identity();
      wit["psi_inverse"] = right;
      wit["inverse_psi"] = left;
      return right && left;
    }));
    out.push_back(run_case("psi", s.name() + " seidel rhs", params, [&](json& wit) {
      if (!psi) psi = psi_matrix(fv, order);
      std::size_t checked = 0, bad = 0;
      for (WeylElement w : cominuscule_group(g)) {
        if (w == g.identity()) continue;
        for (std::size_t u = 0; u < fv.num_points(); ++u) {
          ++checked;
          if (seidel_qk_check(fv, *psi, w, u)) continue;
          if (bad++ == 0)
            wit["counterexample"] = {{"w", word_string(g, w)}, {"u", word_string(g, fv.rep(u))}};
        }
      }
      wit["checked"] = checked;
      wit["mismatches"] = bad;
      return bad == 0;
    }));
    return out;
  });
}

void fully_definite_tasks(const SpaceSpec& s, const WeylGroup& g, std::vector<Task>& tasks) {
  tasks.push_back([s, &g] {
    return std::vector{run_case("fully-definite", s.name(), space_params(s), [&](json& wit) {
      FlagVariety fv(g, s.levi);
      wit["points"] = fv.num_points();
      return fully_definite(fv);
    })};
  });
}

void comin_group_tasks(const SpaceSpec& s, const WeylGroup& g, std::vector<Task>& tasks) {
  tasks.push_back([s, &g] {
    json params = space_params(s);
    params.erase("parabolic");
    return std::vector{run_case("comin-group", g.roots().name(), params, [&](json& wit) {
      const auto comin = cominuscule_group(g);
      const std::set<WeylElement> set(comin.begin(), comin.end());
      bool closed = true;
      for (WeylElement a : comin) {
        closed = closed && set.contains(g.inverse(a));
        for (WeylElement b : comin) closed = closed && set.contains(g.multiply(a, b));
      }
      const std::int64_t index = coweight_quotient_order(g.roots());
      json elems = json::array();
      for (WeylElement a : comin) elems.push_back(word_string(g, a));
      wit["elements"] = elems;
      wit["closed"] = closed;
      wit["coweight_index"] = index;
      return closed && static_cast<std::int64_t>(comin.size()) == index;
    })};
  });
}

std::vector<SpaceSpec> filter(const std::vector<SpaceSpec>& in, const HarnessConfig& c) {
  std::vector<SpaceSpec> out;
  for (const auto& s : in)
    if ((!c.family || s.family == *c.family) && (!c.rank || s.rank == *c.rank)) out.push_back(s);
  return out;
}

std::vector<SpaceSpec> filter_types(const std::vector<SpaceSpec>& in,
                                    const std::set<std::string>& types) {
  std::vector<SpaceSpec> out;
  for (const auto& s : in)
    if (types.contains(std::string(1, family_letter(s.family)) + std::to_string(s.rank)))
      out.push_back(s);
  return out;
}

std::vector<SpaceSpec> suite_defaults(const std::string& suite) {
  using F = Family;
  if (suite == "curve-nbhd")
    return filter_types(default_grid(), {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"});
  if (suite == "nbhd-projection") return filter_types(default_grid(), {"A2", "A3", "B2", "B3"});
  if (suite == "seidel")
    return {{F::A, 1, {}, ""},     {F::A, 2, {}, ""}, {F::A, 3, {}, ""}, {F::A, 2, {1}, ""},
            {F::A, 3, {0, 2}, ""}, {F::B, 2, {}, ""}, {F::C, 2, {0}, ""}};
  if (suite == "rigidity")
    return {{F::A, 2, {}, ""}, {F::A, 3, {}, ""}, {F::A, 3, {0, 2}, ""}, {F::B, 2, {}, ""}};
  if (suite == "psi")
    return {{F::A, 1, {}, ""}, {F::A, 2, {1}, ""}, {F::A, 3, {0, 2}, ""}, {F::A, 2, {}, ""}};
  if (suite == "projrich") return projrich_cases();
  if (suite == "comin-group") {
    std::vector<SpaceSpec> out;
    for (const auto& s : default_grid())
      if (std::none_of(out.begin(), out.end(), [&](const SpaceSpec& o) {
            return o.family == s.family && o.rank == s.rank;
          }))
        out.push_back({s.family, s.rank, {}, ""});
    return out;
  }
  return default_grid();
}

}  // namespace

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string SpaceSpec::name() const {
  std::string s = std::string(1, family_letter(family)) + std::to_string(rank) + "/{";
  for (std::size_t i = 0; i < levi.size(); ++i) s += (i ? "," : "") + std::to_string(levi[i] + 1);
  s += "}";
  if (!label.empty()) s += " (" + label + ")";
  return s;
}

std::size_t Report::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [&](const auto& c) { return c.status == s; }));
}

int Report::exit_code() const {
  return count(CaseStatus::Fail) == 0 ? 0 : 1;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "min-degree", "curve-nbhd", "dualpoint", "nbhd-projection", "seidel",
      "rigidity",   "projrich",   "psi",       "fully-definite",  "comin-group"};
  return names;
}

std::vector<SpaceSpec> projrich_cases() {
  return {{Family::C, 2, {0}, "LG24"},
          {Family::D, 4, {0, 1, 2}, "OG48"},
          {Family::B, 4, {1, 2, 3}, "B4Q7"},
          {Family::D, 5, {1, 2, 3, 4}, "D5Q8"},
          {Family::A, 4, {1, 2}, "Fl145"}};
}

std::vector<SpaceSpec> default_grid() {
  std::vector<SpaceSpec> out;
  auto add = [&](SpaceSpec s) {
    s.label.clear();
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  const std::vector<std::pair<Family, int>> small = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                                     {Family::B, 2}, {Family::B, 3}, {Family::C, 2},
                                                     {Family::C, 3}, {Family::G, 2}};
  for (auto [f, n] : small)
    for (std::uint32_t m = 0; m + 1 < (1u << n); ++m) add({f, n, levi_of(m, n), ""});
  const std::vector<std::pair<Family, int>> large = {{Family::A, 4}, {Family::B, 4},
                                                     {Family::C, 4}, {Family::D, 4},
                                                     {Family::D, 5}, {Family::F, 4}};
  for (auto [f, n] : large) {
    add({f, n, {}, ""});
    const std::uint32_t full = (1u << n) - 1;
    for (int i = 0; i < n; ++i) add({f, n, levi_of(full & ~(1u << i), n), ""});
    for (const auto& c : projrich_cases())
      if (c.family == f && c.rank == n) add(c);
  }
  return out;
}

std::vector<SpaceSpec> suite_spaces(const std::string& suite, const HarnessConfig& c) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite '" + suite + "'");
  if (c.case_name) {
    if (suite != "projrich") throw UsageError("--case applies to the projrich suite only");
    for (const auto& s : projrich_cases())
      if (s.label == *c.case_name) return {s};
    throw UsageError("unknown projrich case '" + *c.case_name + "'");
  }
  if (c.levi) {
    if (!c.family || !c.rank) throw UsageError("--parabolic needs --type and --rank");
    SpaceSpec s{*c.family, *c.rank, *c.levi, ""};
    if (suite == "projrich")
      for (const auto& pc : projrich_cases())
        if (pc == s) s.label = pc.label;
    return {s};
  }
  auto out = filter(suite_defaults(suite), c);
  if (out.empty() && (c.family || c.rank)) {
    out = filter(default_grid(), c);
    if (suite == "comin-group" && !out.empty()) out.resize(1);
  }
  if (out.empty() && c.family && c.rank) out.push_back({*c.family, *c.rank, {}, ""});
  return out;
}

Report run_suites(const HarnessConfig& config) {
  const auto& suites = config.suites.empty() ? suite_names() : config.suites;
  std::vector<std::pair<std::string, std::vector<SpaceSpec>>> plan;
  for (const auto& s : suites) plan.emplace_back(s, suite_spaces(s, config));

  // Groups are enumerated (or loaded) before any task starts and are then
  // only read.
  Groups groups;
  for (const auto& [suite, spaces] : plan)
    for (const auto& s : spaces) {
      auto& slot = groups[{s.family, s.rank}];
      if (!slot)
        slot = std::make_unique<WeylGroup>(load_or_build_group(s.family, s.rank, config.cache_dir,
                                                               nullptr, config.max_group_size));
      const std::uint32_t full = (1u << s.rank) - 1;
      for (int i : s.levi)
        if (i < 0 || i >= s.rank) throw UsageError("parabolic index out of range in " + s.name());
      if (mask_of(s.levi) == full && suite != "comin-group")
        throw UsageError(s.name() + " is a point");
    }

  std::vector<Task> tasks;
  for (const auto& [suite, spaces] : plan)
    for (const auto& s : spaces) {
      const WeylGroup& g = *groups.at({s.family, s.rank});
      if (suite == "min-degree")
        min_degree_tasks(s, g, tasks);
      else if (suite == "curve-nbhd")
        curve_nbhd_tasks(s, g, config.max_degree.value_or(3), tasks);
      else if (suite == "dualpoint")
        dualpoint_tasks(s, g, tasks);
      else if (suite == "nbhd-projection")
        nbhd_projection_tasks(s, g, config.max_degree.value_or(2), tasks);
      else if (suite == "seidel")
        seidel_tasks(s, g, config, tasks);
      else if (suite == "rigidity")
        rigidity_tasks(s, g, tasks);
      else if (suite == "projrich")
        projrich_tasks(s, g, tasks);
      else if (suite == "psi")
        psi_tasks(s, g, config.q_order, tasks);
      else if (suite == "fully-definite")
        fully_definite_tasks(s, g, tasks);
      else if (suite == "comin-group")
        comin_group_tasks(s, g, tasks);
    }

  std::vector<std::vector<VerificationCase>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = tasks[i]();
  };
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, tasks.size())));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();

  Report report;
  for (auto& r : results)
    for (auto& c : r) report.cases.push_back(std::move(c));
  return report;
}

json report_json(const Report& report, bool with_timing) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    json j;
    j["suite"] = c.suite;
    j["case"] = c.id;
    j["status"] = status_name(c.status);
    j["params"] = c.params;
    j["witness"] = c.witness;
    if (with_timing) j["millis"] = c.millis;
    cases.push_back(std::move(j));
  }
  json out;
  out["summary"] = {{"pass", report.count(CaseStatus::Pass)},
                    {"fail", report.count(CaseStatus::Fail)},
                    {"skipped", report.count(CaseStatus::Skipped)}};
  out["cases"] = std::move(cases);
  return out;
}

std::string report_markdown(const Report& report, bool with_timing) {
  std::ostringstream os;
  os << "# Verification report\n\n"
     << report.count(CaseStatus::Pass) << " passed, " << report.count(CaseStatus::Fail)
     << " failed, " << report.count(CaseStatus::Skipped) << " skipped.\n\n"
     << "| suite | case | status |" << (with_timing ? " ms |" : "") << "\n"
     << "|---|---|---|" << (with_timing ? "---|" : "") << "\n";
  for (const auto& c : report.cases) {
    os << "| " << c.suite << " | " << c.id << " | " << status_name(c.status) << " |";
    if (with_timing) os << " " << c.millis << " |";
    os << "\n";
  }
  bool header = false;
  for (const auto& c : report.cases) {
    if (c.status == CaseStatus::Pass) continue;
    if (!header) os << "\n## Failed and skipped cases\n";
    header = true;
    os << "\n### " << c.suite << ": " << c.id << " (" << status_name(c.status) << ")\n\n"
       << "```json\n"
       << json{{"params", c.params}, {"witness", c.witness}}.dump(2) << "\n```\n";
  }
  return os.str();
}

std::vector<SeidelTableRow> seidel_extended_table(const FlagVariety& fv, int e_bound) {
  if (e_bound < 0) throw InputError("negative degree bound");
  const auto& g = fv.group();
  std::vector<SeidelTableRow> rows;
  for (WeylElement w : cominuscule_group(g)) {
    if (w == g.identity()) continue;
    for (std::size_t u = 0; u < fv.num_points(); ++u) {
      const Degree d = seidel_degree(fv, w, fv.rep(u));
      for (const Degree& e : degrees_of_total_at_most(fv.degree_size(), e_bound)) {
        const TranslatedNbhd t = gamma_e_translated(fv, w, fv.rep(u), e);
        rows.push_back({w, u, d, e, t.u_prime, t.fixed});
      }
    }
  }
  return rows;
}

json seidel_table_json(const FlagVariety& fv, const std::vector<SeidelTableRow>& rows) {
  const auto& g = fv.group();
  json out;
  out["variety"] = fv.name();
  out["label"] = "conjectural RHS";
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"w", word_string(g, r.w)},
                   {"u", word_string(g, fv.rep(r.u))},
                   {"d", r.d.to_string()},
                   {"e", r.e.to_string()},
                   {"nbhd", word_string(g, r.nbhd)},
                   {"translated_fixed_points", bitset_words(fv, r.fixed)}});
  out["rows"] = std::move(arr);
  return out;
}

std::string seidel_table_markdown(const FlagVariety& fv, const std::vector<SeidelTableRow>& rows) {
  const auto& g = fv.group();
  std::ostringstream os;
  os << "# Conjectural RHS: Gamma_e(w^-1.X^(wu)) on " << fv.name() << "\n\n"
     << "| w | u | d(w,u) | e | Gamma_e(X^(wu)) | w^-1 . fixed points |\n"
     << "|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << word_string(g, r.w) << " | " << word_string(g, fv.rep(r.u)) << " | "
       << r.d.to_string() << " | " << r.e.to_string() << " | " << word_string(g, r.nbhd) << " | ";
    bool first = true;
    for (const auto& w : bitset_words(fv, r.fixed)) {
      os << (first ? "" : " ") << w.get<std::string>();
      first = false;
    }
    os << " |\n";
  }
  return os.str();
}

std::vector<int> parse_root_list(const std::string& text, int rank) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad simple root index '" + item + "'");
    }
    if (used != item.size()) throw InputError("bad simple root index '" + item + "'");
    if (v < 1 || v > rank)
      throw InputError("simple root index " + item + " outside 1.." + std::to_string(rank));
    out.push_back(v - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace flagcalc
