#include "flagcalc/projected_richardson.hpp"

#include <future>

#include "flagcalc/errors.hpp"

namespace flagcalc {

Bitset proj_fixed_points(const FlagVariety& target, WeylElement w, WeylElement u) {
  const auto& g = target.group();
  const auto& par = target.parabolic();
  if (!g.bruhat_leq(u, w)) throw EmptyVarietyError("projected Richardson with u not <= w");
  Bitset out(target.num_points());
  for (std::size_t p = 0; p < target.num_points(); ++p)
    for (WeylElement x : par.levi_group()) {
      const WeylElement v = g.multiply(target.rep(p), x);
      if (g.bruhat_leq(u, v) && g.bruhat_leq(v, w)) {
        out.set(p);
        break;
      }
    }
  return out;
}

bool DivisorScan::any_all_fixed() const {
  for (const auto& r : rows)
    if (r.all_fixed) return true;
  return false;
}

bool DivisorScan::any_equal_pair() const {
  for (const auto& p : pairs)
    if (p.constant == Rational(1)) return true;
  return false;
}

DivisorScan divisor_scan(const Localization& full_loc, const FlagVariety& target) {
  const FlagVariety& full = full_loc.variety();
  const auto& g = target.group();
  if (&full.group() != &g || full.parabolic().levi_mask() != 0)
    throw UsageError("divisor scan needs G/B of the same group");
  const WeylElement top = target.parabolic().longest_min_rep();
  const LocalizedClass upper = full_loc.schubert(full.point(top));

  std::vector<std::future<DivisorRow>> jobs;
  for (int beta = 0; beta < g.rank(); ++beta)
    jobs.push_back(std::async(std::launch::async, [&, beta] {
      DivisorRow row;
      row.beta = beta;
      const WeylElement s = g.simple(beta);
      row.fixed = proj_fixed_points(target, top, s);
      row.all_fixed = row.fixed.all();
      row.cls = pushforward(full, upper * full_loc.opposite(full.point(s)), target);
      return row;
    }));
  DivisorScan scan;
  for (auto& j : jobs) scan.rows.push_back(j.get());
  for (std::size_t i = 0; i < scan.rows.size(); ++i)
    for (std::size_t j = i + 1; j < scan.rows.size(); ++j) {
      const auto& a = scan.rows[i].cls;
      const auto& b = scan.rows[j].cls;
      if (a.is_zero() || b.is_zero()) continue;
      if (auto c = proportionality(a, b))
        scan.pairs.push_back({scan.rows[i].beta, scan.rows[j].beta, *c});
    }
  return scan;
}

}  // namespace flagcalc
