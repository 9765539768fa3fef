#include "flagcalc/equivariant.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "flagcalc/errors.hpp"

namespace flagcalc {

Poly root_poly(const RootSystem& rs, int root_index) {
  return Poly::linear(rs.root(root_index));
}

std::vector<IntVector> variable_images(const WeylGroup& g, WeylElement x) {
  std::vector<IntVector> images;
  for (int i = 0; i < g.rank(); ++i) images.push_back(g.roots().root(g.act(x, i)));
  return images;
}

Poly act_on_poly(const WeylGroup& g, WeylElement x, const Poly& p) {
  if (x == g.identity() || p.is_constant()) return p;
  auto images = variable_images(g, x);
  return p.substitute(images);
}

std::vector<int> tangent_weights(const FlagVariety& fv, std::size_t point) {
  const auto& g = fv.group();
  const auto& rs = g.roots();
  const auto& par = fv.parabolic();
  WeylElement v = fv.rep(point);
  std::vector<int> out;
  for (int b = 0; b < rs.num_positive(); ++b) {
    if (par.is_levi_root(b)) continue;
    out.push_back(g.act(v, rs.negate(b)));
  }
  return out;
}

Poly euler_class(const FlagVariety& fv, std::size_t point) {
  Poly e(1);
  const auto& rs = fv.group().roots();
  for (int r : tangent_weights(fv, point)) e = e.times_linear(rs.root(r));
  return e;
}

int pair_with_two_rho_vee(const RootSystem& rs, int root_index) {
  int s = 0;
  for (int g = 0; g < rs.num_positive(); ++g) s += rs.pair(rs.root(root_index), rs.coroot(g));
  return s;
}

bool fully_definite(const FlagVariety& fv) {
  const auto& g = fv.group();
  const auto& rs = g.roots();
  const int n = rs.rank();
  for (std::size_t p = 0; p < fv.num_points(); ++p) {
    // v(2 rho^vee) is the sum of the coroots of v(Phi^+).
    WeylElement v = fv.rep(p);
    IntVector cocharacter(n, 0);
    for (int b = 0; b < rs.num_positive(); ++b) {
      const auto& c = rs.coroot(g.act(v, b));
      for (int i = 0; i < n; ++i) cocharacter[i] += c[i];
    }
    for (int w : tangent_weights(fv, p))
      if (rs.pair(rs.root(w), cocharacter) >= 0) return false;
  }
  return true;
}

Poly billey_restriction(const WeylGroup& g, WeylElement u, const Word& word) {
  const int l = static_cast<int>(word.size());
  const int lu = g.length(u);
  if (lu > l) return {};
  const auto& rs = g.roots();
  std::vector<int> beta(l);
  WeylElement x = g.identity();
  for (int j = 0; j < l; ++j) {
    beta[j] = g.act(x, word[j]);
    x = g.right_simple(x, word[j]);
  }
  std::vector<std::unordered_map<std::uint32_t, Poly>> memo(l + 1);
  std::function<Poly(int, WeylElement)> f = [&](int j, WeylElement y) -> Poly {
    if (lu - g.length(y) > l - j) return {};
    if (j == l) return y == u ? Poly(1) : Poly();
    auto it = memo[j].find(y.index);
    if (it != memo[j].end()) return it->second;
    Poly r = f(j + 1, y);
    WeylElement ys = g.right_simple(y, word[j]);
    if (g.length(ys) > g.length(y) && g.bruhat_leq(ys, u)) {
      Poly tail = f(j + 1, ys);
      if (!tail.is_zero()) r += tail.times_linear(rs.root(beta[j]));
    }
    memo[j].emplace(y.index, r);
    return r;
  };
  return f(0, g.identity());
}

Poly billey_restriction(const WeylGroup& g, WeylElement u, WeylElement v) {
  if (!g.bruhat_leq(u, v)) return {};
  return billey_restriction(g, u, g.reduced_word(v));
}

bool LocalizedClass::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Poly& p) { return p.is_zero(); });
}

Bitset LocalizedClass::support() const {
  Bitset b(values.size());
  for (std::size_t p = 0; p < values.size(); ++p)
    if (!values[p].is_zero()) b.set(p);
  return b;
}

LocalizedClass& LocalizedClass::operator+=(const LocalizedClass& o) {
  if (o.size() != size()) throw UsageError("classes on different varieties");
  for (std::size_t p = 0; p < size(); ++p) values[p] += o.values[p];
  return *this;
}

LocalizedClass& LocalizedClass::operator-=(const LocalizedClass& o) {
  if (o.size() != size()) throw UsageError("classes on different varieties");
  for (std::size_t p = 0; p < size(); ++p) values[p] -= o.values[p];
  return *this;
}

LocalizedClass operator*(const LocalizedClass& a, const LocalizedClass& b) {
  if (a.size() != b.size()) throw UsageError("classes on different varieties");
  LocalizedClass r(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p].is_zero() || b[p].is_zero()) continue;
    r[p] = a[p] * b[p];
  }
  return r;
}

LocalizedClass operator*(const Poly& c, const LocalizedClass& a) {
  LocalizedClass r(a.size());
  if (c.is_zero()) return r;
  for (std::size_t p = 0; p < a.size(); ++p)
    if (!a[p].is_zero()) r[p] = c * a[p];
  return r;
}

bool satisfies_gkm(const FlagVariety& fv, const LocalizedClass& c) {
  const auto& rs = fv.group().roots();
  for (const auto& e : fv.graph().edges) {
    Poly diff = c[e.a] - c[e.b];
    if (diff.is_zero()) continue;
    if (!diff.divide_linear(rs.root(e.weight))) return false;
  }
  return true;
}

LocalizedClass translate_class(const FlagVariety& fv, WeylElement x, const LocalizedClass& c) {
  const auto& g = fv.group();
  if (x == g.identity()) return c;
  const WeylElement xinv = g.inverse(x);
  const auto images = variable_images(g, x);
  LocalizedClass out(c.size());
  for (std::size_t p = 0; p < c.size(); ++p) {
    const Poly& src = c[fv.point(g.multiply(xinv, fv.rep(p)))];
    out[p] = src.is_constant() ? src : src.substitute(images);
  }
  return out;
}

Poly sum_over_roots(const RootSystem& rs, const std::vector<Poly>& numerators,
                    const std::vector<std::vector<int>>& denominators) {
  // Group terms by their multiset of positive roots.
  std::map<std::vector<int>, Poly> grouped;
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    if (numerators[k].is_zero()) continue;
    std::vector<int> roots;
    bool negative = false;
    for (int r : denominators[k]) {
      if (rs.is_positive(r)) {
        roots.push_back(r);
      } else {
        roots.push_back(rs.negate(r));
        negative = !negative;
      }
    }
    std::sort(roots.begin(), roots.end());
    Poly& slot = grouped[roots];
    if (negative) {
      slot -= numerators[k];
    } else {
      slot += numerators[k];
    }
  }
  std::map<int, int> lcd;
  for (const auto& [roots, num] : grouped) {
    if (num.is_zero()) continue;
    std::map<int, int> mult;
    for (int r : roots) ++mult[r];
    for (auto [r, m] : mult) lcd[r] = std::max(lcd[r], m);
  }
  Poly total;
  for (const auto& [roots, num] : grouped) {
    if (num.is_zero()) continue;
    std::map<int, int> missing = lcd;
    for (int r : roots) --missing[r];
    Poly term = num;
    for (auto [r, m] : missing)
      for (int i = 0; i < m; ++i) term = term.times_linear(rs.root(r));
    total += term;
  }
  for (auto [r, m] : lcd) {
    for (int i = 0; i < m; ++i) {
      auto q = total.divide_linear(rs.root(r));
      if (!q) throw ConventionError("localization sum is not a polynomial");
      total = std::move(*q);
    }
  }
  return total;
}

Localization::Localization(const FlagVariety& fv) : fv_(&fv), cache_(fv.num_points()) {}

const LocalizedClass& Localization::opposite(std::size_t u) const {
  {
    std::lock_guard lock(mutex_);
    if (cache_.at(u)) return *cache_[u];
  }
  const auto& g = fv_->group();
  const auto& par = fv_->parabolic();
  auto cls = std::make_unique<LocalizedClass>(num_points());
  const WeylElement ue = fv_->rep(u);
  for (std::size_t p = 0; p < num_points(); ++p)
    if (par.leq(u, p)) (*cls)[p] = billey_restriction(g, ue, g.reduced_word(fv_->rep(p)));
  std::lock_guard lock(mutex_);
  if (!cache_[u]) cache_[u] = std::move(cls);
  return *cache_[u];
}

LocalizedClass Localization::schubert(std::size_t w) const {
  const auto& g = fv_->group();
  WeylElement dual = g.multiply(g.longest(), fv_->rep(w));
  return translate_class(*fv_, g.longest(), opposite(fv_->point(dual)));
}

LocalizedClass Localization::richardson(std::size_t u, std::size_t w) const {
  if (!fv_->parabolic().leq(u, w)) throw EmptyVarietyError("Richardson variety with u not <= w");
  return schubert(w) * opposite(u);
}

LocalizedClass Localization::of(const SchubertDescriptor& d) const {
  std::size_t pos = fv_->parabolic().position(d.element);
  LocalizedClass base = d.side == Side::Schubert ? schubert(pos) : opposite(pos);
  if (!d.translation) return base;
  return translate_class(*fv_, *d.translation, base);
}

std::vector<Poly> Localization::expand(const LocalizedClass& sigma) const {
  const auto& g = fv_->group();
  const auto& rs = g.roots();
  const auto& par = fv_->parabolic();
  const std::size_t n = num_points();
  if (sigma.size() != n) throw UsageError("class on a different variety");
  LocalizedClass residual = sigma;
  std::vector<Poly> coeffs(n);
  // Positions are sorted by length, so this is a Bruhat-increasing sweep.
  for (std::size_t u = 0; u < n; ++u) {
    if (residual[u].is_zero()) continue;
    const WeylElement uinv = g.inverse(fv_->rep(u));
    Poly c = residual[u];
    for (int b = 0; b < rs.num_positive(); ++b) {
      if (rs.is_positive(g.act(uinv, b))) continue;
      auto q = c.divide_linear(rs.root(b));
      if (!q) throw ConventionError("Schubert expansion: inexact division");
      c = std::move(*q);
    }
    const LocalizedClass& xu = opposite(u);
    const Bitset& up = par.up(u);
    for (auto p = up.find_first(); p != Bitset::npos; p = up.find_next(p)) residual[p] -= c * xu[p];
    coeffs[u] = std::move(c);
  }
  if (!residual.is_zero()) throw ConventionError("Schubert expansion left a residual");
  return coeffs;
}

LocalizedClass Localization::reconstruct(const std::vector<Poly>& coeffs) const {
  LocalizedClass out(num_points());
  for (std::size_t u = 0; u < coeffs.size(); ++u)
    if (!coeffs[u].is_zero()) out += coeffs[u] * opposite(u);
  return out;
}

Poly Localization::integrate(const LocalizedClass& sigma) const {
  std::vector<std::vector<int>> den;
  for (std::size_t p = 0; p < num_points(); ++p) den.push_back(tangent_weights(*fv_, p));
  return sum_over_roots(fv_->group().roots(), sigma.values, den);
}

LocalizedClass pushforward(const FlagVariety& source, const LocalizedClass& sigma,
                           const FlagVariety& target) {
  const auto& g = source.group();
  if (&g != &target.group()) throw UsageError("pushforward between different groups");
  const std::uint32_t sm = source.parabolic().levi_mask();
  const std::uint32_t tm = target.parabolic().levi_mask();
  if ((sm & tm) != sm) throw UsageError("target parabolic does not contain the source");
  const auto& rs = g.roots();
  std::vector<int> fiber_roots;  // Phi_Q^+ minus Phi_P^+
  for (int b = 0; b < rs.num_positive(); ++b)
    if (target.parabolic().is_levi_root(b) && !source.parabolic().is_levi_root(b))
      fiber_roots.push_back(b);

  std::vector<std::vector<Poly>> nums(target.num_points());
  std::vector<std::vector<std::vector<int>>> dens(target.num_points());
  for (std::size_t y = 0; y < source.num_points(); ++y) {
    WeylElement rep = source.rep(y);
    std::size_t t = target.point(rep);
    if (sigma[y].is_zero()) continue;
    std::vector<int> weights;
    for (int b : fiber_roots) weights.push_back(g.act(rep, rs.negate(b)));
    nums[t].push_back(sigma[y]);
    dens[t].push_back(std::move(weights));
  }
  LocalizedClass out(target.num_points());
  for (std::size_t t = 0; t < target.num_points(); ++t)
    out[t] = sum_over_roots(rs, nums[t], dens[t]);
  return out;
}

std::optional<Rational> proportionality(const LocalizedClass& sigma, const LocalizedClass& tau) {
  if (sigma.size() != tau.size()) throw UsageError("classes on different varieties");
  std::size_t p0 = tau.size();
  for (std::size_t p = 0; p < tau.size(); ++p)
    if (!tau[p].is_zero()) {
      p0 = p;
      break;
    }
  if (p0 == tau.size()) {
    if (sigma.is_zero()) throw InputError("proportionality of two zero classes is undefined");
    return std::nullopt;
  }
  const std::int64_t a = sigma[p0].leading_coefficient();
  const std::int64_t b = tau[p0].leading_coefficient();
  for (std::size_t p = 0; p < tau.size(); ++p)
    if (sigma[p] * b != tau[p] * a) return std::nullopt;
  return Rational(a, b);
}

std::vector<ScanMember> richardson_family(const Localization& loc, bool with_translates) {
  const auto& fv = loc.variety();
  const auto& g = fv.group();
  const auto& par = fv.parabolic();
  std::vector<ScanMember> out;
  for (std::size_t u = 0; u < fv.num_points(); ++u)
    for (std::size_t w = 0; w < fv.num_points(); ++w) {
      if (!par.leq(u, w)) continue;
      ScanMember m;
      m.label = "X_{" + word_string(g, fv.rep(w)) + "}^{" + word_string(g, fv.rep(u)) + "}";
      m.fixed = par.down(w) & par.up(u);
      m.dimension = par.length(w) - par.length(u);
      m.cls = loc.richardson(u, w);
      m.interval = std::make_pair(u, w);
      out.push_back(std::move(m));
    }
  if (!with_translates) return out;
  const std::size_t base = out.size();
  for (std::size_t k = 1; k < g.size(); ++k) {
    WeylElement x = g.element(k);
    for (std::size_t i = 0; i < base; ++i) {
      ScanMember m;
      m.label = word_string(g, x) + "." + out[i].label;
      m.fixed = translate_points(fv, x, out[i].fixed);
      m.dimension = out[i].dimension;
      m.cls = translate_class(fv, x, out[i].cls);
      out.push_back(std::move(m));
    }
  }
  return out;
}

RigidityReport rigidity_scan(const FlagVariety& fv, std::vector<ScanMember> family) {
  RigidityReport report;
  {
    std::map<std::pair<std::vector<std::uint64_t>, int>, bool> seen;
    for (auto& m : family) {
      std::vector<std::uint64_t> blocks;
      boost::to_block_range(m.fixed, std::back_inserter(blocks));
      if (seen.emplace(std::make_pair(std::move(blocks), m.dimension), true).second)
        report.members.push_back(std::move(m));
    }
  }
  const auto& members = report.members;
  // Only classes with equal support can be proportional with nonzero constant.
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> by_support;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(members[i].cls.support(), std::back_inserter(blocks));
    by_support[blocks].push_back(i);
  }
  for (const auto& [key, idx] : by_support)
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        auto c = proportionality(members[idx[i]].cls, members[idx[j]].cls);
        if (c) report.pairs.push_back({idx[i], idx[j], *c});
      }

  const auto& par = fv.parabolic();
  for (const auto& a : members) {
    if (!a.interval) continue;
    for (const auto& b : members) {
      if (!b.interval) continue;
      auto [u, w] = *a.interval;
      auto [u2, w2] = *b.interval;
      bool endpoints = par.leq(u2, u) && par.leq(w, w2);
      bool contained = a.fixed.is_subset_of(b.fixed);
      ++report.convexity_checked;
      if (endpoints != contained) ++report.convexity_violations;
    }
  }
  return report;
}

}  // namespace flagcalc
