#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "flagcalc/curves.hpp"
#include "flagcalc/poly.hpp"

namespace flagcalc {

/// Linear form of a root (variables are the simple roots).
Poly root_poly(const RootSystem& rs, int root_index);
/// Images x(alpha_i) of the variables under x, as linear forms.
std::vector<IntVector> variable_images(const WeylGroup& g, WeylElement x);
/// x acting on a polynomial in the simple roots.
Poly act_on_poly(const WeylGroup& g, WeylElement x, const Poly& p);

/// Root indices v.(Phi^- minus Phi_P^-): the T-weights of the tangent space at vP.
std::vector<int> tangent_weights(const FlagVariety& fv, std::size_t point);
Poly euler_class(const FlagVariety& fv, std::size_t point);

/// Pairing of every tangent weight at every fixed point with 2 rho^vee is
/// negative.
bool fully_definite(const FlagVariety& fv);
/// <beta, 2 rho^vee> for a root.
int pair_with_two_rho_vee(const RootSystem& rs, int root_index);

/// [X^u]_v on G/B by the subword formula over a reduced word of v.
Poly billey_restriction(const WeylGroup& g, WeylElement u, const Word& word_of_v);
Poly billey_restriction(const WeylGroup& g, WeylElement u, WeylElement v);

/// Restrictions at every point of W^P (indexed by position).
struct LocalizedClass {
  std::vector<Poly> values;

  LocalizedClass() = default;
  explicit LocalizedClass(std::size_t n) : values(n) {}
  std::size_t size() const { return values.size(); }
  const Poly& operator[](std::size_t p) const { return values[p]; }
  Poly& operator[](std::size_t p) { return values[p]; }
  bool is_zero() const;
  Bitset support() const;
  LocalizedClass& operator+=(const LocalizedClass& o);
  LocalizedClass& operator-=(const LocalizedClass& o);
  friend LocalizedClass operator+(LocalizedClass a, const LocalizedClass& b) { return a += b; }
  friend LocalizedClass operator-(LocalizedClass a, const LocalizedClass& b) { return a -= b; }
  /// Pointwise product.
  friend LocalizedClass operator*(const LocalizedClass& a, const LocalizedClass& b);
  friend LocalizedClass operator*(const Poly& c, const LocalizedClass& a);
  bool operator==(const LocalizedClass&) const = default;
};

/// GKM divisibility along every moment-graph edge.
bool satisfies_gkm(const FlagVariety& fv, const LocalizedClass& c);

/// (x.sigma)_p = x(sigma_{x^{-1} p}).
LocalizedClass translate_class(const FlagVariety& fv, WeylElement x, const LocalizedClass& c);

/// Exact sum of sigma_k / (product of the roots in denominators[k]).
/// Throws ConventionError when the sum is not a polynomial.
Poly sum_over_roots(const RootSystem& rs, const std::vector<Poly>& numerators,
                    const std::vector<std::vector<int>>& denominators);

/// Cached opposite Schubert classes of one flag variety. Safe to share
/// between threads.
class Localization {
 public:
  explicit Localization(const FlagVariety& fv);

  const FlagVariety& variety() const { return *fv_; }
  std::size_t num_points() const { return fv_->num_points(); }

  /// [X^u], u given by position in W^P.
  const LocalizedClass& opposite(std::size_t u) const;
  /// [X_w] = w_0.[X^{(w_0 w)^P}].
  LocalizedClass schubert(std::size_t w) const;
  /// [X_w^u] = [X_w].[X^u]; EmptyVarietyError unless u <= w.
  LocalizedClass richardson(std::size_t u, std::size_t w) const;
  LocalizedClass of(const SchubertDescriptor& d) const;

  /// sigma = sum_u c_u [X^u]; coefficients by position.
  std::vector<Poly> expand(const LocalizedClass& sigma) const;
  LocalizedClass reconstruct(const std::vector<Poly>& coeffs) const;

  /// Localization integral over the variety.
  Poly integrate(const LocalizedClass& sigma) const;

 private:
  const FlagVariety* fv_;
  mutable std::vector<std::unique_ptr<LocalizedClass>> cache_;
  mutable std::mutex mutex_;
};

/// pi_* from `source` (finer parabolic) to `target` (coarser parabolic).
LocalizedClass pushforward(const FlagVariety& source, const LocalizedClass& sigma,
                           const FlagVariety& target);

/// c with sigma = c.tau, or nullopt. Both zero is an input error.
std::optional<Rational> proportionality(const LocalizedClass& sigma, const LocalizedClass& tau);

struct ScanMember {
  std::string label;
  Bitset fixed;
  int dimension = 0;
  LocalizedClass cls;
  // Richardson endpoints (positions) when untranslated Richardson.
  std::optional<std::pair<std::size_t, std::size_t>> interval;
};

struct ProportionalPair {
  std::size_t a, b;
  Rational constant;
};

struct RigidityReport {
  std::vector<ScanMember> members;  // after deduplication
  std::vector<ProportionalPair> pairs;
  std::size_t convexity_checked = 0;
  std::size_t convexity_violations = 0;
  bool ok() const { return pairs.empty() && convexity_violations == 0; }
};

/// All Richardson varieties X_w^u of the variety, optionally with their
/// Weyl translates.
std::vector<ScanMember> richardson_family(const Localization& loc, bool with_translates);

/// Proportional pairs among distinct members (deduplicated by fixed set and
/// dimension) plus the interval-containment report for Richardson members.
RigidityReport rigidity_scan(const FlagVariety& fv, std::vector<ScanMember> family);

}  // namespace flagcalc
