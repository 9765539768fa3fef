#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "flagcalc/equivariant.hpp"

namespace flagcalc {

/// Element of QH_T(G/P): for each degree d, the coefficients of q^d [X^u]
/// over the Schubert basis (indexed by position in W^P).
class QClass {
 public:
  QClass() = default;
  explicit QClass(std::size_t num_points) : n_(num_points) {}
  static QClass schubert(std::size_t num_points, std::size_t u, std::size_t degree_size);

  std::size_t num_points() const { return n_; }
  const std::map<Degree, std::vector<Poly>>& terms() const { return terms_; }
  const Poly& coefficient(const Degree& d, std::size_t u) const;
  void add(const Degree& d, std::size_t u, const Poly& c);

  bool is_zero() const { return terms_.empty(); }
  QClass& operator+=(const QClass& o);
  QClass& operator-=(const QClass& o);
  friend QClass operator+(QClass a, const QClass& b) { return a += b; }
  friend QClass operator-(QClass a, const QClass& b) { return a -= b; }
  friend QClass operator*(const Poly& c, const QClass& a);
  /// Multiply by q^e.
  QClass shifted(const Degree& e) const;
  bool operator==(const QClass& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// Equivariant variables set to 0.
  QClass non_equivariant() const;
  /// q set to 0.
  QClass classical() const;

  std::string to_string(const FlagVariety& fv) const;

 private:
  void prune(const Degree& d);
  std::size_t n_ = 0;
  std::map<Degree, std::vector<Poly>> terms_;
};

/// Quantum multiplication on one flag variety. Memoizes structure
/// constants; not safe to share between threads.
class QuantumRing {
 public:
  explicit QuantumRing(const FlagVariety& fv);

  const FlagVariety& variety() const { return *fv_; }

  /// [X^{s_beta}] * [X^u] by the equivariant quantum Chevalley rule.
  /// UsageError if beta lies in the Levi.
  QClass chevalley(int beta, std::size_t u) const;

  /// Coefficient of q^d [X^w] in [X^a] * [X^b].
  Poly structure_constant(std::size_t a, std::size_t b, std::size_t w, const Degree& d);

  QClass product(std::size_t a, std::size_t b);
  /// Bilinear extension. With a bound, a term of degree not below it throws
  /// ResourceError naming the degree that would be needed.
  QClass product(const QClass& x, const QClass& y, const std::optional<Degree>& bound = {});

  /// Componentwise bound that every product fits under.
  Degree default_bound() const;

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Term {
    std::size_t point;
    Degree degree;
    std::int64_t coef;
  };
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, Degree>;

  Poly compute(std::size_t a, std::size_t b, std::size_t w, const Degree& d);
  Poly by_divisor(std::size_t a, std::size_t b, std::size_t w, const Degree& d);
  Poly diagonal_quantum(std::size_t a, const Degree& d);
  std::optional<boost::multiprecision::cpp_rational> diagonal_at(
      std::size_t a, const Degree& d, const std::vector<boost::multiprecision::cpp_rational>& t);
  Poly divisor_terms(std::size_t bi, std::size_t a, std::size_t b, std::size_t w, const Degree& d);
  IntVector weight_difference(std::size_t bi, std::size_t w, std::size_t a) const;
  int deficit(std::size_t a, std::size_t b, std::size_t w, const Degree& d) const;

  const FlagVariety* fv_;
  Localization loc_;
  std::vector<int> betas_;
  // Per divisor index and point: weight omega_beta - u.omega_beta (root
  // coordinates), off-diagonal Chevalley terms, and their reverse lookup.
  std::vector<std::vector<IntVector>> diag_;
  std::vector<std::vector<std::vector<Term>>> chev_;
  std::vector<std::vector<std::vector<Term>>> rev_;
  std::map<Key, Poly> memo_;
  std::set<Key> active_;
};

/// Expansion of a localized class as a degree-zero QClass.
QClass to_qclass(const Localization& loc, const LocalizedClass& sigma);

struct SeidelQhReport {
  WeylElement w;
  std::size_t u = 0;
  std::size_t target = 0;  // position of (wu)^P
  Degree degree;
  bool non_equivariant = false;
  bool translated = false;
  bool support = false;
  bool rigid = false;
  std::vector<std::string> failures;
  bool ok() const { return non_equivariant && translated && support && rigid; }
};

/// Checks of the Seidel identity for w in W^comin (not the identity) and u
/// in W^P (position).
SeidelQhReport verify_seidel_qh(QuantumRing& ring, const Localization& loc, WeylElement w,
                                std::size_t u);

}  // namespace flagcalc
