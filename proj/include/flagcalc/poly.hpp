#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagcalc {

/// Sparse multivariate polynomial with int64 coefficients in at most eight
/// variables (one per simple root). Overflow is detected and thrown.
///
/// A monomial is packed into 64 bits, eight bits of exponent per variable,
/// variable 0 in the most significant byte, so integer order on keys is the
/// lexicographic monomial order. Terms are kept sorted by decreasing key with
/// no zero coefficients.
class Poly {
 public:
  using Monomial = std::uint64_t;
  using Term = std::pair<Monomial, std::int64_t>;

  static constexpr int kMaxVars = 8;

  Poly() = default;
  Poly(std::int64_t constant);  // NOLINT: implicit by design of the ring
  static Poly variable(int i);
  /// Linear form sum_i c_i x_i.
  static Poly linear(std::span<const int> coeffs);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::int64_t constant_term() const;
  int degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(std::int64_t c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, std::int64_t c) { return a *= c; }
  friend Poly operator*(std::int64_t c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const = default;

  /// Multiply by a linear form given by coefficients.
  Poly times_linear(std::span<const int> coeffs) const;

  /// Exact quotient by a nonzero linear form, or nullopt if it does not divide.
  std::optional<Poly> divide_linear(std::span<const int> coeffs) const;
  /// Exact quotient by an integer, or nullopt.
  std::optional<Poly> divide_integer(std::int64_t c) const;

  /// Substitute x_i -> images[i] (each a linear form).
  Poly substitute(std::span<const std::vector<int>> images) const;

  /// Leading coefficient in lex order (0 for the zero polynomial).
  std::int64_t leading_coefficient() const { return terms_.empty() ? 0 : terms_.front().second; }

  std::string to_string(std::span<const std::string> names = {}) const;

  static int exponent(Monomial m, int var) {
    return static_cast<int>((m >> (8 * (kMaxVars - 1 - var))) & 0xffu);
  }
  static Monomial unit(int var) { return Monomial{1} << (8 * (kMaxVars - 1 - var)); }

 private:
  explicit Poly(std::vector<Term> t) : terms_(std::move(t)) {}
  static Poly normalize(std::vector<Term> t);
  std::vector<Term> terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace flagcalc
