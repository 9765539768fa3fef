#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flagcalc/curves.hpp"

namespace flagcalc {

/// Integer power series in q truncated at total degree `order`.
class QSeries {
 public:
  QSeries() = default;
  QSeries(std::size_t degree_size, int order) : size_(degree_size), order_(order) {}
  static QSeries constant(std::size_t degree_size, int order, std::int64_t c);

  std::size_t degree_size() const { return size_; }
  int order() const { return order_; }
  const std::map<Degree, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Degree& d) const;
  /// Adds c q^d; terms above the order are dropped.
  void add(const Degree& d, std::int64_t c);

  bool is_zero() const { return terms_.empty(); }
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries shifted(const Degree& e) const;
  bool operator==(const QSeries& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  int order_ = 0;
  std::map<Degree, std::int64_t> terms_;
};

using QVector = std::vector<QSeries>;

/// Square matrix over truncated q-series, indexed by W^P positions;
/// entry(row, col).
class PsiMatrix {
 public:
  PsiMatrix(std::size_t n, std::size_t degree_size, int order);
  static PsiMatrix identity(std::size_t n, std::size_t degree_size, int order);

  std::size_t size() const { return n_; }
  int order() const { return order_; }
  std::size_t degree_size() const { return size_; }
  QSeries& entry(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  const QSeries& entry(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

  friend PsiMatrix operator*(const PsiMatrix& a, const PsiMatrix& b);
  QVector apply(const QVector& v) const;
  bool operator==(const PsiMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool is_identity() const;

 private:
  std::size_t n_;
  std::size_t size_;
  int order_;
  std::vector<QSeries> e_;
};

/// Column w is the sum over effective d of total degree <= order of
/// q^d e_{Gamma_d(X^w)}.
PsiMatrix psi_matrix(const FlagVariety& fv, int order);

/// Inverse modulo terms of total degree above the order.
PsiMatrix invert_psi(const PsiMatrix& psi);

/// Sum over e of total degree <= order of q^{d(w,u)+e} [O_{Gamma_e(w^{-1}.X^{wu})}],
/// non-equivariant, so translated classes are read in the untranslated basis.
/// The series carries order `order` plus the total of d(w,u).
QVector seidel_qk_rhs(const FlagVariety& fv, WeylElement w, std::size_t u, int order);

/// Checks seidel_qk_rhs(w, u) == q^{d(w,u)} Psi e_{(wu)^P}.
bool seidel_qk_check(const FlagVariety& fv, const PsiMatrix& psi, WeylElement w, std::size_t u);

}  // namespace flagcalc
