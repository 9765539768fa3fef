#include "flagcalc/qk_psi.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "flagcalc/errors.hpp"

namespace flagcalc {

QSeries QSeries::constant(std::size_t degree_size, int order, std::int64_t c) {
  QSeries s(degree_size, order);
  s.add(Degree::zero(degree_size), c);
  return s;
}

std::int64_t QSeries::coefficient(const Degree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? 0 : it->second;
}

void QSeries::add(const Degree& d, std::int64_t c) {
  if (c == 0 || d.total() > order_) return;
  auto [it, fresh] = terms_.emplace(d, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

QSeries& QSeries::operator+=(const QSeries& o) {
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries out(a.size_, std::min(a.order_, b.order_));
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add(da + db, ca * cb);
  return out;
}

QSeries QSeries::shifted(const Degree& e) const {
  QSeries out(size_, order_ + e.total());
  for (const auto& [d, c] : terms_) out.terms_.emplace(d + e, c);
  return out;
}

std::string QSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    const std::int64_t m = c < 0 ? -c : c;
    if (d.is_zero()) {
      os << m;
      continue;
    }
    if (m != 1) os << m << "*";
    os << "q^" << d.to_string();
  }
  return os.str();
}

PsiMatrix::PsiMatrix(std::size_t n, std::size_t degree_size, int order)
    : n_(n), size_(degree_size), order_(order), e_(n * n, QSeries(degree_size, order)) {}

PsiMatrix PsiMatrix::identity(std::size_t n, std::size_t degree_size, int order) {
  PsiMatrix m(n, degree_size, order);
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i).add(Degree::zero(degree_size), 1);
  return m;
}

PsiMatrix operator*(const PsiMatrix& a, const PsiMatrix& b) {
  if (a.n_ != b.n_ || a.size_ != b.size_) throw UsageError("matrix shapes differ");
  PsiMatrix out(a.n_, a.size_, std::min(a.order_, b.order_));
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const QSeries& x = a.entry(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b.entry(k, j).is_zero()) out.entry(i, j) += x * b.entry(k, j);
    }
  return out;
}

QVector PsiMatrix::apply(const QVector& v) const {
  if (v.size() != n_) throw UsageError("vector length differs from matrix size");
  int order = order_;
  for (const auto& s : v) order = std::min(order, s.order());
  QVector out(n_, QSeries(size_, order));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k)
      if (!v[k].is_zero()) out[i] += entry(i, k) * v[k];
  return out;
}

bool PsiMatrix::is_identity() const {
  return *this == identity(n_, size_, order_);
}

PsiMatrix psi_matrix(const FlagVariety& fv, int order) {
  if (order < 0) throw InputError("negative q order");
  const std::size_t n = fv.num_points();
  const auto degrees = degrees_of_total_at_most(fv.degree_size(), order);
  auto column = [&](std::size_t w) {
    std::vector<std::size_t> rows;
    rows.reserve(degrees.size());
    for (const Degree& d : degrees)
      rows.push_back(fv.point(curve_nbhd_weyl(fv, fv.rep(w), Side::Opposite, d, false)));
    return rows;
  };
  std::vector<std::future<std::vector<std::size_t>>> jobs;
  jobs.reserve(n);
  for (std::size_t w = 0; w < n; ++w) jobs.push_back(std::async(std::launch::async, column, w));
  PsiMatrix psi(n, fv.degree_size(), order);
  for (std::size_t w = 0; w < n; ++w) {
    const auto rows = jobs[w].get();
    for (std::size_t i = 0; i < degrees.size(); ++i) psi.entry(rows[i], w).add(degrees[i], 1);
  }
  return psi;
}

PsiMatrix invert_psi(const PsiMatrix& psi) {
  const std::size_t n = psi.size();
  const Degree zero = Degree::zero(psi.degree_size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (psi.entry(i, j).coefficient(zero) != (i == j ? 1 : 0))
        throw UsageError("constant term is not the identity");
  // psi = 1 + m with m of positive degree, so the Neumann series terminates.
  PsiMatrix m = psi;
  for (std::size_t i = 0; i < n; ++i) m.entry(i, i).add(zero, -1);
  PsiMatrix inv = PsiMatrix::identity(n, psi.degree_size(), psi.order());
  PsiMatrix power = inv;
  for (int k = 1; k <= psi.order(); ++k) {
    power = power * m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (k % 2)
          inv.entry(i, j) -= power.entry(i, j);
        else
          inv.entry(i, j) += power.entry(i, j);
      }
  }
  return inv;
}

QVector seidel_qk_rhs(const FlagVariety& fv, WeylElement w, std::size_t u, int order) {
  if (w == fv.group().identity()) throw UsageError("w must not be the identity");
  const Degree d = seidel_degree(fv, w, fv.rep(u));
  const int top = order + d.total();
  QVector out(fv.num_points(), QSeries(fv.degree_size(), top));
  for (const Degree& e : degrees_of_total_at_most(fv.degree_size(), order)) {
    const TranslatedNbhd t = gamma_e_translated(fv, w, fv.rep(u), e);
    out[fv.point(t.u_prime)].add(d + e, 1);
  }
  return out;
}

bool seidel_qk_check(const FlagVariety& fv, const PsiMatrix& psi, WeylElement w, std::size_t u) {
  const auto& g = fv.group();
  const Degree d = seidel_degree(fv, w, fv.rep(u));
  const std::size_t target = fv.point(g.multiply(w, fv.rep(u)));
  QVector basis(fv.num_points(), QSeries(fv.degree_size(), psi.order()));
  basis[target].add(Degree::zero(fv.degree_size()), 1);
  QVector lhs = psi.apply(basis);
  for (auto& s : lhs) s = s.shifted(d);
  return lhs == seidel_qk_rhs(fv, w, u, psi.order());
}

}  // namespace flagcalc
