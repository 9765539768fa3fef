#include "flagcalc/quantum.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "flagcalc/errors.hpp"

namespace flagcalc {

namespace {

const Poly& zero_poly() {
  static const Poly z;
  return z;
}

}  // namespace

QClass QClass::schubert(std::size_t num_points, std::size_t u, std::size_t degree_size) {
  QClass c(num_points);
  c.add(Degree::zero(degree_size), u, Poly(1));
  return c;
}

const Poly& QClass::coefficient(const Degree& d, std::size_t u) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? zero_poly() : it->second.at(u);
}

void QClass::prune(const Degree& d) {
  auto it = terms_.find(d);
  if (it == terms_.end()) return;
  if (std::all_of(it->second.begin(), it->second.end(), [](const Poly& p) { return p.is_zero(); }))
    terms_.erase(it);
}

void QClass::add(const Degree& d, std::size_t u, const Poly& c) {
  if (c.is_zero()) return;
  if (!d.is_effective()) throw InternalConsistencyError("non-effective degree " + d.to_string());
  auto [it, fresh] = terms_.try_emplace(d, std::vector<Poly>(n_));
  it->second.at(u) += c;
  prune(d);
}

QClass& QClass::operator+=(const QClass& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [d, v] : o.terms_)
    for (std::size_t u = 0; u < v.size(); ++u) add(d, u, v[u]);
  return *this;
}

QClass& QClass::operator-=(const QClass& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [d, v] : o.terms_)
    for (std::size_t u = 0; u < v.size(); ++u) add(d, u, -v[u]);
  return *this;
}

QClass operator*(const Poly& c, const QClass& a) {
  QClass out(a.n_);
  for (const auto& [d, v] : a.terms_)
    for (std::size_t u = 0; u < v.size(); ++u) out.add(d, u, c * v[u]);
  return out;
}

QClass QClass::shifted(const Degree& e) const {
  QClass out(n_);
  for (const auto& [d, v] : terms_) out.terms_.emplace(d + e, v);
  return out;
}

QClass QClass::non_equivariant() const {
  QClass out(n_);
  for (const auto& [d, v] : terms_)
    for (std::size_t u = 0; u < v.size(); ++u) out.add(d, u, Poly(v[u].constant_term()));
  return out;
}

QClass QClass::classical() const {
  QClass out(n_);
  for (const auto& [d, v] : terms_)
    if (d.is_zero()) out.terms_.emplace(d, v);
  return out;
}

std::string QClass::to_string(const FlagVariety& fv) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, v] : terms_) {
    for (std::size_t u = 0; u < v.size(); ++u) {
      if (v[u].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << v[u].to_string() << ")";
      if (!d.is_zero()) os << " q^" << d.to_string();
      os << " [X^" << word_string(fv.group(), fv.rep(u)) << "]";
    }
  }
  return first ? "0" : os.str();
}

QuantumRing::QuantumRing(const FlagVariety& fv)
    : fv_(&fv), loc_(fv), betas_(fv.parabolic().non_levi()) {
  const auto& g = fv.group();
  const auto& rs = g.roots();
  const auto& par = fv.parabolic();
  const int r = rs.rank();
  const std::size_t n = fv.num_points();
  diag_.assign(betas_.size(), std::vector<IntVector>(n));
  chev_.assign(betas_.size(), std::vector<std::vector<Term>>(n));
  rev_.assign(betas_.size(), std::vector<std::vector<Term>>(n));

  for (std::size_t bi = 0; bi < betas_.size(); ++bi) {
    const int beta = betas_[bi];
    for (std::size_t u = 0; u < n; ++u) {
      // omega - u.omega in root coordinates, applying the word right to left.
      IntVector mu(r, 0);
      Word word = g.reduced_word(fv.rep(u));
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int j = *it;
        int pairing = j == beta ? 1 : 0;
        for (int k = 0; k < r; ++k) pairing -= mu[k] * rs.cartan()[j][k];
        mu[j] += pairing;
      }
      diag_[bi][u] = mu;

      const WeylElement ue = fv.rep(u);
      const int lu = par.length(u);
      for (int alpha = 0; alpha < rs.num_positive(); ++alpha) {
        if (par.is_levi_root(alpha)) continue;
        const int coef = rs.coroot(alpha)[beta];
        if (coef == 0) continue;
        const WeylElement v = g.multiply(ue, g.reflection(alpha));
        const std::size_t vp = fv.point(v);
        if (g.length(v) == lu + 1 && par.is_min_rep(v)) {
          chev_[bi][u].push_back({vp, Degree::zero(betas_.size()), coef});
          continue;
        }
        const Degree d = fv.root_degree(alpha);
        if (par.length(vp) == lu + 1 - fv.chern_degree(d)) chev_[bi][u].push_back({vp, d, coef});
      }
      for (const Term& t : chev_[bi][u]) rev_[bi][t.point].push_back({u, t.degree, t.coef});
    }
  }
}

QClass QuantumRing::chevalley(int beta, std::size_t u) const {
  auto it = std::find(betas_.begin(), betas_.end(), beta);
  if (it == betas_.end())
    throw UsageError("divisor index " + std::to_string(beta) + " lies in the Levi");
  const std::size_t bi = static_cast<std::size_t>(it - betas_.begin());
  QClass out(fv_->num_points());
  out.add(Degree::zero(betas_.size()), u, Poly::linear(diag_[bi][u]));
  for (const Term& t : chev_[bi][u]) out.add(t.degree, t.point, Poly(t.coef));
  return out;
}

int QuantumRing::deficit(std::size_t a, std::size_t b, std::size_t w, const Degree& d) const {
  const auto& par = fv_->parabolic();
  return par.length(a) + par.length(b) - par.length(w) - fv_->chern_degree(d);
}

Poly QuantumRing::structure_constant(std::size_t a, std::size_t b, std::size_t w, const Degree& d) {
  if (!d.is_effective() || deficit(a, b, w, d) < 0) return Poly();
  if (a == 0) return b == w && d.is_zero() ? Poly(1) : Poly();
  if (b == 0) return a == w && d.is_zero() ? Poly(1) : Poly();
  Key key{a, b, w, d};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!active_.insert(key).second)
    throw InternalConsistencyError("cyclic structure-constant recursion");
  Poly value = compute(a, b, w, d);
  active_.erase(key);
  memo_.emplace(key, value);
  return value;
}

Poly QuantumRing::compute(std::size_t a, std::size_t b, std::size_t w, const Degree& d) {
  if (a != w) return by_divisor(a, b, w, d);
  if (b != w) return structure_constant(b, a, w, d);
  if (!d.is_zero()) return diagonal_quantum(a, d);
  // [X^a] restricted to a: product of the inversion roots of a^{-1}.
  const auto& g = fv_->group();
  const auto& rs = g.roots();
  const WeylElement inv = g.inverse(fv_->rep(a));
  Poly out(1);
  for (int r = 0; r < rs.num_positive(); ++r)
    if (!rs.is_positive(g.act(inv, r))) out = out.times_linear(rs.root(r));
  return out;
}

Poly QuantumRing::divisor_terms(std::size_t bi, std::size_t a, std::size_t b, std::size_t w,
                                const Degree& d) {
  // Relation from D * ([X^a] * [X^b]) = (D * [X^a]) * [X^b] at q^d [X^w],
  // diagonal terms moved to the left.
  Poly rhs;
  for (const Term& t : chev_[bi][a])
    if (t.degree.leq(d)) rhs += t.coef * structure_constant(t.point, b, w, d - t.degree);
  for (const Term& t : rev_[bi][w])
    if (t.degree.leq(d)) rhs -= t.coef * structure_constant(a, b, t.point, d - t.degree);
  return rhs;
}

IntVector QuantumRing::weight_difference(std::size_t bi, std::size_t w, std::size_t a) const {
  IntVector lambda(diag_[bi][w].size());
  for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] = diag_[bi][w][k] - diag_[bi][a][k];
  return lambda;
}

Poly QuantumRing::by_divisor(std::size_t a, std::size_t b, std::size_t w, const Degree& d) {
  for (std::size_t bi = 0; bi < betas_.size(); ++bi) {
    const IntVector lambda = weight_difference(bi, w, a);
    if (std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; })) continue;
    auto q = divisor_terms(bi, a, b, w, d).divide_linear(lambda);
    if (!q)
      throw InternalConsistencyError("Chevalley recursion: inexact division for c(" +
                                     std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(w) + "," + d.to_string() + ")");
    return *q;
  }
  throw InternalConsistencyError("no divisor separates distinct fixed points");
}

namespace {

using BigQ = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<BigQ>>;

BigQ evaluate(const Poly& p, const std::vector<BigQ>& t) {
  BigQ sum = 0;
  for (const auto& [mono, coef] : p.terms()) {
    BigQ v = coef;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (int e = 0; e < Poly::exponent(mono, static_cast<int>(i)); ++e) v *= t[i];
    sum += v;
  }
  return sum;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix out(n, std::vector<BigQ>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y[k][j] != 0) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

// Solves rows * x = last column for the leading unknowns; nullopt when the
// system is inconsistent or the unknowns are not all pinned down.
std::optional<std::vector<BigQ>> solve(std::vector<std::vector<BigQ>> rows, std::size_t nv) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < nv && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const BigQ f = rows[i][c] / rows[rank][c];
      for (std::size_t cc = c; cc <= nv; ++cc) rows[i][cc] -= f * rows[rank][cc];
    }
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i][nv] != 0) return std::nullopt;
  if (rank < nv) return std::nullopt;
  std::vector<BigQ> x(nv);
  for (std::size_t i = 0; i < rank; ++i) x[pivots[i]] = rows[i][nv] / rows[i][pivots[i]];
  return x;
}

}  // namespace

std::optional<BigQ> QuantumRing::diagonal_at(std::size_t a, const Degree& d,
                                             const std::vector<BigQ>& t) {
  // Fixed-point basis: the classical Chevalley operators are diagonal, so the
  // degree-e part L_e of multiplication by [X^a] satisfies
  //   (D(p) - D(p')) L_e[p][p'] = -sum_{f > 0} [M_f, L_{e-f}][p][p'],
  // and L_e kills the unit for e > 0, which fixes the diagonal.
  const std::size_t n = fv_->num_points();
  const auto& par = fv_->parabolic();
  Matrix sch(n, std::vector<BigQ>(n));  // columns: [X^u] at the points
  for (std::size_t u = 0; u < n; ++u) {
    const LocalizedClass& xu = loc_.opposite(u);
    for (std::size_t p = 0; p < n; ++p)
      if (par.leq(u, p)) sch[p][u] = evaluate(xu[p], t);
  }
  // Lower triangular; invert by forward substitution.
  Matrix inv(n, std::vector<BigQ>(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = c; i < n; ++i) {
      BigQ v = i == c ? BigQ(1) : BigQ(0);
      for (std::size_t k = c; k < i; ++k) v -= sch[i][k] * inv[k][c];
      if (sch[i][i] == 0) return std::nullopt;
      inv[i][c] = v / sch[i][i];
    }

  std::vector<Degree> degrees;
  for (const Degree& e : degrees_of_total_at_most(betas_.size(), d.total()))
    if (e.leq(d)) degrees.push_back(e);
  std::sort(degrees.begin(), degrees.end(), [](const Degree& x, const Degree& y) {
    return x.total() < y.total() || (x.total() == y.total() && x < y);
  });

  const std::size_t nb = betas_.size();
  std::vector<std::vector<BigQ>> weight(nb, std::vector<BigQ>(n));
  std::vector<std::map<Degree, Matrix>> quantum(nb);
  for (std::size_t bi = 0; bi < nb; ++bi) {
    for (std::size_t p = 0; p < n; ++p) weight[bi][p] = evaluate(Poly::linear(diag_[bi][p]), t);
    for (std::size_t u = 0; u < n; ++u)
      for (const Term& term : chev_[bi][u]) {
        if (term.degree.is_zero() || !term.degree.leq(d)) continue;
        auto [it, fresh] = quantum[bi].try_emplace(term.degree, Matrix(n, std::vector<BigQ>(n)));
        it->second[term.point][u] += term.coef;
      }
    for (auto& [e, m] : quantum[bi]) m = multiply(sch, multiply(m, inv));
  }

  std::map<Degree, Matrix> parts;
  Matrix base(n, std::vector<BigQ>(n));
  for (std::size_t p = 0; p < n; ++p) base[p][p] = sch[p][a];
  parts.emplace(Degree::zero(nb), std::move(base));
  for (const Degree& e : degrees) {
    if (e.is_zero()) continue;
    std::vector<Matrix> rhs(nb, Matrix(n, std::vector<BigQ>(n)));
    for (std::size_t bi = 0; bi < nb; ++bi)
      for (const auto& [f, m] : quantum[bi]) {
        if (!f.leq(e)) continue;
        const Matrix& lower = parts.at(e - f);
        const Matrix ml = multiply(m, lower), lm = multiply(lower, m);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) rhs[bi][i][j] -= ml[i][j] - lm[i][j];
      }
    Matrix le(n, std::vector<BigQ>(n));
    for (std::size_t i = 0; i < n; ++i) {
      BigQ row_sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::size_t bi = 0;
        while (bi < nb && weight[bi][i] == weight[bi][j]) ++bi;
        if (bi == nb) return std::nullopt;
        le[i][j] = rhs[bi][i][j] / (weight[bi][i] - weight[bi][j]);
        row_sum += le[i][j];
      }
      le[i][i] = -row_sum;
    }
    parts.emplace(e, std::move(le));
  }

  const Matrix& top = parts.at(d);
  std::vector<BigQ> image(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) image[i] += top[i][j] * sch[j][a];
  BigQ coef = 0;
  for (std::size_t j = 0; j < n; ++j) coef += inv[a][j] * image[j];
  return coef;
}

Poly QuantumRing::diagonal_quantum(std::size_t a, const Degree& d) {
  // c(a,a,a,d) is homogeneous of known degree: interpolate it from exact
  // values at integer specializations of the simple roots.
  const int r = fv_->group().rank();
  const int k = deficit(a, a, a, d);
  std::vector<Poly::Monomial> monos;
  std::vector<int> exps(r, 0);
  auto enumerate = [&](auto&& self, int var, int left) -> void {
    if (var == r - 1) {
      exps[var] = left;
      Poly::Monomial m = 0;
      for (int i = 0; i < r; ++i) m += static_cast<Poly::Monomial>(exps[i]) * Poly::unit(i);
      monos.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
  };
  enumerate(enumerate, 0, k);

  std::mt19937 rng(0x5eed + static_cast<unsigned>(a));
  std::uniform_int_distribution<int> pick(1, 97);
  std::vector<std::vector<BigQ>> rows;
  const std::size_t wanted = monos.size() + 3;
  for (int attempt = 0; rows.size() < wanted && attempt < 20 * static_cast<int>(wanted);
       ++attempt) {
    std::vector<BigQ> t(r);
    for (auto& x : t) x = pick(rng);
    auto value = diagonal_at(a, d, t);
    if (!value) continue;
    std::vector<BigQ> row;
    for (auto mono : monos) {
      BigQ v = 1;
      for (int i = 0; i < r; ++i)
        for (int e = 0; e < Poly::exponent(mono, i); ++e) v *= t[i];
      row.push_back(v);
    }
    row.push_back(*value);
    rows.push_back(std::move(row));
  }
  auto coeffs = solve(rows, monos.size());
  if (!coeffs)
    throw InternalConsistencyError(
        "c(" + std::to_string(a) + "," + std::to_string(a) + "," + std::to_string(a) + "," +
        d.to_string() + ") does not interpolate to a polynomial of degree " + std::to_string(k));
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    const BigQ& x = (*coeffs)[i];
    if (boost::multiprecision::denominator(x) != 1)
      throw InternalConsistencyError("non-integral structure constant");
    if (x != 0)
      terms.push_back({monos[i], boost::multiprecision::numerator(x).convert_to<std::int64_t>()});
  }
  return Poly::from_terms(std::move(terms));
}

Degree QuantumRing::default_bound() const {
  std::vector<int> c(betas_.size());
  const int top = 2 * fv_->dimension();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Degree unit = Degree::zero(betas_.size());
    unit.coords[i] = 1;
    c[i] = top / fv_->chern_degree(unit) + 1;
  }
  return Degree(c);
}

QClass QuantumRing::product(std::size_t a, std::size_t b) {
  const auto& par = fv_->parabolic();
  const std::size_t n = fv_->num_points();
  QClass out(n);
  int min_c1 = 1 << 30;
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    Degree unit = Degree::zero(betas_.size());
    unit.coords[i] = 1;
    min_c1 = std::min(min_c1, fv_->chern_degree(unit));
  }
  const int room = par.length(a) + par.length(b);
  for (const Degree& d : degrees_of_total_at_most(betas_.size(), room / min_c1)) {
    const int c1 = fv_->chern_degree(d);
    if (c1 > room) continue;
    for (std::size_t w = 0; w < n; ++w) {
      if (par.length(w) > room - c1) continue;
      out.add(d, w, structure_constant(a, b, w, d));
    }
  }
  return out;
}

QClass QuantumRing::product(const QClass& x, const QClass& y, const std::optional<Degree>& bound) {
  QClass out(fv_->num_points());
  for (const auto& [dx, vx] : x.terms())
    for (std::size_t a = 0; a < vx.size(); ++a) {
      if (vx[a].is_zero()) continue;
      for (const auto& [dy, vy] : y.terms())
        for (std::size_t b = 0; b < vy.size(); ++b) {
          if (vy[b].is_zero()) continue;
          out += (vx[a] * vy[b]) * product(a, b).shifted(dx + dy);
        }
    }
  if (bound) {
    for (const auto& [d, v] : out.terms()) {
      if (d.leq(*bound) && d != *bound) continue;
      Degree need = d;
      for (std::size_t i = 0; i < need.size(); ++i)
        need.coords[i] = std::max(need.coords[i] + 1, bound->coords[i]);
      throw ResourceError("quantum product exceeds the truncation bound " + bound->to_string() +
                          "; needs " + need.to_string());
    }
  }
  return out;
}

QClass to_qclass(const Localization& loc, const LocalizedClass& sigma) {
  const auto& fv = loc.variety();
  QClass out(fv.num_points());
  const std::vector<Poly> c = loc.expand(sigma);
  for (std::size_t u = 0; u < c.size(); ++u) out.add(Degree::zero(fv.degree_size()), u, c[u]);
  return out;
}

SeidelQhReport verify_seidel_qh(QuantumRing& ring, const Localization& loc, WeylElement w,
                                std::size_t u) {
  const FlagVariety& fv = ring.variety();
  const auto& g = fv.group();
  const auto& par = fv.parabolic();
  if (w == g.identity()) throw UsageError("Seidel check needs w different from 1");
  cominuscule_root_of(g, w);

  SeidelQhReport rep;
  rep.w = w;
  rep.u = u;
  rep.target = fv.point(g.multiply(w, fv.rep(u)));
  rep.degree = seidel_degree(fv, w, fv.rep(u));
  const std::size_t n = fv.num_points();
  const std::size_t wp = fv.point(w);
  const QClass xu = QClass::schubert(n, u, fv.degree_size());

  // Non-equivariant Seidel identity.
  const QClass expected_ne = QClass::schubert(n, rep.target, fv.degree_size()).shifted(rep.degree);
  const QClass ne = ring.product(QClass::schubert(n, wp, fv.degree_size()), xu).non_equivariant();
  rep.non_equivariant = ne == expected_ne;
  if (!rep.non_equivariant) rep.failures.push_back("non-equivariant: got " + ne.to_string(fv));

  // Translated form: [X_{(w0 w)^P}] * [X^u] = q^d w^{-1}.[X^{(wu)^P}].
  const WeylElement winv = g.inverse(w);
  const std::size_t dual = fv.point(g.multiply(g.longest(), w));
  const QClass lhs = ring.product(to_qclass(loc, loc.schubert(dual)), xu);
  const LocalizedClass moved = translate_class(fv, winv, loc.opposite(rep.target));
  const QClass rhs = to_qclass(loc, moved).shifted(rep.degree);
  rep.translated = lhs == rhs;
  if (!rep.translated) rep.failures.push_back("translated: got " + lhs.to_string(fv));

  // Support of the localization table.
  const Bitset expected = translate_points(fv, winv, par.up(rep.target));
  const Bitset support = moved.support();
  rep.support = support == expected;
  if (rep.translated && !lhs.is_zero()) {
    const auto& [d, coeffs] = *lhs.terms().begin();
    rep.support = rep.support && loc.reconstruct(coeffs).support() == expected;
  }
  if (!rep.support) rep.failures.push_back("support differs from w^{-1}.{v >= (wu)^P}");

  // Rigidity: every translated Schubert variety of the same dimension with
  // this fixed set has the same class.
  const int dim = fv.dimension() - par.length(rep.target);
  rep.rigid = true;
  for (Side side : {Side::Schubert, Side::Opposite}) {
    for (std::size_t p = 0; p < n && rep.rigid; ++p) {
      const int pdim = side == Side::Schubert ? par.length(p) : fv.dimension() - par.length(p);
      if (pdim != dim) continue;
      for (std::size_t x = 0; x < g.size(); ++x) {
        SchubertDescriptor desc{side, fv.rep(p), g.element(x)};
        if (fixed_points(fv, desc) != expected) continue;
        if (loc.of(desc) != moved) {
          rep.rigid = false;
          rep.failures.push_back("another translated Schubert variety shares the fixed set");
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace flagcalc
