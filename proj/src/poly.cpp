#include "flagcalc/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "flagcalc/errors.hpp"

namespace flagcalc {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ResourceError("int64 overflow in polynomial arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ResourceError("int64 overflow in polynomial arithmetic");
  return r;
}

Poly::Poly(std::int64_t constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

Poly Poly::variable(int i) {
  if (i < 0 || i >= kMaxVars) throw UsageError("polynomial variable out of range");
  return Poly(std::vector<Term>{{unit(i), 1}});
}

Poly Poly::linear(std::span<const int> coeffs) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) t.emplace_back(unit(static_cast<int>(i)), coeffs[i]);
  return Poly(std::move(t));  // already in decreasing key order
}

Poly Poly::from_terms(std::vector<Term> terms) {
  return normalize(std::move(terms));
}

Poly Poly::normalize(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(t.size());
  for (const auto& term : t) {
    if (!out.empty() && out.back().first == term.first) {
      out.back().second = checked_add(out.back().second, term.second);
    } else {
      out.push_back(term);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& x) { return x.second == 0; }),
            out.end());
  return Poly(std::move(out));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

std::int64_t Poly::constant_term() const {
  return (!terms_.empty() && terms_.back().first == 0) ? terms_.back().second : 0;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int v = 0; v < kMaxVars; ++v) s += exponent(m, v);
    d = std::max(d, s);
  }
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, -1);
  return r;
}

namespace {

template <class Op>
std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                              Op op) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, op(0, b[j].second));
      ++j;
    } else {
      std::int64_t c = op(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  terms_ =
      merge(terms_, o.terms_, [](std::int64_t x, std::int64_t y) { return checked_add(x, y); });
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge(terms_, o.terms_,
                 [](std::int64_t x, std::int64_t y) { return checked_add(x, checked_mul(y, -1)); });
  return *this;
}

Poly& Poly::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second = checked_mul(t.second, c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() + b.degree() > 255) throw ResourceError("polynomial degree exceeds 255");
  std::vector<Poly::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) t.emplace_back(ma + mb, checked_mul(ca, cb));
  return Poly::normalize(std::move(t));
}

Poly Poly::times_linear(std::span<const int> coeffs) const {
  return *this * linear(coeffs);
}

std::optional<Poly> Poly::divide_integer(std::int64_t c) const {
  if (c == 0) throw UsageError("division by zero");
  Poly r = *this;
  for (auto& t : r.terms_) {
    if (t.second % c != 0) return std::nullopt;
    t.second /= c;
  }
  return r;
}

std::optional<Poly> Poly::divide_linear(std::span<const int> coeffs) const {
  int content = 0;
  for (int c : coeffs) content = std::gcd(content, c);
  if (content == 0) throw UsageError("division by the zero linear form");
  std::vector<int> prim(coeffs.begin(), coeffs.end());
  for (int& c : prim) c /= content;
  int lead = 0;
  while (prim[lead] == 0) ++lead;
  const std::int64_t lc = prim[lead];

  std::map<Monomial, std::int64_t, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.first, t.second);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto [m, a] = *rem.begin();
    if (exponent(m, lead) == 0 || a % lc != 0) return std::nullopt;
    const Monomial qm = m - unit(lead);
    const std::int64_t qc = a / lc;
    quotient.emplace_back(qm, qc);
    for (std::size_t j = 0; j < prim.size(); ++j) {
      if (prim[j] == 0) continue;
      Monomial key = qm + unit(static_cast<int>(j));
      auto& slot = rem[key];
      slot = checked_add(slot, checked_mul(-qc, prim[j]));
      if (slot == 0) rem.erase(key);
    }
  }
  Poly q(std::move(quotient));
  if (content != 1) return q.divide_integer(content);
  return q;
}

Poly Poly::substitute(std::span<const std::vector<int>> images) const {
  // Fast path: each image is +-x_j for a permutation j.
  bool monomial_map = true;
  std::vector<int> target(images.size(), -1), sign(images.size(), 1);
  for (std::size_t i = 0; i < images.size() && monomial_map; ++i) {
    int nz = 0;
    for (std::size_t j = 0; j < images[i].size(); ++j) {
      if (images[i][j] == 0) continue;
      ++nz;
      if (images[i][j] != 1 && images[i][j] != -1) monomial_map = false;
      target[i] = static_cast<int>(j);
      sign[i] = images[i][j];
    }
    if (nz != 1) monomial_map = false;
  }
  if (monomial_map) {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial nm = 0;
      std::int64_t s = c;
      for (std::size_t i = 0; i < images.size(); ++i) {
        int e = exponent(m, static_cast<int>(i));
        nm += unit(target[i]) * static_cast<Monomial>(e);
        if (sign[i] < 0 && (e & 1)) s = -s;
      }
      t.emplace_back(nm, s);
    }
    return normalize(std::move(t));
  }

  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t var, int e) -> const Poly& {
    auto& pw = powers[var];
    if (pw.empty()) pw.push_back(Poly(1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * linear(images[var]));
    return pw[e];
  };
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = exponent(m, static_cast<int>(i));
      if (e > 0) term = term * power(i, e);
    }
    out += term;
  }
  return out;
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any = false;
    std::ostringstream mon;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = exponent(m, v);
      if (e == 0) continue;
      if (any) mon << "*";
      any = true;
      if (static_cast<std::size_t>(v) < names.size()) {
        mon << names[v];
      } else {
        mon << "a" << (v + 1);
      }
      if (e > 1) mon << "^" << e;
    }
    if (!any) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mon.str();
    }
  }
  return os.str();
}

}  // namespace flagcalc
