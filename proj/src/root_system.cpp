#include "flagcalc/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "flagcalc/errors.hpp"

namespace flagcalc {

char family_letter(Family f) {
  return "ABCDEFG"[static_cast<int>(f)];
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A':
    case 'a': return Family::A;
    case 'B':
    case 'b': return Family::B;
    case 'C':
    case 'c': return Family::C;
    case 'D':
    case 'd': return Family::D;
    case 'E':
    case 'e': return Family::E;
    case 'F':
    case 'f': return Family::F;
    case 'G':
    case 'g': return Family::G;
    default: break;
  }
  throw ConfigError(std::string("unknown Lie type '") + c + "'");
}

namespace {

// Symmetric Gram matrix (alpha_i, alpha_j) of the simple roots, Bourbaki
// numbering, scaled to be integral.
std::vector<IntVector> gram_matrix(Family family, int n) {
  std::vector<IntVector> g(n, IntVector(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

bool valid_pair(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

}  // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  if (!valid_pair(family, rank)) {
    throw ConfigError("invalid root system " + std::string(1, family_letter(family)) +
                      std::to_string(rank));
  }
  const int n = rank;
  auto gram = gram_matrix(family, n);
  cartan_.assign(n, IntVector(n, 0));
  root_length2_.resize(n);
  for (int i = 0; i < n; ++i) {
    root_length2_[i] = gram[i][i];
    for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * gram[i][j] / gram[i][i];
  }

  // Reflection closure of the simple roots.
  std::set<IntVector> seen;
  std::vector<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IntVector b = queue[head];
      int c = pair_with_simple_coroot(b, i);
      b[i] -= c;
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  std::vector<IntVector> positive;
  for (const auto& r : seen) {
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) positive.push_back(r);
  }
  std::sort(positive.begin(), positive.end(), [](const IntVector& a, const IntVector& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  num_positive_ = static_cast<int>(positive.size());
  if (2 * num_positive_ != static_cast<int>(seen.size())) {
    throw InternalConsistencyError("root closure is not symmetric under negation");
  }
  roots_ = positive;
  for (const auto& r : positive) {
    IntVector m(r.size());
    std::transform(r.begin(), r.end(), m.begin(), [](int x) { return -x; });
    roots_.push_back(m);
  }

  // beta^vee = 2 beta / (beta, beta) in the simple coroot basis.
  coroots_.resize(roots_.size());
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    const auto& b = roots_[k];
    int norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm += b[i] * b[j] * gram[i][j];
    IntVector cv(n);
    for (int j = 0; j < n; ++j) {
      int num = b[j] * gram[j][j];
      if (num % norm != 0) throw InternalConsistencyError("non-integral coroot");
      cv[j] = num / norm;
    }
    coroots_[k] = cv;
  }

  simple_reflection_.assign(n, std::vector<int>(roots_.size()));
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      IntVector b = roots_[k];
      b[i] -= pair_with_simple_coroot(b, i);
      int idx = find_root(b);
      if (idx < 0) throw InternalConsistencyError("root set not reflection closed");
      simple_reflection_[i][k] = idx;
    }
  }
  highest_root_ = num_positive_ - 1;

  auto inv = invert_matrix(cartan_);
  fundamental_coweights_.assign(n, std::vector<Rational>(n));
  fundamental_weights_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      fundamental_coweights_[i][k] = inv[i][k];
      fundamental_weights_[i][k] = inv[k][i];
    }
  }
}

std::string RootSystem::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

int RootSystem::height(int index) const {
  return std::accumulate(roots_[index].begin(), roots_[index].end(), 0);
}

int RootSystem::find_root(const IntVector& coords) const {
  auto it = std::find(roots_.begin(), roots_.end(), coords);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

int RootSystem::pair_with_simple_coroot(const IntVector& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += beta[j] * cartan_[i][j];
  return s;
}

int RootSystem::pair(const IntVector& beta, const IntVector& coroot_coords) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += coroot_coords[i] * pair_with_simple_coroot(beta, i);
  return s;
}

std::int64_t RootSystem::cartan_determinant() const {
  const int n = rank_;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rational(cartan_[i][j]);
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return std::abs(boost::rational_cast<std::int64_t>(det));
}

std::vector<std::vector<Rational>> invert_matrix(const std::vector<IntVector>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) throw InternalConsistencyError("singular matrix");
    std::swap(a[p], a[c]);
    Rational pivot = a[c][c];
    for (auto& x : a[c]) x /= pivot;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == Rational(0)) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t) and
    // clear its row and column; repeat until it divides the whole block.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  return diag;
}

}  // namespace flagcalc
