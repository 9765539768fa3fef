#include "flagcalc/weyl_group.hpp"

#include <algorithm>
#include <limits>

#include "flagcalc/errors.hpp"

namespace flagcalc {

WeylGroup::WeylGroup(RootSystem roots, std::size_t bound) : roots_(std::move(roots)) {
  const int nr = roots_.num_roots();
  const int rank = roots_.rank();
  if (nr > 255 || rank > 8) throw ConfigError("root system too large for the packed key");

  std::vector<std::uint16_t> id(nr);
  for (int r = 0; r < nr; ++r) id[r] = static_cast<std::uint16_t>(r);
  perms_ = id;
  index_.emplace(key_of(id), 0);

  std::vector<std::uint16_t> next(nr);
  for (std::size_t head = 0; head < index_.size(); ++head) {
    const std::size_t base = head * nr;
    for (int i = 0; i < rank; ++i) {
      for (int r = 0; r < nr; ++r) next[r] = perms_[base + roots_.reflect_root(i, r)];
      auto key = key_of(next);
      if (index_.contains(key)) continue;
      if (index_.size() >= bound) {
        throw ResourceError("Weyl group of " + roots_.name() + " exceeds the bound of " +
                            std::to_string(bound) + " elements");
      }
      index_.emplace(key, static_cast<std::uint32_t>(index_.size()));
      perms_.insert(perms_.end(), next.begin(), next.end());
    }
  }
  build_tables();
  build_bruhat();
}

WeylGroup::WeylGroup(RootSystem roots, std::vector<std::uint16_t> perms,
                     std::vector<Bitset> downsets)
    : roots_(std::move(roots)), perms_(std::move(perms)), downsets_(std::move(downsets)) {
  const std::size_t nr = roots_.num_roots();
  if (nr == 0 || perms_.size() % nr != 0) throw InternalConsistencyError("bad cached table");
  const std::size_t n = perms_.size() / nr;
  for (std::size_t k = 0; k < n; ++k) {
    auto key = key_of({perms_.data() + k * nr, nr});
    if (!index_.emplace(key, static_cast<std::uint32_t>(k)).second) {
      throw InternalConsistencyError("duplicate element in cached table");
    }
  }
  build_tables();
  if (downsets_.size() != n) throw InternalConsistencyError("bad cached Bruhat table");
}

std::uint64_t WeylGroup::key_of(std::span<const std::uint16_t> perm) const {
  std::uint64_t key = 0;
  for (int i = 0; i < roots_.rank(); ++i) key = (key << 8) | perm[i];
  return key;
}

WeylElement WeylGroup::lookup(std::uint64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw InternalConsistencyError("element not in enumerated group");
  return {it->second};
}

void WeylGroup::build_tables() {
  const int nr = roots_.num_roots();
  const int rank = roots_.rank();
  const std::size_t n = perms_.size() / nr;
  lengths_.assign(n, 0);
  inverse_.assign(n, 0);
  right_.assign(rank, std::vector<std::uint32_t>(n));
  left_.assign(rank, std::vector<std::uint32_t>(n));
  std::vector<std::uint16_t> tmp(nr);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint16_t* w = perms_.data() + k * nr;
    int len = 0;
    for (int r = 0; r < roots_.num_positive(); ++r) len += roots_.is_positive(w[r]) ? 0 : 1;
    lengths_[k] = len;
    for (int r = 0; r < nr; ++r) tmp[w[r]] = static_cast<std::uint16_t>(r);
    inverse_[k] = lookup(key_of(tmp)).index;
    for (int i = 0; i < rank; ++i) {
      for (int r = 0; r < nr; ++r) tmp[r] = w[roots_.reflect_root(i, r)];
      right_[i][k] = lookup(key_of(tmp)).index;
      for (int r = 0; r < nr; ++r)
        tmp[r] = static_cast<std::uint16_t>(roots_.reflect_root(i, w[r]));
      left_[i][k] = lookup(key_of(tmp)).index;
    }
  }
  longest_ = {static_cast<std::uint32_t>(std::max_element(lengths_.begin(), lengths_.end()) -
                                         lengths_.begin())};
  if (lengths_[longest_.index] != roots_.num_positive()) {
    throw InternalConsistencyError("longest element has the wrong length");
  }

  reflections_.resize(roots_.num_positive());
  for (int b = 0; b < roots_.num_positive(); ++b) {
    std::uint64_t key = 0;
    for (int i = 0; i < rank; ++i) {
      IntVector img = roots_.root(i);
      int c = roots_.pair(roots_.root(i), roots_.coroot(b));
      for (int j = 0; j < rank; ++j) img[j] -= c * roots_.root(b)[j];
      key = (key << 8) | static_cast<std::uint64_t>(roots_.find_root(img));
    }
    reflections_[b] = lookup(key).index;
  }
}

void WeylGroup::build_bruhat() {
  const std::size_t n = size();
  downsets_.assign(n, Bitset(n));
  for (std::size_t k = 0; k < n; ++k) {
    WeylElement w{static_cast<std::uint32_t>(k)};
    downsets_[k].set(k);
    for (auto c : coatoms(w)) downsets_[k] |= downsets_[c.index];
  }
}

WeylElement WeylGroup::multiply(WeylElement u, WeylElement v) const {
  std::uint64_t key = 0;
  for (int i = 0; i < rank(); ++i) key = (key << 8) | act(u, act(v, i));
  return lookup(key);
}

WeylElement WeylGroup::reflection(int root_index) const {
  int b = roots_.is_positive(root_index) ? root_index : roots_.negate(root_index);
  return {reflections_[b]};
}

WeylElement WeylGroup::from_word(const Word& word) const {
  WeylElement w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw UsageError("simple reflection index out of range");
    w = right_simple(w, i);
  }
  return w;
}

Word WeylGroup::reduced_word(WeylElement w) const {
  Word word;
  while (length(w) > 0) {
    for (int i = 0; i < rank(); ++i) {
      WeylElement v = left_simple(w, i);
      if (length(v) < length(w)) {
        word.push_back(i);
        w = v;
        break;
      }
    }
  }
  return word;
}

WeylElement WeylGroup::hecke_product(WeylElement w, WeylElement z) const {
  for (int i : reduced_word(z)) {
    WeylElement ws = right_simple(w, i);
    if (length(ws) > length(w)) w = ws;
  }
  return w;
}

std::vector<WeylElement> WeylGroup::coatoms(WeylElement w) const {
  std::vector<WeylElement> out;
  for (int b = 0; b < roots_.num_positive(); ++b) {
    WeylElement v = multiply(w, {reflections_[b]});
    if (length(v) == length(w) - 1) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

Parabolic::Parabolic(const WeylGroup& group, const std::vector<int>& levi)
    : Parabolic(group, [&] {
        std::uint32_t m = 0;
        for (int i : levi) {
          if (i < 0 || i >= group.rank()) throw UsageError("Levi index out of range");
          m |= 1u << i;
        }
        return m;
      }()) {}

Parabolic::Parabolic(const WeylGroup& group, std::uint32_t levi_mask)
    : group_(&group), mask_(levi_mask) {
  const int rank = group.rank();
  if (rank < 32 && (levi_mask >> rank) != 0) throw UsageError("Levi mask out of range");
  for (int i = 0; i < rank; ++i)
    if (!in_levi(i)) non_levi_.push_back(i);

  const std::size_t n = group.size();
  coset_.assign(n, 0);
  position_.assign(n, std::numeric_limits<std::size_t>::max());
  std::vector<WeylElement> rep_of(n);
  for (std::size_t k = 0; k < n; ++k) {
    WeylElement w = group.element(k);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < rank; ++i) {
        if (in_levi(i) && group.has_right_descent(w, i)) {
          w = group.right_simple(w, i);
          changed = true;
        }
      }
    }
    rep_of[k] = w;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (rep_of[k].index == k) {
      position_[k] = min_reps_.size();
      min_reps_.push_back(group.element(k));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    coset_[k] = position_[rep_of[k].index];
    if (rep_of[k] == group.identity()) levi_group_.push_back(group.element(k));
  }
  longest_levi_ = *std::max_element(
      levi_group_.begin(), levi_group_.end(),
      [&](WeylElement a, WeylElement b) { return group.length(a) < group.length(b); });
  longest_min_rep_ = min_rep(group.longest());

  const std::size_t m = min_reps_.size();
  down_.assign(m, Bitset(m));
  up_.assign(m, Bitset(m));
  for (std::size_t b = 0; b < m; ++b) {
    const Bitset& ds = group.downset(min_reps_[b]);
    for (std::size_t a = 0; a < m; ++a) {
      if (ds[min_reps_[a].index]) {
        down_[b].set(a);
        up_[a].set(b);
      }
    }
  }
}

std::vector<int> Parabolic::levi() const {
  std::vector<int> out;
  for (int i = 0; i < group_->rank(); ++i)
    if (in_levi(i)) out.push_back(i);
  return out;
}

bool Parabolic::is_levi_root(int root_index) const {
  const auto& c = group_->roots().root(root_index);
  for (int i = 0; i < group_->rank(); ++i)
    if (c[i] != 0 && !in_levi(i)) return false;
  return true;
}

std::size_t Parabolic::position(WeylElement w) const {
  std::size_t p = position_[w.index];
  if (p == std::numeric_limits<std::size_t>::max()) {
    throw UsageError("element is not a minimal coset representative");
  }
  return p;
}

std::pair<WeylElement, WeylElement> Parabolic::factorize(WeylElement u) const {
  WeylElement up = min_rep(u);
  WeylElement lp = group_->multiply(group_->inverse(up), u);
  return {up, lp};
}

// ---------------------------------------------------------------------------

std::vector<CominusculeElement> cominuscule_elements(const WeylGroup& group) {
  const auto& rs = group.roots();
  const auto& theta = rs.root(rs.highest_root());
  std::vector<CominusculeElement> out;
  for (int g = 0; g < rs.rank(); ++g) {
    if (theta[g] != 1) continue;
    std::uint32_t mask = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (i != g) mask |= 1u << i;
    Parabolic q(group, mask);
    out.push_back({g, q.longest_min_rep()});
  }
  return out;
}

std::vector<WeylElement> cominuscule_group(const WeylGroup& group) {
  std::vector<WeylElement> out{group.identity()};
  for (const auto& c : cominuscule_elements(group)) out.push_back(c.element);
  std::sort(out.begin(), out.end());
  return out;
}

int cominuscule_root_of(const WeylGroup& group, WeylElement w) {
  for (const auto& c : cominuscule_elements(group))
    if (c.element == w) return c.gamma;
  throw UsageError("element is not a non-trivial cominuscule point representative");
}

std::int64_t coweight_quotient_order(const RootSystem& roots) {
  std::vector<std::vector<std::int64_t>> m(roots.rank(), std::vector<std::int64_t>(roots.rank()));
  for (int i = 0; i < roots.rank(); ++i)
    for (int j = 0; j < roots.rank(); ++j) m[i][j] = roots.cartan()[i][j];
  std::int64_t order = 1;
  for (auto d : smith_invariants(m)) order *= d;
  return order;
}

std::string word_string(const WeylGroup& group, WeylElement w) {
  Word word = group.reduced_word(w);
  if (word.empty()) return "1";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

}  // namespace flagcalc
