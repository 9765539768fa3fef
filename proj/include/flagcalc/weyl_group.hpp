#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagcalc/root_system.hpp"

namespace flagcalc {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Handle to an element of an enumerated WeylGroup. Index 0 is the identity;
/// indices are sorted by length.
struct WeylElement {
  std::uint32_t index = 0;
  auto operator<=>(const WeylElement&) const = default;
};

/// A word in simple reflections, 0-based indices: {i1, ..., ik} means
/// s_{i1} s_{i2} ... s_{ik}.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;

/// The full Weyl group of a root system, enumerated as permutations of the
/// indexed root list, together with the Bruhat order as bitset down-sets.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem roots, std::size_t bound = kDefaultGroupBound);

  /// Rebuilds from cached permutation data (see cache.hpp); verifies that the
  /// table is consistent with the root system.
  WeylGroup(RootSystem roots, std::vector<std::uint16_t> perms, std::vector<Bitset> downsets);

  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  std::size_t size() const { return lengths_.size(); }

  WeylElement identity() const { return {0}; }
  WeylElement element(std::size_t i) const { return {static_cast<std::uint32_t>(i)}; }
  WeylElement longest() const { return longest_; }
  WeylElement simple(int i) const { return {right_[i][0]}; }

  int length(WeylElement w) const { return lengths_[w.index]; }
  /// Image of root `root_index` under w.
  int act(WeylElement w, int root_index) const {
    return perms_[static_cast<std::size_t>(w.index) * roots_.num_roots() + root_index];
  }
  std::span<const std::uint16_t> permutation(WeylElement w) const {
    return {perms_.data() + static_cast<std::size_t>(w.index) * roots_.num_roots(),
            static_cast<std::size_t>(roots_.num_roots())};
  }

  WeylElement multiply(WeylElement u, WeylElement v) const;
  WeylElement inverse(WeylElement w) const { return {inverse_[w.index]}; }
  WeylElement right_simple(WeylElement w, int i) const { return {right_[i][w.index]}; }
  WeylElement left_simple(WeylElement w, int i) const { return {left_[i][w.index]}; }
  /// Reflection s_beta for a root index (positive or negative).
  WeylElement reflection(int root_index) const;

  WeylElement from_word(const Word& word) const;
  /// Lexicographically first reduced word (greedy on left descents).
  Word reduced_word(WeylElement w) const;
  bool has_right_descent(WeylElement w, int i) const { return !roots_.is_positive(act(w, i)); }

  /// Hecke (Demazure) product: w * s = ws if longer, else w.
  WeylElement hecke_product(WeylElement w, WeylElement z) const;

  bool bruhat_leq(WeylElement u, WeylElement w) const { return downsets_[w.index][u.index]; }
  const Bitset& downset(WeylElement w) const { return downsets_[w.index]; }
  const std::vector<Bitset>& downsets() const { return downsets_; }
  const std::vector<std::uint16_t>& permutation_table() const { return perms_; }

  /// Elements w' with w' <. w (Bruhat covers below w).
  std::vector<WeylElement> coatoms(WeylElement w) const;

 private:
  void build_tables();
  void build_bruhat();
  std::uint64_t key_of(std::span<const std::uint16_t> perm) const;
  WeylElement lookup(std::uint64_t key) const;

  RootSystem roots_;
  std::vector<std::uint16_t> perms_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::vector<std::uint32_t>> right_;
  std::vector<std::vector<std::uint32_t>> left_;
  std::vector<std::uint32_t> reflections_;  // indexed by positive root
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<Bitset> downsets_;
  WeylElement longest_;
};

/// Parabolic subgroup W_P given by its Levi simple roots, with the minimal
/// coset representatives W^P.
class Parabolic {
 public:
  Parabolic(const WeylGroup& group, std::uint32_t levi_mask);
  Parabolic(const WeylGroup& group, const std::vector<int>& levi);

  const WeylGroup& group() const { return *group_; }
  std::uint32_t levi_mask() const { return mask_; }
  bool in_levi(int i) const { return (mask_ >> i) & 1u; }
  std::vector<int> levi() const;
  /// Simple roots not in the Levi, in increasing order (one q-variable each).
  const std::vector<int>& non_levi() const { return non_levi_; }
  /// Positive root index lies in the Levi root subsystem.
  bool is_levi_root(int root_index) const;

  const std::vector<WeylElement>& levi_group() const { return levi_group_; }
  const std::vector<WeylElement>& min_reps() const { return min_reps_; }
  std::size_t num_cosets() const { return min_reps_.size(); }
  WeylElement rep(std::size_t coset) const { return min_reps_[coset]; }
  std::size_t coset_of(WeylElement w) const { return coset_[w.index]; }
  /// Position of w in min_reps(); w must be a minimal representative.
  std::size_t position(WeylElement w) const;
  bool is_min_rep(WeylElement w) const { return rep(coset_of(w)) == w; }

  /// u = u^P u_P with u^P in W^P and u_P in W_P.
  std::pair<WeylElement, WeylElement> factorize(WeylElement u) const;
  WeylElement min_rep(WeylElement u) const { return rep(coset_of(u)); }

  WeylElement longest_levi() const { return longest_levi_; }
  WeylElement longest_min_rep() const { return longest_min_rep_; }

  /// Bruhat order restricted to W^P, on coset positions.
  bool leq(std::size_t a, std::size_t b) const { return down_[b][a]; }
  const Bitset& down(std::size_t b) const { return down_[b]; }
  const Bitset& up(std::size_t a) const { return up_[a]; }
  int length(std::size_t coset) const { return group_->length(min_reps_[coset]); }
  int dimension() const { return group_->length(longest_min_rep_); }

 private:
  const WeylGroup* group_;
  std::uint32_t mask_;
  std::vector<int> non_levi_;
  std::vector<WeylElement> levi_group_;
  std::vector<WeylElement> min_reps_;
  std::vector<std::size_t> coset_;
  std::vector<std::size_t> position_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  WeylElement longest_levi_;
  WeylElement longest_min_rep_;
};

/// A cominuscule simple root gamma with the point representative w_0^{Q_gamma}.
struct CominusculeElement {
  int gamma;
  WeylElement element;
};

/// Cominuscule simple roots (coefficient one in the highest root) with their
/// point representatives. The identity is not included.
std::vector<CominusculeElement> cominuscule_elements(const WeylGroup& group);

/// W^comin = {1} union the point representatives, sorted by index.
std::vector<WeylElement> cominuscule_group(const WeylGroup& group);

/// The simple root gamma with w(gamma) < 0 for a non-identity element of
/// W^comin; throws UsageError if w is not such an element.
int cominuscule_root_of(const WeylGroup& group, WeylElement w);

/// Order of the coweight lattice modulo the coroot lattice, from the Smith
/// normal form of the Cartan matrix.
std::int64_t coweight_quotient_order(const RootSystem& roots);

/// "1" or a reduced word such as "s1s2" (1-based indices).
std::string word_string(const WeylGroup& group, WeylElement w);

}  // namespace flagcalc
