#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace flagcalc {

using Rational = boost::rational<std::int64_t>;
using IntVector = std::vector<int>;

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

/// Cartan data of a finite reduced root system together with an explicit
/// list of roots.
///
/// Roots are stored in the simple-root basis, coroots in the simple-coroot
/// basis. Indexing: positive roots occupy [0, N) sorted by height (simple
/// root i has index i), and the negative of root k is root k + N.
///
/// Convention: cartan()[i][j] = <alpha_j, alpha_i^vee>.
class RootSystem {
 public:
  /// Valid pairs: A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2.
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  const std::vector<IntVector>& cartan() const { return cartan_; }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return 2 * num_positive_; }

  const IntVector& root(int index) const { return roots_[index]; }
  const IntVector& coroot(int index) const { return coroots_[index]; }
  bool is_positive(int index) const { return index < num_positive_; }
  int negate(int index) const {
    return index < num_positive_ ? index + num_positive_ : index - num_positive_;
  }
  int height(int index) const;

  /// Index of a root given by its simple-root coordinates, or -1.
  int find_root(const IntVector& coords) const;

  /// <beta, alpha_i^vee> for an arbitrary vector in the root lattice.
  int pair_with_simple_coroot(const IntVector& beta, int i) const;
  /// <beta, gamma^vee> with gamma^vee given in the coroot basis.
  int pair(const IntVector& beta, const IntVector& coroot_coords) const;

  /// Image of root `index` under the simple reflection s_i.
  int reflect_root(int i, int index) const { return simple_reflection_[i][index]; }

  int highest_root() const { return highest_root_; }

  /// Coordinates of the fundamental coweight omega_i^vee in the coroot basis.
  const std::vector<Rational>& fundamental_coweight(int i) const {
    return fundamental_coweights_[i];
  }
  /// Coordinates of the fundamental weight omega_i in the root basis.
  const std::vector<Rational>& fundamental_weight(int i) const { return fundamental_weights_[i]; }

  /// |det cartan|, computed with exact arithmetic.
  std::int64_t cartan_determinant() const;

 private:
  Family family_;
  int rank_;
  std::vector<IntVector> cartan_;
  std::vector<int> root_length2_;  // (alpha_i, alpha_i) in integer units
  int num_positive_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<std::vector<int>> simple_reflection_;
  int highest_root_ = 0;
  std::vector<std::vector<Rational>> fundamental_coweights_;
  std::vector<std::vector<Rational>> fundamental_weights_;
};

/// Exact inverse of a square integer matrix (throws if singular).
std::vector<std::vector<Rational>> invert_matrix(const std::vector<IntVector>& m);

/// Invariant factors of an integer matrix (Smith normal form diagonal).
std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m);

}  // namespace flagcalc
