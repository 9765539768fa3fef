#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagcalc/weyl_group.hpp"

namespace flagcalc {

/// Effective curve class in H_2(G/P): one coordinate per simple root outside
/// the Levi of P, in increasing root order.
struct Degree {
  std::vector<int> coords;

  Degree() = default;
  explicit Degree(std::vector<int> c) : coords(std::move(c)) {}
  static Degree zero(std::size_t n) { return Degree(std::vector<int>(n, 0)); }

  std::size_t size() const { return coords.size(); }
  int total() const;
  bool is_zero() const;
  bool is_effective() const;
  /// Componentwise order.
  bool leq(const Degree& o) const;
  Degree operator+(const Degree& o) const;
  Degree operator-(const Degree& o) const;
  auto operator<=>(const Degree&) const = default;
  std::string to_string() const;
};

/// All effective degrees with every coordinate at most `bound`.
std::vector<Degree> degrees_up_to(std::size_t n, int bound);
/// All effective degrees of total degree at most `total`.
std::vector<Degree> degrees_of_total_at_most(std::size_t n, int total);

/// Moment graph of G/P: vertices are the cosets W^P (by position), edges the
/// T-stable curves v -- v t_alpha for alpha in Phi^+ minus Phi_P^+.
struct MomentGraph {
  struct Edge {
    std::size_t a, b;
    int weight;  // root index: the T-weight of the curve, a_rep(alpha)
    int alpha;   // positive root index with b = a t_alpha
    Degree degree;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> incident;  // edge indices per vertex
};

/// G/P with its combinatorial data. Holds a reference to the group, which
/// must outlive it.
class FlagVariety {
 public:
  FlagVariety(const WeylGroup& group, std::uint32_t levi_mask);
  FlagVariety(const WeylGroup& group, const std::vector<int>& levi);

  const WeylGroup& group() const { return parabolic_.group(); }
  const Parabolic& parabolic() const { return parabolic_; }
  const MomentGraph& graph() const { return graph_; }
  std::size_t num_points() const { return parabolic_.num_cosets(); }
  int dimension() const { return parabolic_.dimension(); }
  std::size_t degree_size() const { return parabolic_.non_levi().size(); }
  std::string name() const;

  /// Image of a coroot (in the coroot basis) in H_2(G/P).
  Degree project(const IntVector& coroot_coords) const;
  /// Degree of the curve class alpha^vee for a root index.
  Degree root_degree(int root_index) const;
  /// Restrict a degree of this variety to a coarser one (Levi superset).
  Degree push_degree(const Degree& d, const FlagVariety& target) const;
  /// Integral of c_1(T X) over the class d.
  int chern_degree(const Degree& d) const;

  std::size_t point(WeylElement w) const { return parabolic_.coset_of(w); }
  WeylElement rep(std::size_t p) const { return parabolic_.rep(p); }

 private:
  void build_graph();

  Parabolic parabolic_;
  MomentGraph graph_;
  std::vector<int> c1_;  // c_1 pairing per H_2 coordinate
};

enum class Side { Schubert, Opposite };

/// X_w (B-stable), X^u (opposite), optionally translated by x in W.
struct SchubertDescriptor {
  Side side = Side::Opposite;
  WeylElement element;  // minimal coset representative
  std::optional<WeylElement> translation;
};

/// Fixed points of a (translated) Schubert variety, as a bitset over W^P.
Bitset fixed_points(const FlagVariety& fv, const SchubertDescriptor& d);
/// {x.p : p in set}
Bitset translate_points(const FlagVariety& fv, WeylElement x, const Bitset& set);
/// Dimension of the described variety.
int descriptor_dimension(const FlagVariety& fv, const SchubertDescriptor& d);

/// Pareto-minimal degrees of chains of T-stable curves from a start set,
/// per vertex. Degrees exceeding `cap` componentwise are not explored.
class DegreeLabels {
 public:
  DegreeLabels(const FlagVariety& fv, const Bitset& start, std::optional<Degree> cap = {});

  const std::vector<Degree>& labels(std::size_t vertex) const { return labels_[vertex]; }
  /// Vertices reachable within degree d.
  Bitset within(const Degree& d) const;

 private:
  std::vector<std::vector<Degree>> labels_;
};

/// Vertices reachable from `start` by chains with total degree <= d. This
/// is the reference oracle for curve neighborhoods.
Bitset combinatorial_nbhd(const FlagVariety& fv, const Bitset& start, const Degree& d);

/// z_d with Gamma_d(X_w) = X_{w . z_d} (Hecke product), by greedy choice of
/// maximal roots.
WeylElement curve_element(const FlagVariety& fv, const Degree& d);

/// Weyl element (in W^P) of the Schubert variety Gamma_d(X_w) or Gamma_d(X^w).
/// When `verify` is set the answer is checked against combinatorial_nbhd.
WeylElement curve_nbhd_weyl(const FlagVariety& fv, WeylElement w, Side side, const Degree& d,
                            bool verify = true);

/// dist_X(X_v, X^u): unique minimal degree of a chain of T-stable curves from
/// {x <= v} to {x >= u}. v and u are minimal representatives.
Degree min_connecting_degree(const FlagVariety& fv, WeylElement v, WeylElement u);

/// dist_X(X_v, X^u) for every u in W^P at once (indexed by position).
std::vector<Degree> min_connecting_degrees(const FlagVariety& fv, WeylElement v);

/// d(w, u) = omega_gamma^vee - u^{-1} omega_gamma^vee projected to H_2(G/P),
/// for w in W^comin (identity gives 0). u may be any element of W.
Degree seidel_degree(const FlagVariety& fv, WeylElement w, WeylElement u);

/// Gamma_e(w^{-1}.X^{wu}) = w^{-1}.X^{u'}.
struct TranslatedNbhd {
  WeylElement u_prime;      // in W^P
  WeylElement translation;  // w^{-1}
  Bitset fixed;             // w^{-1} . {v >= u'}
};
TranslatedNbhd gamma_e_translated(const FlagVariety& fv, WeylElement w, WeylElement u,
                                  const Degree& e);

/// w^{-1}.X^w and X_{w_0 w} have the same fixed points in G/P, w = w_0^Q for
/// the cominuscule root gamma.
bool dualpoint_check(const FlagVariety& fv, int gamma);

/// dist_X(X_v, X^u) for all pairs; table[v][u] by position.
using DistanceTable = std::vector<std::vector<Degree>>;
DistanceTable distance_table(const FlagVariety& fv);

struct ProjectionCheck {
  bool fixed_sets_equal = false;
  bool dist_projection = false;
  bool ok() const { return fixed_sets_equal && dist_projection; }
};

/// Gamma_d(X^u) = pi_1^{-1}(Gamma_d(Y_1^u)) cap pi_2^{-1}(Gamma_d(Y_2^u)) at
/// fixed-point level, plus pi_{i,*} dist_X(X_v, X^u) = dist_{Y_i}(...) for all v.
ProjectionCheck nbhd_projection_check(const FlagVariety& x, const FlagVariety& y1,
                                      const FlagVariety& y2, WeylElement u, const Degree& d);
/// Same, reusing precomputed distance tables of the three varieties.
ProjectionCheck nbhd_projection_check(const FlagVariety& x, const FlagVariety& y1,
                                      const FlagVariety& y2, WeylElement u, const Degree& d,
                                      const DistanceTable& dx, const DistanceTable& d1,
                                      const DistanceTable& d2);

}  // namespace flagcalc
