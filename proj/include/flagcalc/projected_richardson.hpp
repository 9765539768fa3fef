#pragma once

#include <vector>

#include "flagcalc/equivariant.hpp"

namespace flagcalc {

/// Fixed points of the projection of the Richardson variety E_w^u of G/B to
/// G/P: {vW_P : u <= vx <= w for some x in W_P}. EmptyVarietyError unless u <= w.
Bitset proj_fixed_points(const FlagVariety& target, WeylElement w, WeylElement u);

struct DivisorRow {
  int beta = 0;
  Bitset fixed;
  bool all_fixed = false;
  /// pi_*([E_{w_0^P}] . [E^{s_beta}]) on the target.
  LocalizedClass cls;
};

struct DivisorPair {
  int beta1 = 0;
  int beta2 = 0;
  Rational constant;  // cls(beta1) = constant * cls(beta2)
};

struct DivisorScan {
  std::vector<DivisorRow> rows;
  std::vector<DivisorPair> pairs;
  bool any_all_fixed() const;
  bool any_equal_pair() const;
};

/// The divisors D_beta = Pi_{w_0^P}^{s_beta} for every simple root beta.
/// `full` must be G/B of the same group, with `full_loc` its localization.
DivisorScan divisor_scan(const Localization& full_loc, const FlagVariety& target);

}  // namespace flagcalc
