#pragma once

#include <string>
#include <vector>

#include "lvb/orbit.hpp"

namespace lvb {

/// An integral weight in dominant form: coordinates ordered by nonincreasing
/// absolute value, all nonnegative except possibly the last one in type D.
class Weight {
 public:
  Weight() = default;
  /// Brings `coords` to dominant form for `family` (W-conjugation).
  Weight(Family family, std::vector<int> coords);

  const std::vector<int>& coords() const { return coords_; }
  std::size_t length() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }

  std::string to_string() const;  // "(4,2,2,1,1,0)"

  auto operator<=>(const Weight&) const = default;

 private:
  std::vector<int> coords_;
};

/// One unassembled block of a weight.
using Chain = std::vector<int>;

/// (j-1, j-1, j-3, j-3, ...), ending in 0 for odd j and in 1,1 for even j.
Chain chain_K(int j);

/// Pair chain for types C and D: a >= a' >= 0 even, a > 0. sgn gives A_s,
/// triv gives B_t; the case split is on (a - a') divisible by 4 (0 included).
Chain chain_CD(int a, int a_low, Sign flavor);

/// Pair chain for type B: a >= a' >= 1 odd. sgn gives A'_s, triv gives B'_t.
Chain chain_B(int a, int a_low, Sign flavor);

/// Psi on a core-only decomposition (mu and nu empty).
Weight psi_core(const Decomposition& d, const LieType& t, const LocalSystem& pi);

/// Psi(O_I, triv) is the union of (2a-1, 2a-1, ..., 1, 1) over the column
/// pairs (2a, 2a); label II flips the sign of the final 1.
Weight psi_very_even(const Orbit& o);

/// Core chains plus K_mu and K_nu for every separated pair.
Weight psi(const Orbit& o, const LocalSystem& pi);

/// All 2^q local systems, chi_q ... chi_1 counted in binary with triv = 0
/// (all-triv first).
std::vector<LocalSystem> all_local_systems(int q);

}  // namespace lvb
