#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lvb/lvmap.hpp"
#include "lvb/orbit.hpp"

namespace lvb {

/// C_I = prod_{i in I} theta_i; indices ascending, each in 1..q.
struct ConjClass {
  std::vector<int> indices;

  bool contains(int i) const;
  std::string to_string() const;  // "{1,2}"
  bool operator==(const ConjClass&) const = default;
};

struct SommersPair {
  Orbit orbit;
  ConjClass cls;
  bool operator==(const SommersPair&) const = default;
};

/// Assembled rows of d(O, C_I) and the dual orbit they define, if any.
struct SommersImage {
  Partition rows;
  std::optional<Orbit> orbit;  // empty when the rows fail the dual parity test
};

struct Discrepancy {
  Orbit expansion;
  ConjClass cls;
};

/// Semisimple element of a Jacobson-Morozov triple, as a dominant weight.
/// Each row r contributes r-1, r-3, ..., -(r-1); the n largest entries are
/// kept. Very even label II carries the minus sign on the final coordinate.
Weight dynkin_element(const Orbit& o);

/// Order-reversing duality into the Langlands dual algebra:
/// B -> C transposes and lowers the last part by 1 before C-collapse,
/// C -> B transposes and raises the first part by 1 before B-collapse,
/// D -> D transposes before D-collapse.
Orbit bv_dual(const Orbit& o);

/// Smallest special orbit above o; computed as bv_dual(bv_dual(o)).
Orbit special_expansion(const Orbit& o);

/// Where o_vee differs from its expansion: each i in I marks a core pair
/// (c, c) of the preimage whose rows [c+1, c-1] in the expansion are
/// replaced by [c, c] in o_vee.
Discrepancy discrepancy_set(const Orbit& o_vee);

/// Sommers' map on a canonical pair. For a special orbit with core a'':
///   B: [a''_top - 1] u pairs u mu u nu
///   C: pairs u [a''_0 + 1] u mu u nu
///   D: [a''_top - 1] u pairs u [a''_0 + 1] u mu u nu
/// where pair i is [a''_{2i}, a''_{2i-1}] for i in I and
/// [a''_{2i} + 1, a''_{2i-1} - 1] otherwise. Throws NotSpecial or InvalidConjClass.
SommersImage sommers_d(const SommersPair& sp);

SommersPair canonical_preimage(const Orbit& o_vee);

/// Local systems with chi_i = triv for every i in c.
std::vector<LocalSystem> cover_local_systems(const Orbit& o, const ConjClass& c);

/// Root-lattice dominance: lo <= hi iff hi - lo is a nonnegative integral
/// combination of the simple roots of t.
bool weight_leq(const LieType& t, const Weight& lo, const Weight& hi);

/// The element dominating every member of ws. Throws NoMaximum.
Weight max_weight(const LieType& t, std::span<const Weight> ws);

struct VerifyFailure {
  Orbit dual;
  std::optional<Orbit> preimage;
  ConjClass cls;
  Weight expected;
  std::optional<Weight> got;
  std::string reason;
};

struct VerifyReport {
  LieType dual_type;
  int total_duals = 0;
  int passes = 0;
  std::vector<VerifyFailure> failures;

  int failure_count() const { return static_cast<int>(failures.size()); }
};

/// For every orbit of t_dual: take its canonical preimage, check the round
/// trip through sommers_d, and compare the maximal Psi over the cover's local
/// systems with the Dynkin element. Failures are data, never exceptions.
VerifyReport verify_achar_sommers(const LieType& t_dual);

}  // namespace lvb
