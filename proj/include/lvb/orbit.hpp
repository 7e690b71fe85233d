#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvb/partition.hpp"

namespace lvb {

/// The two orbits sharing a very even diagram in type D.
enum class VeryEvenLabel { I, II };

const char* to_string(VeryEvenLabel l);
VeryEvenLabel other(VeryEvenLabel l);

/// A nilpotent orbit of a classical algebra, identified by its rows.
/// The label is present exactly when the diagram is very even.
class Orbit {
 public:
  /// Throws InvalidPartition, LabelMissing or LabelForbidden.
  Orbit(LieType t, Partition rows, std::optional<VeryEvenLabel> label = std::nullopt);

  const LieType& lie_type() const { return type_; }
  const Partition& rows() const { return rows_; }
  const std::optional<VeryEvenLabel>& label() const { return label_; }
  bool very_even() const { return label_.has_value(); }

  /// Columns padded with a trailing 0 to the family's column-count parity
  /// (even for B and D, odd for C).
  std::vector<int> padded_columns() const;

  /// "C6:[4,4,2,2]", "D4:[4,4]:I".
  std::string to_string() const;

  bool operator==(const Orbit&) const = default;

 private:
  LieType type_;
  Partition rows_;
  std::optional<VeryEvenLabel> label_;
};

Orbit classify(const LieType& t, const Partition& rows, std::optional<VeryEvenLabel> label = std::nullopt);

/// Parses "B18:cols:(9,7,5,5,3,2,2,2,2,0)", "C6:[4,4,2,2]", "D4:4,4:II".
Orbit parse_orbit(std::string_view text);

/// Pads a column list with one trailing 0 when its length has the wrong parity.
std::vector<int> pad_columns(Family f, std::vector<int> cols);

/// Column-form orbit criterion on a (padded) column list.
bool is_orbit_columns(const LieType& t, const std::vector<int>& cols);

/// Row-form specialness: the transpose is a B orbit (type B) or a C orbit
/// of the same size (types C and D).
bool is_special(const Orbit& o);

/// Column-form specialness: columns of the wrong parity occur only as equal
/// pairs at positions (2l, 2l-1), counted from a_0 at the bottom.
bool is_special_columns(const Orbit& o);

/// Core / mu / nu splitting of the columns of a special orbit.
///
/// Columns are indexed a_{N-1} >= ... >= a_0 after padding. First every block
/// (a_{2m+1}, a_{2m}) with equal entries is removed into nu; the remainder
/// a'_* is re-indexed and every equal block (a'_{2l}, a'_{2l-1}) of the
/// family's mu-parity (even for B, odd for C and D) is removed into mu.
/// What remains is the core a''. Very even orbits have an empty core and
/// every column pair in nu.
struct Decomposition {
  std::vector<int> core;  // descending, core.front() = a''_top, core.back() = a''_0
  std::vector<int> mu;    // one entry per pair
  std::vector<int> nu;    // one entry per pair
  int q = 0;

  int x() const { return static_cast<int>(mu.size()); }
  int y() const { return static_cast<int>(nu.size()); }
  int p() const { return q + x(); }

  /// a''_k, with k counted from the bottom.
  int core_at(int k) const { return core[core.size() - 1 - static_cast<std::size_t>(k)]; }

  /// Sorted multiset of all columns, core zeros included.
  std::vector<int> reassemble() const;
};

Decomposition decompose(const Orbit& o);

struct Ranks {
  int p = 0;  // A(O) = (Z/2)^p
  int q = 0;  // Abar(O) = (Z/2)^q
  bool operator==(const Ranks&) const = default;
};

/// p and q read off the rows (odd/even row separation).
Ranks ranks_from_rows(const Orbit& o);
/// p and q read off the columns (nu, then mu separation).
Ranks ranks_from_columns(const Orbit& o);

/// Both routes, checked against each other. Throws NotSpecial.
int component_group_rank(const Orbit& o);
int lusztig_quotient_rank(const Orbit& o);

/// theta_q, ..., theta_1; each theta is the set of b-subscripts it multiplies.
struct Generators {
  std::vector<std::vector<int>> thetas;  // thetas[0] = theta_q
  /// theta_i for i in 1..q.
  const std::vector<int>& theta(int i) const { return thetas[thetas.size() - static_cast<std::size_t>(i)]; }
};

Generators generators(const Orbit& o);

enum class Sign { triv, sgn };

/// pi = chi_q x ... x chi_1 on the generators theta_i.
class LocalSystem {
 public:
  LocalSystem() = default;
  explicit LocalSystem(std::vector<Sign> chis) : chis_(std::move(chis)) {}
  /// All triv of length q.
  static LocalSystem trivial(int q) { return LocalSystem(std::vector<Sign>(static_cast<std::size_t>(q), Sign::triv)); }
  /// "+-" with '+' = triv, '-' = sgn, ordered chi_q ... chi_1.
  static LocalSystem parse(std::string_view signs);

  int length() const { return static_cast<int>(chis_.size()); }
  /// chi_i for i in 1..q.
  Sign chi(int i) const { return chis_[chis_.size() - static_cast<std::size_t>(i)]; }
  const std::vector<Sign>& chis() const { return chis_; }
  /// S = {i : chi_i = sgn}, ascending.
  std::vector<int> sgn_set() const;
  std::string signs() const;

  bool operator==(const LocalSystem&) const = default;
  auto operator<=>(const LocalSystem&) const = default;

 private:
  std::vector<Sign> chis_;
};

/// "4_-2_+": a''_{2i-1} subscripts with sign - exactly where chi_i = sgn.
std::string label_local_system(const Orbit& o, const LocalSystem& pi);

/// Every orbit of t, rows in reverse lex order, very even diagrams twice (I then II).
std::vector<Orbit> enumerate_orbits(const LieType& t);

}  // namespace lvb
