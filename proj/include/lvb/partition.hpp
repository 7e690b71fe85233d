#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lvb/error.hpp"

namespace lvb {

enum class Family { B, C, D };

char family_letter(Family f);
Family parse_family(std::string_view s);

/// A classical Lie type B_n, C_n or D_n.
struct LieType {
  Family family;
  int rank;

  LieType(Family f, int n);

  /// Dimension of the natural representation: 2n+1 for B, 2n for C and D.
  int dim() const { return family == Family::B ? 2 * rank + 1 : 2 * rank; }

  /// B <-> C, D <-> D.
  LieType langlands_dual() const;

  std::string name() const;  // "B6"

  bool operator==(const LieType&) const = default;
};

/// Weakly decreasing list of positive integers. Zeros on input are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Builds a partition from parts in any order.
  static Partition from_multiset(std::vector<int> parts);

  /// Sum of the parts.
  int size() const { return size_; }
  std::size_t num_parts() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i, or 0 past the end.
  int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int multiplicity(int value) const;

  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// q[i] = #{j : p[j] > i}.
Partition transpose(const Partition& p);

/// Row-form orbit test: size matches and, for B and D, every even part has
/// even multiplicity; for C, every odd part has even multiplicity.
bool is_orbit_rows(const LieType& t, const Partition& p);

/// The largest partition dominated by p that is a valid orbit of t.
Partition collapse(const LieType& t, const Partition& p);

/// Prefix-sum dominance p <= q. Throws SizeMismatch when sizes differ.
bool dominance_leq(const Partition& p, const Partition& q);

bool is_very_even(const LieType& t, const Partition& p);

/// All partitions of n in reverse lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

// Text forms: "9,7,5" or "[9,7,5]" for rows, "(9,7,5)" for columns on output.
std::string format_rows(const Partition& p);
std::string format_cols(const std::vector<int>& cols);
std::string format_list(const std::vector<int>& v);

struct ParsedPartition {
  Partition partition;
  bool columns = false;  // input carried a "cols:" prefix
};

/// Parses "9,7,5", "[9,7,5]", "(9,7,5,0)" or "cols:(9,7,5,0)".
ParsedPartition parse_partition(std::string_view text);

}  // namespace lvb
