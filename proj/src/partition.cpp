#include "lvb/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace lvb {

char family_letter(Family f) {
  switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(std::string_view s) {
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw Error(ErrorCode::Parse, "unknown family '" + std::string(s) + "'");
}

LieType::LieType(Family f, int n) : family(f), rank(n) {
  const int min_rank = f == Family::D ? 2 : 1;
  if (n < min_rank)
    throw Error(ErrorCode::InvalidLieType,
                std::string(1, family_letter(f)) + std::to_string(n) + " is not a supported type");
}

LieType LieType::langlands_dual() const {
  switch (family) {
    case Family::B: return {Family::C, rank};
    case Family::C: return {Family::B, rank};
    case Family::D: return {Family::D, rank};
  }
  return *this;
}

std::string LieType::name() const { return family_letter(family) + std::to_string(rank); }

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw Error(ErrorCode::InvalidPartition, "parts must be positive (zeros only at the end)");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition transpose(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
  for (int part : p)
    for (int i = 0; i < part; ++i) ++cols[static_cast<std::size_t>(i)];
  return Partition(std::move(cols));
}

namespace {

// Parity of the parts whose multiplicity must be even: 0 for B/D, 1 for C.
int constrained_parity(Family f) { return f == Family::C ? 1 : 0; }

// Largest part of the constrained parity with odd multiplicity, or 0.
int largest_violation(Family f, const std::vector<int>& parts) {
  const int parity = constrained_parity(f);
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == parity && (j - i) % 2 == 1) return parts[i];
    i = j;
  }
  return 0;
}

}  // namespace

bool is_orbit_rows(const LieType& t, const Partition& p) {
  return p.size() == t.dim() && largest_violation(t.family, p.parts()) == 0;
}

Partition collapse(const LieType& t, const Partition& p) {
  if (p.size() != t.dim())
    throw Error(ErrorCode::SizeMismatch, "collapse: partition of " + std::to_string(p.size()) +
                                             " is not of size " + std::to_string(t.dim()));
  std::vector<int> parts = p.parts();
  // Lower the last copy of the largest bad part, raise the next part that is
  // at least two smaller. Each step moves strictly down in dominance.
  while (int bad = largest_violation(t.family, parts)) {
    auto last = std::find_if(parts.rbegin(), parts.rend(), [bad](int v) { return v == bad; });
    std::size_t i = static_cast<std::size_t>(parts.rend() - last) - 1;
    parts[i] -= 1;
    std::size_t j = i + 1;
    while (j < parts.size() && parts[j] >= bad - 1) ++j;
    if (j == parts.size()) parts.push_back(0);
    parts[j] += 1;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }
  return Partition(std::move(parts));
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::SizeMismatch, "dominance needs partitions of equal size");
  int sp = 0, sq = 0;
  const std::size_t n = std::max(p.num_parts(), q.num_parts());
  for (std::size_t i = 0; i < n; ++i) {
    sp += p.part_or_zero(i);
    sq += q.part_or_zero(i);
    if (sp > sq) return false;
  }
  return true;
}

bool is_very_even(const LieType& t, const Partition& p) {
  if (t.family != Family::D || p.empty()) return false;
  for (std::size_t i = 0; i < p.num_parts();) {
    std::size_t j = i;
    while (j < p.num_parts() && p[j] == p[i]) ++j;
    if (p[i] % 2 != 0 || (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  for (;;) {
    out.emplace_back(a);
    // Next partition in reverse lex order: find the last part > 1.
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int k = --a.back();
    int rest = ones + 1;
    while (rest > k) {
      a.push_back(k);
      rest -= k;
    }
    if (rest > 0) a.push_back(rest);
  }
  return out;
}

std::string format_list(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string format_rows(const Partition& p) { return "[" + format_list(p.parts()) + "]"; }

std::string format_cols(const std::vector<int>& cols) { return "(" + format_list(cols) + ")"; }

ParsedPartition parse_partition(std::string_view text) {
  ParsedPartition out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.starts_with("cols:")) {
    out.columns = true;
    text = trim(text.substr(5));
  }
  if (!text.empty() && (text.front() == '[' || text.front() == '(')) {
    const char close = text.front() == '[' ? ']' : ')';
    if (text.back() != close) throw Error(ErrorCode::Parse, "unbalanced brackets in '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
      throw Error(ErrorCode::Parse, "bad part '" + std::string(tok) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw Error(ErrorCode::Parse, "trailing comma");
  }
  out.partition = Partition(std::move(parts));
  return out;
}

}  // namespace lvb
