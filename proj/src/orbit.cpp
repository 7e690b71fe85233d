#include "lvb/orbit.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace lvb {

const char* to_string(VeryEvenLabel l) { return l == VeryEvenLabel::I ? "I" : "II"; }

VeryEvenLabel other(VeryEvenLabel l) { return l == VeryEvenLabel::I ? VeryEvenLabel::II : VeryEvenLabel::I; }

Orbit::Orbit(LieType t, Partition rows, std::optional<VeryEvenLabel> label)
    : type_(t), rows_(std::move(rows)), label_(label) {
  if (rows_.size() != type_.dim())
    throw Error(ErrorCode::InvalidPartition, format_rows(rows_) + " has size " + std::to_string(rows_.size()) +
                                                 ", " + type_.name() + " needs " + std::to_string(type_.dim()));
  if (!is_orbit_rows(type_, rows_))
    throw Error(ErrorCode::InvalidPartition, format_rows(rows_) + " fails the " + type_.name() + " parity condition");
  const bool ve = is_very_even(type_, rows_);
  if (ve && !label_) throw Error(ErrorCode::LabelMissing, format_rows(rows_) + " is very even and needs I or II");
  if (!ve && label_) throw Error(ErrorCode::LabelForbidden, format_rows(rows_) + " is not very even");
}

std::vector<int> Orbit::padded_columns() const { return pad_columns(type_.family, transpose(rows_).parts()); }

std::string Orbit::to_string() const {
  std::string s = type_.name() + ":" + format_rows(rows_);
  if (label_) s += std::string(":") + lvb::to_string(*label_);
  return s;
}

Orbit classify(const LieType& t, const Partition& rows, std::optional<VeryEvenLabel> label) {
  return Orbit(t, rows, label);
}

Orbit parse_orbit(std::string_view text) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto colon = text.find(':');
    fields.push_back(text.substr(0, colon));
    if (colon == std::string_view::npos) break;
    text = text.substr(colon + 1);
  }
  if (fields.size() < 2) throw Error(ErrorCode::Parse, "expected TYPE:PARTITION");
  const std::string_view head = fields[0];
  if (head.size() < 2) throw Error(ErrorCode::Parse, "bad Lie type '" + std::string(head) + "'");
  const Family fam = parse_family(head.substr(0, 1));
  int rank = 0;
  const auto [ptr, ec] = std::from_chars(head.data() + 1, head.data() + head.size(), rank);
  if (ec != std::errc() || ptr != head.data() + head.size())
    throw Error(ErrorCode::Parse, "bad rank in '" + std::string(head) + "'");
  const LieType t(fam, rank);

  std::optional<VeryEvenLabel> label;
  if (fields.back() == "I") label = VeryEvenLabel::I;
  else if (fields.back() == "II") label = VeryEvenLabel::II;
  if (label) fields.pop_back();

  std::string body;
  for (std::size_t i = 1; i < fields.size(); ++i) body += (i > 1 ? ":" : "") + std::string(fields[i]);
  const ParsedPartition pp = parse_partition(body);
  const Partition rows = pp.columns ? transpose(pp.partition) : pp.partition;
  return Orbit(t, rows, label);
}

std::vector<int> pad_columns(Family f, std::vector<int> cols) {
  const bool want_odd = f == Family::C;
  if ((cols.size() % 2 == 1) != want_odd) cols.push_back(0);
  return cols;
}

bool is_orbit_columns(const LieType& t, const std::vector<int>& cols_in) {
  std::vector<int> cols = cols_in;
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  int total = 0;
  for (int c : cols) total += c;
  if (total != t.dim()) return false;
  cols = pad_columns(t.family, std::move(cols));
  // a_k counted from the bottom; a_{-1} = 0 closes the last block.
  const int n = static_cast<int>(cols.size());
  auto a = [&](int k) { return k < 0 ? 0 : cols[static_cast<std::size_t>(n - 1 - k)]; };
  for (int l = 0; 2 * l <= n - 1; ++l)
    if ((a(2 * l) + a(2 * l - 1)) % 2 != 0) return false;
  return true;
}

bool is_special(const Orbit& o) {
  const Partition t = transpose(o.rows());
  const Family target = o.lie_type().family == Family::B ? Family::B : Family::C;
  return is_orbit_rows(LieType(target, o.lie_type().rank), t);
}

bool is_special_columns(const Orbit& o) {
  const std::vector<int> cols = o.padded_columns();
  const int n = static_cast<int>(cols.size());
  auto a = [&](int k) { return cols[static_cast<std::size_t>(n - 1 - k)]; };
  // B: even columns must pair; C and D: odd columns must pair.
  const int bad_parity = o.lie_type().family == Family::B ? 0 : 1;
  for (int k = 0; k < n; ++k) {
    const int v = a(k);
    if (v == 0 || v % 2 != bad_parity) continue;
    const bool in_block = k >= 1 && (k % 2 == 0 ? k - 1 >= 0 && a(k - 1) == v : k + 1 < n && a(k + 1) == v);
    if (!in_block) return false;
  }
  return true;
}

std::vector<int> Decomposition::reassemble() const {
  std::vector<int> all = core;
  for (int m : mu) all.insert(all.end(), {m, m});
  for (int v : nu) all.insert(all.end(), {v, v});
  std::sort(all.begin(), all.end(), std::greater<>());
  return all;
}

namespace {

// Removes every block (a_{low+2m+1}, a_{low+2m}) with equal positive
// eligible entries; a_k counts up from the bottom of the top-down list
// `cols`. low = 0 gives blocks (2m+1, 2m), low = 1 gives (2l, 2l-1). One
// entry per removed block goes to `removed`, top-down.
std::vector<int> strip_equal_blocks(const std::vector<int>& cols, int low, std::vector<int>& removed,
                                    const std::function<bool(int)>& eligible) {
  const int n = static_cast<int>(cols.size());
  auto a = [&](int k) { return cols[static_cast<std::size_t>(n - 1 - k)]; };
  std::vector<bool> drop(cols.size(), false);
  for (int k = low; k + 1 <= n - 1; k += 2) {
    if (a(k) == a(k + 1) && a(k) > 0 && eligible(a(k))) {
      drop[static_cast<std::size_t>(n - 1 - k)] = true;
      drop[static_cast<std::size_t>(n - 2 - k)] = true;
    }
  }
  std::vector<int> kept;
  for (std::size_t i = 0; i < cols.size();) {
    if (drop[i]) {
      removed.push_back(cols[i]);
      i += 2;
    } else {
      kept.push_back(cols[i]);
      ++i;
    }
  }
  return kept;
}

void require_special(const Orbit& o, const char* what) {
  if (!is_special(o)) throw Error(ErrorCode::NotSpecial, std::string(what) + ": " + o.to_string() + " is not special");
}

}  // namespace

Decomposition decompose(const Orbit& o) {
  require_special(o, "decompose");
  const Family f = o.lie_type().family;
  Decomposition d;
  const std::vector<int> cols = o.padded_columns();
  const std::vector<int> primed = strip_equal_blocks(cols, 0, d.nu, [](int) { return true; });
  const int mu_parity = f == Family::B ? 0 : 1;
  d.core = strip_equal_blocks(primed, 1, d.mu, [mu_parity](int v) { return v % 2 == mu_parity; });
  if (o.very_even()) {
    if (!d.core.empty() || !d.mu.empty())
      throw Error(ErrorCode::InternalInconsistency, "very even orbit with a nonempty core");
    d.q = 0;
    return d;
  }
  const int n = static_cast<int>(d.core.size());
  const bool ok = f == Family::C ? n % 2 == 1 : (n % 2 == 0 && n >= 2);
  if (!ok) throw Error(ErrorCode::InternalInconsistency, "core of " + o.to_string() + " has bad length");
  d.q = f == Family::C ? (n - 1) / 2 : (n - 2) / 2;
  return d;
}

Ranks ranks_from_columns(const Orbit& o) {
  require_special(o, "ranks_from_columns");
  if (o.very_even()) return {0, 0};
  const Family f = o.lie_type().family;
  std::vector<int> nu;
  const std::vector<int> primed = strip_equal_blocks(o.padded_columns(), 0, nu, [](int) { return true; });
  const int np = static_cast<int>(primed.size());
  Ranks r;
  r.p = f == Family::C ? (np - 1) / 2 : (np - 2) / 2;
  r.q = decompose(o).q;
  return r;
}

Ranks ranks_from_rows(const Orbit& o) {
  require_special(o, "ranks_from_rows");
  if (o.very_even()) return {0, 0};
  const Family f = o.lie_type().family;
  const std::vector<int>& rows = o.rows().parts();

  std::set<int> distinct_odd, distinct_even;
  for (int r : rows) (r % 2 ? distinct_odd : distinct_even).insert(r);
  Ranks out;
  out.p = f == Family::C ? static_cast<int>(distinct_even.size()) : static_cast<int>(distinct_odd.size()) - 1;

  // Bottom-up row list; C pads with a zero row to an odd count.
  std::vector<int> up(rows.rbegin(), rows.rend());
  if (f == Family::C && up.size() % 2 == 0) up.insert(up.begin(), 0);
  // Drop the paired rows of the "wrong" parity (even rows for B/D, odd for C).
  const int drop_parity = f == Family::C ? 1 : 0;
  std::vector<int> kept;
  for (int r : up)
    if (r == 0 || r % 2 != drop_parity) kept.push_back(r);
  // Remaining rows pair as (r_{2l}, r_{2l-1}); in B/D that is bottom-up
  // positions (1,2), (3,4), ...; in C the list starts at r_1, so (0,1), (2,3), ...
  const std::size_t start = f == Family::C ? 0 : 1;
  std::vector<bool> drop(kept.size(), false);
  for (std::size_t k = start; k + 1 < kept.size(); k += 2)
    if (kept[k] == kept[k + 1] && kept[k] > 0) drop[k] = drop[k + 1] = true;
  const int remaining = static_cast<int>(std::count(drop.begin(), drop.end(), false));
  out.q = f == Family::D ? (remaining - 2) / 2 : (remaining - 1) / 2;
  return out;
}

int component_group_rank(const Orbit& o) {
  const Ranks r = ranks_from_rows(o), c = ranks_from_columns(o);
  if (r.p != c.p)
    throw Error(ErrorCode::InternalInconsistency, "row and column ranks of A(O) disagree for " + o.to_string());
  return r.p;
}

int lusztig_quotient_rank(const Orbit& o) {
  const Ranks r = ranks_from_rows(o), c = ranks_from_columns(o);
  if (r.q != c.q)
    throw Error(ErrorCode::InternalInconsistency, "row and column ranks of Abar(O) disagree for " + o.to_string());
  return r.q;
}

Generators generators(const Orbit& o) {
  const Decomposition d = decompose(o);
  Generators g;
  for (int i = d.q; i >= 1; --i) {
    if (o.lie_type().family == Family::C && i == d.q)
      g.thetas.push_back({d.core_at(2 * i - 1)});
    else
      g.thetas.push_back({d.core_at(2 * i + 1), d.core_at(2 * i - 1)});
  }
  return g;
}

LocalSystem LocalSystem::parse(std::string_view signs) {
  std::vector<Sign> chis;
  for (char c : signs) {
    if (c == '+') chis.push_back(Sign::triv);
    else if (c == '-') chis.push_back(Sign::sgn);
    else throw Error(ErrorCode::Parse, std::string("sign string may only contain '+' and '-', got '") + c + "'");
  }
  return LocalSystem(std::move(chis));
}

std::vector<int> LocalSystem::sgn_set() const {
  std::vector<int> s;
  for (int i = 1; i <= length(); ++i)
    if (chi(i) == Sign::sgn) s.push_back(i);
  return s;
}

std::string LocalSystem::signs() const {
  std::string s;
  for (Sign c : chis_) s += c == Sign::triv ? '+' : '-';
  return s;
}

std::string label_local_system(const Orbit& o, const LocalSystem& pi) {
  const Decomposition d = decompose(o);
  if (pi.length() != d.q)
    throw Error(ErrorCode::LocalSystemLengthMismatch,
                "local system of length " + std::to_string(pi.length()) + " for q = " + std::to_string(d.q));
  std::string s;
  for (int i = d.q; i >= 1; --i)
    s += std::to_string(d.core_at(2 * i - 1)) + "_" + (pi.chi(i) == Sign::sgn ? "-" : "+");
  return s;
}

std::vector<Orbit> enumerate_orbits(const LieType& t) {
  std::vector<Orbit> out;
  for (const Partition& p : partitions_of(t.dim())) {
    if (!is_orbit_rows(t, p)) continue;
    if (is_very_even(t, p)) {
      out.emplace_back(t, p, VeryEvenLabel::I);
      out.emplace_back(t, p, VeryEvenLabel::II);
    } else {
      out.emplace_back(t, p);
    }
  }
  return out;
}

}  // namespace lvb
