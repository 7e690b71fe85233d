#include "lvb/lvmap.hpp"

#include <algorithm>
#include <cstdlib>

namespace lvb {

Weight::Weight(Family family, std::vector<int> coords) {
  int negatives = 0;
  bool has_zero = false;
  for (int& c : coords) {
    if (c < 0) {
      ++negatives;
      c = -c;
    }
    has_zero = has_zero || c == 0;
  }
  std::sort(coords.begin(), coords.end(), std::greater<>());
  // W(D_n) only flips an even number of signs; a zero coordinate absorbs the rest.
  if (family == Family::D && negatives % 2 == 1 && !has_zero && !coords.empty()) coords.back() = -coords.back();
  coords_ = std::move(coords);
}

std::string Weight::to_string() const { return format_cols(coords_); }

namespace {

void append_step2(Chain& out, int from, int to) {
  for (int v = from; v >= to; v -= 2) out.push_back(v);
}

void append_doubled(Chain& out, int from, int to) {
  for (int v = from; v >= to; v -= 2) out.insert(out.end(), {v, v});
}

// (a, a-2, ..., b, b-2, b-2, ..., then 2,2,0 or 1,1 by parity)
Chain through_low(int a, int b) {
  Chain c;
  append_step2(c, a, b);
  if (b % 2 == 0) {
    append_doubled(c, b - 2, 2);
    if (b > 0) c.push_back(0);
  } else {
    append_doubled(c, b - 2, 1);
  }
  return c;
}

// (a, a-2, ..., b+2, b-1, b-1, ..., then 1,1 or 2,2,0 by parity of b-1)
Chain below_low(int a, int b) {
  Chain c;
  append_step2(c, a, b + 2);
  const int t = b - 1;
  if (t < 0) return c;
  if (t % 2 == 1) {
    append_doubled(c, t, 1);
  } else {
    append_doubled(c, t, 2);
    c.push_back(0);
  }
  return c;
}

Chain pair_chain(int a, int b, Sign flavor) {
  const bool divisible = (a - b) % 4 == 0;
  const bool first_case = flavor == Sign::sgn ? divisible : !divisible;
  return first_case ? through_low(a, b) : below_low(a, b);
}

}  // namespace

Chain chain_K(int j) {
  if (j < 1) throw Error(ErrorCode::ParityViolation, "K_j needs j >= 1");
  Chain c;
  if (j % 2 == 1) {
    append_doubled(c, j - 1, 2);
    c.push_back(0);
  } else {
    append_doubled(c, j - 1, 1);
  }
  return c;
}

Chain chain_CD(int a, int a_low, Sign flavor) {
  if (a % 2 != 0 || a_low % 2 != 0 || a_low < 0 || a < a_low || a <= 0)
    throw Error(ErrorCode::ParityViolation, "chain_CD(" + std::to_string(a) + "," + std::to_string(a_low) +
                                                ") needs a >= a' >= 0 even with a > 0");
  return pair_chain(a, a_low, flavor);
}

Chain chain_B(int a, int a_low, Sign flavor) {
  if (a % 2 != 1 || a_low % 2 != 1 || a_low < 1 || a < a_low)
    throw Error(ErrorCode::ParityViolation,
                "chain_B(" + std::to_string(a) + "," + std::to_string(a_low) + ") needs a >= a' >= 1 odd");
  return pair_chain(a, a_low, flavor);
}

namespace {

void require_length(const Decomposition& d, const LocalSystem& pi) {
  if (pi.length() != d.q)
    throw Error(ErrorCode::LocalSystemLengthMismatch,
                "local system of length " + std::to_string(pi.length()) + " for q = " + std::to_string(d.q));
}

// Leading chain, one pair chain per (a''_{2s}, a''_{2s-1}), trailing chain.
Chain core_chains(const Decomposition& d, Family f, const LocalSystem& pi) {
  Chain w;
  if (f == Family::B) append_step2(w, d.core_at(2 * d.q + 1) - 2, 1);
  if (f == Family::D) append_step2(w, d.core_at(2 * d.q + 1) - 2, 0);
  for (int s = 1; s <= d.q; ++s) {
    const int a = d.core_at(2 * s), b = d.core_at(2 * s - 1);
    const Chain c = f == Family::B ? chain_B(a, b, pi.chi(s)) : chain_CD(a, b, pi.chi(s));
    w.insert(w.end(), c.begin(), c.end());
  }
  if (f != Family::B) append_step2(w, d.core_at(0), 2);
  return w;
}

}  // namespace

Weight psi_core(const Decomposition& d, const LieType& t, const LocalSystem& pi) {
  if (!d.mu.empty() || !d.nu.empty())
    throw Error(ErrorCode::InternalInconsistency, "psi_core takes a decomposition without mu or nu pairs");
  require_length(d, pi);
  Chain w = core_chains(d, t.family, pi);
  if (static_cast<int>(w.size()) != t.rank)
    throw Error(ErrorCode::InternalInconsistency, "core weight has " + std::to_string(w.size()) +
                                                      " coordinates, rank is " + std::to_string(t.rank));
  return Weight(t.family, std::move(w));
}

Weight psi_very_even(const Orbit& o) {
  if (!o.very_even()) throw Error(ErrorCode::NotVeryEven, o.to_string() + " is not very even");
  const std::vector<int> cols = transpose(o.rows()).parts();
  Chain w;
  for (std::size_t i = 0; i < cols.size(); i += 2) append_doubled(w, cols[i] - 1, 1);
  std::sort(w.begin(), w.end(), std::greater<>());
  if (*o.label() == VeryEvenLabel::II) w.back() = -w.back();
  return Weight(Family::D, std::move(w));
}

Weight psi(const Orbit& o, const LocalSystem& pi) {
  const Decomposition d = decompose(o);
  require_length(d, pi);
  if (o.very_even()) return psi_very_even(o);
  const LieType& t = o.lie_type();
  Chain w = core_chains(d, t.family, pi);
  for (int m : d.mu) {
    const Chain k = chain_K(m);
    w.insert(w.end(), k.begin(), k.end());
  }
  for (int v : d.nu) {
    const Chain k = chain_K(v);
    w.insert(w.end(), k.begin(), k.end());
  }
  if (static_cast<int>(w.size()) != t.rank)
    throw Error(ErrorCode::InternalInconsistency,
                "psi of " + o.to_string() + " has " + std::to_string(w.size()) + " coordinates");
  return Weight(t.family, std::move(w));
}

std::vector<LocalSystem> all_local_systems(int q) {
  std::vector<LocalSystem> out;
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    std::vector<Sign> chis(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k)
      chis[static_cast<std::size_t>(k)] = (mask >> (q - 1 - k)) & 1u ? Sign::sgn : Sign::triv;
    out.emplace_back(std::move(chis));
  }
  return out;
}

}  // namespace lvb
