#include "lvb/duality.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lvb/parallel.hpp"

namespace lvb {

bool ConjClass::contains(int i) const { return std::find(indices.begin(), indices.end(), i) != indices.end(); }

std::string ConjClass::to_string() const { return "{" + format_list(indices) + "}"; }

Weight dynkin_element(const Orbit& o) {
  std::vector<int> eig;
  for (int r : o.rows())
    for (int v = r - 1; v >= -(r - 1); v -= 2) eig.push_back(v);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  eig.resize(static_cast<std::size_t>(o.lie_type().rank));
  if (o.label() == VeryEvenLabel::II && eig.back() != 0) eig.back() = -eig.back();
  return Weight(o.lie_type().family, std::move(eig));
}

namespace {

// Label of the dual of a very even orbit: kept for even rank, swapped for odd.
VeryEvenLabel dual_label(const LieType& t, VeryEvenLabel l) { return t.rank % 2 == 0 ? l : other(l); }

}  // namespace

Orbit bv_dual(const Orbit& o) {
  const LieType& t = o.lie_type();
  const LieType dual = t.langlands_dual();
  std::vector<int> cols = transpose(o.rows()).parts();
  switch (t.family) {
    case Family::B:
      cols.back() -= 1;
      break;
    case Family::C:
      cols.front() += 1;
      break;
    case Family::D:
      break;
  }
  const Partition rows = collapse(dual, Partition(std::move(cols)));
  if (is_very_even(dual, rows)) {
    if (!o.very_even())
      throw Error(ErrorCode::InternalInconsistency, "dual of non very even " + o.to_string() + " is very even");
    return Orbit(dual, rows, dual_label(t, *o.label()));
  }
  return Orbit(dual, rows);
}

Orbit special_expansion(const Orbit& o) { return bv_dual(bv_dual(o)); }

SommersImage sommers_d(const SommersPair& sp) {
  const Orbit& o = sp.orbit;
  const LieType& t = o.lie_type();
  const LieType dual = t.langlands_dual();
  const Decomposition d = decompose(o);
  for (std::size_t k = 0; k < sp.cls.indices.size(); ++k) {
    const int i = sp.cls.indices[k];
    if (i < 1 || i > d.q || (k > 0 && sp.cls.indices[k - 1] >= i))
      throw Error(ErrorCode::InvalidConjClass, sp.cls.to_string() + " is not a subset of 1.." + std::to_string(d.q));
  }
  if (o.very_even()) {
    // q = 0, so the class is trivial.
    const Orbit image = bv_dual(o);
    return {image.rows(), image};
  }
  std::vector<int> rows;
  if (t.family != Family::C) rows.push_back(d.core_at(2 * d.q + 1) - 1);
  for (int i = 1; i <= d.q; ++i) {
    const int a = d.core_at(2 * i), b = d.core_at(2 * i - 1);
    if (sp.cls.contains(i)) rows.insert(rows.end(), {a, b});
    else rows.insert(rows.end(), {a + 1, b - 1});
  }
  if (t.family != Family::B) rows.push_back(d.core_at(0) + 1);
  for (int m : d.mu) rows.insert(rows.end(), {m, m});
  for (int v : d.nu) rows.insert(rows.end(), {v, v});
  SommersImage out{Partition::from_multiset(std::move(rows)), std::nullopt};
  if (is_orbit_rows(dual, out.rows)) {
    if (is_very_even(dual, out.rows))
      throw Error(ErrorCode::InternalInconsistency, "d of non very even " + o.to_string() + " is very even");
    out.orbit.emplace(dual, out.rows);
  }
  return out;
}

Discrepancy discrepancy_set(const Orbit& o_vee) {
  Orbit expansion = special_expansion(o_vee);
  if (expansion == o_vee) return {std::move(expansion), {}};

  const Orbit preimage = bv_dual(expansion);
  const Decomposition d = decompose(preimage);
  std::map<int, int> diff;  // multiplicity in expansion minus multiplicity in o_vee
  for (int r : expansion.rows()) ++diff[r];
  for (int r : o_vee.rows()) --diff[r];

  ConjClass cls;
  std::map<int, int> explained;
  for (int i = 1; i <= d.q; ++i) {
    const int c = d.core_at(2 * i);
    if (c != d.core_at(2 * i - 1) || diff[c] != -2) continue;
    cls.indices.push_back(i);
    explained[c] -= 2;
    ++explained[c + 1];
    if (c - 1 > 0) ++explained[c - 1];
  }
  std::erase_if(diff, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(explained, [](const auto& kv) { return kv.second == 0; });
  if (diff != explained)
    throw Error(ErrorCode::InternalInconsistency,
                o_vee.to_string() + " differs from its expansion " + expansion.to_string() +
                    " by something other than [c+1, c-1] -> [c, c] replacements");
  return {std::move(expansion), std::move(cls)};
}

SommersPair canonical_preimage(const Orbit& o_vee) {
  if (o_vee.very_even()) return {bv_dual(o_vee), {}};
  Discrepancy disc = discrepancy_set(o_vee);
  return {bv_dual(disc.expansion), std::move(disc.cls)};
}

std::vector<LocalSystem> cover_local_systems(const Orbit& o, const ConjClass& c) {
  const int q = decompose(o).q;
  for (int i : c.indices)
    if (i < 1 || i > q) throw Error(ErrorCode::InvalidConjClass, c.to_string() + " is not a subset of 1.." + std::to_string(q));
  std::vector<LocalSystem> out;
  for (LocalSystem& pi : all_local_systems(q)) {
    bool keep = true;
    for (int i : c.indices) keep = keep && pi.chi(i) == Sign::triv;
    if (keep) out.push_back(std::move(pi));
  }
  return out;
}

bool weight_leq(const LieType& t, const Weight& lo, const Weight& hi) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  if (lo.length() != n || hi.length() != n) throw Error(ErrorCode::SizeMismatch, "weights must have length = rank");
  std::vector<long> diff(n), prefix(n);
  long s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = hi[i] - lo[i];
    s += diff[i];
    prefix[i] = s;
  }
  // Coefficients on the simple roots, read off the prefix sums.
  switch (t.family) {
    case Family::B:  // e_i - e_{i+1}, e_n
      return std::all_of(prefix.begin(), prefix.end(), [](long v) { return v >= 0; });
    case Family::C:  // e_i - e_{i+1}, 2 e_n
      return std::all_of(prefix.begin(), prefix.end(), [](long v) { return v >= 0; }) && prefix[n - 1] % 2 == 0;
    case Family::D: {  // e_i - e_{i+1}, e_{n-1} + e_n
      for (std::size_t k = 0; k + 2 < n; ++k)
        if (prefix[k] < 0) return false;
      const long total = prefix[n - 1];
      if (total % 2 != 0) return false;
      const long c_last = total / 2;
      const long c_next = (total - 2 * diff[n - 1]) / 2;
      return c_last >= 0 && c_next >= 0;
    }
  }
  return false;
}

Weight max_weight(const LieType& t, std::span<const Weight> ws) {
  if (ws.empty()) throw Error(ErrorCode::NoMaximum, "empty weight set");
  for (const Weight& cand : ws)
    if (std::all_of(ws.begin(), ws.end(), [&](const Weight& w) { return weight_leq(t, w, cand); })) return cand;
  throw Error(ErrorCode::NoMaximum, "no weight dominates the whole set");
}

VerifyReport verify_achar_sommers(const LieType& t_dual) {
  const std::vector<Orbit> duals = enumerate_orbits(t_dual);
  const LieType t = t_dual.langlands_dual();

  auto check = [&](std::size_t k) -> std::optional<VerifyFailure> {
    const Orbit& o_vee = duals[k];
    VerifyFailure f{o_vee, std::nullopt, {}, dynkin_element(o_vee), std::nullopt, {}};
    try {
      const SommersPair pre = canonical_preimage(o_vee);
      f.preimage = pre.orbit;
      f.cls = pre.cls;
      const SommersImage image = sommers_d(pre);
      if (!image.orbit || *image.orbit != o_vee) {
        f.reason = "canonical preimage does not map back under d";
        return f;
      }
      std::vector<Weight> ws;
      for (const LocalSystem& pi : cover_local_systems(pre.orbit, pre.cls)) ws.push_back(psi(pre.orbit, pi));
      f.got = max_weight(t, ws);
      if (*f.got == f.expected) return std::nullopt;
      f.reason = "maximal Psi differs from the Dynkin element";
    } catch (const Error& e) {
      f.reason = e.what();
    }
    return f;
  };

  VerifyReport report{t_dual, static_cast<int>(duals.size()), 0, {}};
  for (auto& r : parallel_map(duals.size(), check)) {
    if (r) report.failures.push_back(std::move(*r));
    else ++report.passes;
  }
  return report;
}

}  // namespace lvb
