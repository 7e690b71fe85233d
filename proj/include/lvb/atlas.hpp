#pragma once

#include <json.hpp>
#include <string>

#include "lvb/duality.hpp"

namespace lvb {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const Partition& p);
Json to_json(const ConjClass& c);

/// Classification fields of one orbit, in fixed key order:
/// orbit, family, rank, rows, columns, special, very_even_label, p, q,
/// decomposition {core, mu, nu}, generators. The last five are null for
/// non-special orbits.
Json classification_json(const Orbit& o);

/// classification_json followed by psi_table (special orbits only, keyed by
/// local-system label), bv_dual_rows, bv_dual_label, canonical_preimage
/// {orbit, rows, I} and h_dual.
Json atlas_record(const Orbit& o);

/// One record per orbit of t, in enumerate_orbits order.
Json build_atlas(const LieType& t);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump_json(const Json& j);

/// {family, rank, total, passes, failures: [{dual_rows, preimage_rows, I, expected, got}]}.
Json to_json(const VerifyReport& r);

}  // namespace lvb
