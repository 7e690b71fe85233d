#include "lvb/atlas.hpp"

#include "lvb/parallel.hpp"

namespace lvb {

Json to_json(const Weight& w) { return Json(w.coords()); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const ConjClass& c) { return Json(c.indices); }

namespace {

Json label_json(const std::optional<VeryEvenLabel>& l) { return l ? Json(to_string(*l)) : Json(nullptr); }

}  // namespace

Json classification_json(const Orbit& o) {
  const LieType& t = o.lie_type();
  const bool special = is_special(o);
  Json j;
  j["orbit"] = o.to_string();
  j["family"] = std::string(1, family_letter(t.family));
  j["rank"] = t.rank;
  j["rows"] = to_json(o.rows());
  j["columns"] = o.padded_columns();
  j["special"] = special;
  j["very_even_label"] = label_json(o.label());
  if (!special) {
    for (const char* k : {"p", "q", "decomposition", "generators"}) j[k] = nullptr;
    return j;
  }
  const Decomposition d = decompose(o);
  j["p"] = component_group_rank(o);
  j["q"] = lusztig_quotient_rank(o);
  j["decomposition"] = {{"core", d.core}, {"mu", d.mu}, {"nu", d.nu}};
  j["generators"] = generators(o).thetas;
  return j;
}

Json atlas_record(const Orbit& o) {
  Json j = classification_json(o);
  if (j["special"].get<bool>()) {
    Json table = Json::object();
    for (const LocalSystem& pi : all_local_systems(j["q"].get<int>()))
      table[label_local_system(o, pi)] = to_json(psi(o, pi));
    j["psi_table"] = std::move(table);
  }
  const Orbit dual = bv_dual(o);
  j["bv_dual_rows"] = to_json(dual.rows());
  j["bv_dual_label"] = label_json(dual.label());
  const SommersPair pre = canonical_preimage(o);
  j["canonical_preimage"] = {
      {"orbit", pre.orbit.to_string()}, {"rows", to_json(pre.orbit.rows())}, {"I", to_json(pre.cls)}};
  j["h_dual"] = to_json(dynkin_element(o));
  return j;
}

Json build_atlas(const LieType& t) {
  const std::vector<Orbit> orbits = enumerate_orbits(t);
  Json out = Json::array();
  for (Json& r : parallel_map(orbits.size(), [&](std::size_t i) { return atlas_record(orbits[i]); }))
    out.push_back(std::move(r));
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const VerifyReport& r) {
  Json j;
  j["family"] = std::string(1, family_letter(r.dual_type.family));
  j["rank"] = r.dual_type.rank;
  j["total"] = r.total_duals;
  j["passes"] = r.passes;
  Json fails = Json::array();
  for (const VerifyFailure& f : r.failures) {
    Json e;
    e["dual_rows"] = to_json(f.dual.rows());
    e["preimage_rows"] = f.preimage ? to_json(f.preimage->rows()) : Json(nullptr);
    e["I"] = to_json(f.cls);
    e["expected"] = to_json(f.expected);
    e["got"] = f.got ? to_json(*f.got) : Json(nullptr);
    e["reason"] = f.reason;
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  return j;
}

}  // namespace lvb
