#include "lvb/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "lvb/atlas.hpp"

namespace lvb {

namespace {

struct Options {
  std::string orbit;
  std::string signs;
  std::string family;
  int rank = 0;
  int max_rank = 10;
  bool json = false;
  std::string out_path;
};

LieType type_from(const Options& o) {
  if (o.family.empty() || o.rank == 0) throw Error(ErrorCode::Parse, "--family and --rank are required");
  return LieType(parse_family(o.family), o.rank);
}

void check_bound(const Options& o, const LieType& t) {
  if (t.rank > o.max_rank)
    throw Error(ErrorCode::Parse,
                "rank " + std::to_string(t.rank) + " exceeds the bound " + std::to_string(o.max_rank) + " (see --max-rank)");
}

// A bare partition takes its type from --family/--rank.
Orbit orbit_from(const Options& o) {
  if (o.orbit.empty()) throw Error(ErrorCode::Parse, "missing orbit");
  const char c = o.orbit.front();
  const bool bare = std::isdigit(static_cast<unsigned char>(c)) || c == '[' || c == '(' || o.orbit.starts_with("cols:");
  if (!bare) return parse_orbit(o.orbit);
  return parse_orbit(type_from(o).name() + ":" + o.orbit);
}

void emit(const Options& o, std::ostream& out, const Json& j) {
  if (o.out_path.empty()) {
    out << dump_json(j);
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, "cannot write '" + o.out_path + "'");
  f << dump_json(j);
  if (!f.flush()) throw Error(ErrorCode::Parse, "write to '" + o.out_path + "' failed");
}

std::string theta_text(const std::vector<int>& theta) { return "{" + format_list(theta) + "}"; }

int cmd_classify(const Options& opt, std::ostream& out) {
  const Orbit o = orbit_from(opt);
  const Json j = classification_json(o);
  if (opt.json) {
    emit(opt, out, j);
    return kExitOk;
  }
  out << "orbit    " << o.to_string() << "\n";
  out << "columns  " << format_cols(o.padded_columns()) << "\n";
  out << "special  " << (is_special(o) ? "yes" : "no") << "\n";
  if (!is_special(o)) return kExitOk;
  const Decomposition d = decompose(o);
  out << "core     " << format_cols(d.core) << "\n";
  out << "mu       " << format_cols(d.mu) << "\n";
  out << "nu       " << format_cols(d.nu) << "\n";
  out << "p        " << component_group_rank(o) << "\n";
  out << "q        " << d.q << "\n";
  const Generators g = generators(o);
  for (int i = d.q; i >= 1; --i) out << "theta_" << i << "  " << theta_text(g.theta(i)) << "\n";
  return kExitOk;
}

int cmd_psi(const Options& opt, std::ostream& out) {
  const Orbit o = orbit_from(opt);
  if (!is_special(o)) throw Error(ErrorCode::NotSpecial, o.to_string() + " is not special");
  const int q = decompose(o).q;
  std::vector<LocalSystem> systems;
  if (opt.signs.empty() && q > 0) systems = all_local_systems(q);
  else systems.push_back(LocalSystem::parse(opt.signs));
  for (const LocalSystem& pi : systems)
    if (pi.length() != q)
      throw Error(ErrorCode::LocalSystemLengthMismatch,
                  "sign string '" + pi.signs() + "' has length " + std::to_string(pi.length()) + ", q = " + std::to_string(q));

  Json arr = Json::array();
  for (const LocalSystem& pi : systems) {
    const Weight w = psi(o, pi);
    if (opt.json) {
      Json e;
      e["signs"] = pi.signs();
      e["label"] = label_local_system(o, pi);
      e["weight"] = to_json(w);
      arr.push_back(std::move(e));
    } else {
      out << w.to_string();
      const std::string label = label_local_system(o, pi);
      if (!label.empty()) out << "  " << label;
      out << "\n";
    }
  }
  if (opt.json) emit(opt, out, Json{{"orbit", o.to_string()}, {"psi", std::move(arr)}});
  return kExitOk;
}

int cmd_dual(const Options& opt, std::ostream& out) {
  const Orbit o = orbit_from(opt);
  const Orbit dual = bv_dual(o);
  const Orbit exp = special_expansion(o);
  if (opt.json) {
    Json j;
    j["orbit"] = o.to_string();
    j["bv_dual"] = dual.to_string();
    j["bv_dual_rows"] = to_json(dual.rows());
    j["special_expansion"] = exp.to_string();
    j["special_expansion_rows"] = to_json(exp.rows());
    emit(opt, out, j);
    return kExitOk;
  }
  out << "dual       " << dual.to_string() << "\n";
  out << "expansion  " << exp.to_string() << "\n";
  return kExitOk;
}

int cmd_preimage(const Options& opt, std::ostream& out) {
  const Orbit o = orbit_from(opt);
  const SommersPair pre = canonical_preimage(o);
  const SommersImage image = sommers_d(pre);
  std::vector<Weight> ws;
  for (const LocalSystem& pi : cover_local_systems(pre.orbit, pre.cls)) ws.push_back(psi(pre.orbit, pi));
  const Weight top = max_weight(pre.orbit.lie_type(), ws);
  const Weight h = dynkin_element(o);
  const bool round_trip = image.orbit && *image.orbit == o;
  const bool ok = round_trip && top == h;
  if (opt.json) {
    Json j;
    j["orbit"] = o.to_string();
    j["preimage"] = pre.orbit.to_string();
    j["preimage_rows"] = to_json(pre.orbit.rows());
    j["I"] = to_json(pre.cls);
    j["d_rows"] = to_json(image.rows);
    j["round_trip"] = round_trip;
    j["h_dual"] = to_json(h);
    j["max_psi"] = to_json(top);
    j["match"] = ok;
    emit(opt, out, j);
  } else {
    out << "preimage  " << pre.orbit.to_string() << "\n";
    out << "I         " << pre.cls.to_string() << "\n";
    out << "d         " << format_rows(image.rows) << (round_trip ? "" : "  (round trip FAILED)") << "\n";
    out << "h_dual    " << h.to_string() << "\n";
    out << "max psi   " << top.to_string() << (top == h ? "" : "  (MISMATCH)") << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const LieType t = type_from(opt);
  check_bound(opt, t);
  const VerifyReport r = verify_achar_sommers(t);
  if (opt.json) {
    emit(opt, out, to_json(r));
  } else {
    out << t.name() << ": " << r.total_duals << " dual orbits, " << r.passes << " passed, " << r.failure_count()
        << " failed\n";
    for (const VerifyFailure& f : r.failures) {
      out << "  " << f.dual.to_string() << " preimage " << (f.preimage ? f.preimage->to_string() : "-") << " I "
          << f.cls.to_string() << " expected " << f.expected.to_string() << " got "
          << (f.got ? f.got->to_string() : "-") << ": " << f.reason << "\n";
    }
  }
  return r.failures.empty() ? kExitOk : kExitVerifyFailed;
}

int cmd_atlas(const Options& opt, std::ostream& out) {
  const LieType t = type_from(opt);
  check_bound(opt, t);
  emit(opt, out, build_atlas(t));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lusztig-Vogan map and Sommers duality for classical nilpotent orbits", "lvb"};
  app.require_subcommand(1);
  Options opt;

  auto add_type = [&](CLI::App* sub, bool required) {
    auto* f = sub->add_option("--family", opt.family, "Lie family")->check(CLI::IsMember({"B", "C", "D"}));
    auto* r = sub->add_option("--rank", opt.rank, "rank")->check(CLI::PositiveNumber);
    if (required) {
      f->required();
      r->required();
    }
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--out", opt.out_path, "write output to PATH instead of stdout");
  };

  auto* classify = app.add_subcommand("classify", "validity, specialness, decomposition, p, q, generators");
  auto* psi_cmd = app.add_subcommand("psi", "Psi(O, pi) for one or all local systems");
  auto* dual = app.add_subcommand("dual", "Barbasch-Vogan dual and special expansion");
  auto* preimage = app.add_subcommand("preimage", "canonical preimage under Sommers' map");
  for (CLI::App* sub : {classify, psi_cmd, dual, preimage}) {
    sub->add_option("orbit", opt.orbit, "orbit, e.g. C6:[4,4,2,2] or B18:cols:(9,7,5,5,3,2,2,2,2,0)")->required();
    add_type(sub, false);
    add_output(sub);
  }
  psi_cmd->add_option("signs", opt.signs, "chi_q ... chi_1 as '+' (triv) and '-' (sgn); all if omitted");

  auto* verify = app.add_subcommand("verify", "max Psi over covers against h_dual for every orbit of the dual type");
  auto* atlas = app.add_subcommand("atlas", "JSON atlas of every orbit of a type");
  for (CLI::App* sub : {verify, atlas}) {
    add_type(sub, true);
    add_output(sub);
    sub->add_option("--max-rank", opt.max_rank, "largest accepted rank")->capture_default_str();
  }

  // Sign strings look like options ("-+", "--"), so psi takes them before parsing.
  std::vector<std::string> rest = args;
  if (!rest.empty() && rest.front() == "psi") {
    const auto is_signs = [](const std::string& a) {
      return !a.empty() && a.find_first_not_of("+-") == std::string::npos;
    };
    const auto it = std::find_if(rest.begin() + 1, rest.end(), is_signs);
    if (it != rest.end()) {
      opt.signs = *it;
      rest.erase(it);
    }
  }
  std::vector<std::string> rev(rest.rbegin(), rest.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*classify) return cmd_classify(opt, out);
    if (*psi_cmd) return cmd_psi(opt, out);
    if (*dual) return cmd_dual(opt, out);
    if (*preimage) return cmd_preimage(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*atlas) return cmd_atlas(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool internal = e.code() == ErrorCode::InternalInconsistency || e.code() == ErrorCode::NoMaximum;
    return internal ? kExitVerifyFailed : kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lvb
