// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"

using namespace lvb;

namespace {

struct Check {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 5) problems.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    expect(got == want, what);
  }
};

std::vector<LieType> types_up_to(int max_rank) {
  std::vector<LieType> out;
  for (Family f : {Family::B, Family::C, Family::D})
    for (int n = f == Family::D ? 2 : 1; n <= max_rank; ++n) out.emplace_back(f, n);
  return out;
}

Orbit from_cols(Family f, int n, std::vector<int> cols) { return Orbit(LieType(f, n), transpose(Partition(cols))); }

Weight merged(Family f, std::initializer_list<Chain> parts) {
  Chain all;
  for (const Chain& c : parts) all.insert(all.end(), c.begin(), c.end());
  return Weight(f, all);
}

void worked_examples(Check& c) {
  struct Dec {
    Orbit o;
    std::vector<int> core, mu, nu;
    int p, q;
  };
  const std::vector<Dec> decs = {
      {from_cols(Family::B, 18, {9, 7, 5, 5, 3, 2, 2, 2, 2}), {9, 7, 3, 0}, {2}, {5, 2}, 2, 1},
      {from_cols(Family::C, 11, {6, 4, 4, 2, 2, 2, 2}), {6}, {}, {4, 2, 2}, 0, 0},
      {from_cols(Family::D, 10, {6, 3, 3, 2, 2, 2, 2}), {6, 2, 2, 0}, {3}, {2}, 2, 1},
  };
  for (const Dec& e : decs) {
    const Decomposition d = decompose(e.o);
    const std::string n = e.o.to_string();
    c.equal(d.core, e.core, n + " core");
    c.equal(d.mu, e.mu, n + " mu");
    c.equal(d.nu, e.nu, n + " nu");
    c.equal(component_group_rank(e.o), e.p, n + " p");
    c.equal(lusztig_quotient_rank(e.o), e.q, n + " q");
  }

  {
    const Orbit o = from_cols(Family::C, 11, {10, 6, 4, 2});
    const Decomposition d = decompose(o);
    const LieType t(Family::C, 11);
    const std::map<std::string, Weight> table = {
        {"++", merged(Family::C, {{10, 8, 5, 5, 3, 3, 1, 1}, {4, 2, 0}})},
        {"+-", merged(Family::C, {{10, 8, 5, 5, 3, 3, 1, 1}, {4, 1, 1}})},
        {"-+", merged(Family::C, {{10, 8, 6, 4, 4, 2, 2, 0}, {4, 2, 0}})},
        {"--", merged(Family::C, {{10, 8, 6, 4, 4, 2, 2, 0}, {4, 1, 1}})},
    };
    for (const auto& [signs, w] : table) c.equal(psi_core(d, t, LocalSystem::parse(signs)), w, "C core table " + signs);
  }

  {
    const Orbit o = from_cols(Family::B, 14, {11, 9, 5, 3, 1});
    const Decomposition d = decompose(o);
    std::set<Weight> got;
    for (const LocalSystem& pi : all_local_systems(2)) got.insert(psi_core(d, LieType(Family::B, 14), pi));
    const std::set<Weight> shown = {
        merged(Family::B, {{9, 7, 5, 3, 1}, {9, 7, 5, 3, 3, 1, 1}, {3, 0}}),
        merged(Family::B, {{9, 7, 5, 3, 1}, {9, 7, 5, 3, 3, 1, 1}, {3, 1}}),
        merged(Family::B, {{9, 7, 5, 3, 1}, {9, 7, 4, 4, 2, 2, 0}, {3, 0}}),
        merged(Family::B, {{9, 7, 5, 3, 1}, {9, 7, 4, 4, 2, 2, 0}, {3, 1}}),
    };
    c.equal(got, shown, "B core table as a set");
  }

  {
    const LieType c6(Family::C, 6), b6(Family::B, 6);
    const Orbit o(c6, Partition{4, 4, 2, 2});
    const std::map<std::string, Weight> psis = {
        {"++", merged(Family::C, {{3, 3, 1, 1}, {1, 1}})},
        {"-+", merged(Family::C, {{4, 2, 2, 0}, {1, 1}})},
        {"+-", merged(Family::C, {{3, 3, 1, 1}, {2, 0}})},
        {"--", merged(Family::C, {{4, 2, 2, 0}, {2, 0}})},
    };
    for (const auto& [signs, w] : psis) c.equal(psi(o, LocalSystem::parse(signs)), w, "C6 psi " + signs);

    struct Row {
      std::vector<int> I;
      Partition image;
      Weight h;
      std::set<std::string> cover;
    };
    const std::vector<Row> rows = {
        {{}, Partition{5, 3, 3, 1, 1}, merged(Family::B, {{4, 2, 2, 0}, {2, 0}}), {"++", "+-", "-+", "--"}},
        {{2}, Partition{4, 4, 3, 1, 1}, merged(Family::B, {{3, 3, 1, 1}, {2, 0}}), {"++", "+-"}},
        {{1}, Partition{5, 3, 2, 2, 1}, merged(Family::B, {{4, 2, 2, 0}, {1, 1}}), {"++", "-+"}},
        {{1, 2}, Partition{4, 4, 2, 2, 1}, merged(Family::B, {{3, 3, 1, 1}, {1, 1}}), {"++"}},
    };
    for (const Row& r : rows) {
      const ConjClass cls{r.I};
      const std::string n = "C6 [4,4,2,2] I=" + cls.to_string();
      const SommersImage img = sommers_d({o, cls});
      c.expect(img.orbit.has_value() && *img.orbit == Orbit(b6, r.image), n + " d-image");
      const Orbit o_vee(b6, r.image);
      c.equal(dynkin_element(o_vee), r.h, n + " h_dual");
      std::set<std::string> cover;
      std::vector<Weight> ws;
      for (const LocalSystem& pi : cover_local_systems(o, cls)) {
        cover.insert(pi.signs());
        ws.push_back(psi(o, pi));
      }
      c.equal(cover, r.cover, n + " cover");
      c.equal(max_weight(c6, ws), r.h, n + " max vs h_dual");
      c.equal(canonical_preimage(o_vee), SommersPair{o, cls}, n + " canonical preimage");
    }
  }
}

void verification_sweep(Check& c) {
  for (const LieType& t : types_up_to(8)) {
    const VerifyReport r = verify_achar_sommers(t);
    c.expect(r.total_duals > 0, t.name() + " has no orbits");
    c.expect(r.failures.empty(), t.name() + ": " + std::to_string(r.failure_count()) + " failures" +
                                     (r.failures.empty() ? "" : ", first " + r.failures[0].dual.to_string() + " " +
                                                                    r.failures[0].reason));
  }
}

void oracle_equivalence(Check& c) {
  for (const LieType& t : types_up_to(6)) {
    for (const Partition& p : partitions_of(t.dim())) {
      const auto want = oracle::collapse(t, p);
      c.expect(want && collapse(t, p) == *want, t.name() + " collapse " + format_rows(p));
    }
    for (const Orbit& o : enumerate_orbits(t)) {
      const auto want = oracle::special_cover(t, o.rows());
      c.expect(want && special_expansion(o).rows() == *want, o.to_string() + " special expansion");
    }
  }
}

void dual_paths(Check& c) {
  for (const LieType& t : types_up_to(8))
    for (const Orbit& o : enumerate_orbits(t)) {
      const bool sp = is_special(o);
      c.expect(sp == is_special_columns(o), o.to_string() + " specialness");
      if (sp) c.equal(ranks_from_rows(o), ranks_from_columns(o), o.to_string() + " p, q");
    }
}

void structure(Check& c) {
  for (int n = 0; n <= 20; ++n)
    for (const Partition& p : partitions_of(n)) c.equal(transpose(transpose(p)), p, "transpose " + format_rows(p));

  for (const LieType& t : types_up_to(8)) {
    std::set<Weight> seen;
    std::size_t pairs = 0;
    for (const Orbit& o : enumerate_orbits(t)) {
      if (!is_special(o)) continue;
      c.equal(bv_dual(bv_dual(o)), o, o.to_string() + " bv_dual involution");
      for (const LocalSystem& pi : all_local_systems(decompose(o).q)) {
        const Weight w = psi(o, pi);
        c.equal(static_cast<int>(w.length()), t.rank, o.to_string() + " psi length");
        seen.insert(w);
        ++pairs;
      }
    }
    c.equal(seen.size(), pairs, t.name() + " psi injective");

    for (const Orbit& o_vee : enumerate_orbits(t.langlands_dual())) {
      const SommersImage img = sommers_d(canonical_preimage(o_vee));
      c.expect(img.orbit && *img.orbit == o_vee, o_vee.to_string() + " round trip");
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked-example regression", 1.0, worked_examples},
      {2, "verification sweep, dual families B C D, ranks <= 8", 10.0, verification_sweep},
      {3, "collapse and special expansion oracle equivalence, ranks <= 6", 30.0, oracle_equivalence},
      {4, "row-form and column-form agreement, ranks <= 8", 0.0, dual_paths},
      {5, "structural properties", 0.0, structure},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_s > 0 && secs > cr.budget_s)
      c.problems.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(cr.budget_s) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (c.problems.empty() ? "PASS" : "FAIL") << " " << cr.id << " " << cr.name << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const std::string& p : c.problems) std::cout << "     " << p << "\n";
    failed += c.problems.empty() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
