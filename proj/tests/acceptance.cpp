// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every criterion is an exact comparison; there are no tolerances.

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "braidrep/braidrep.hpp"
#include "braidrep/cli.hpp"
#include "oracle.hpp"

using namespace braidrep;

namespace {

  struct Outcome {
    bool        passed = true;
    std::string detail;

    void expect(bool ok, std::string const& what) {
      if (!ok) {
        passed = false;
        if (!detail.empty()) {
          detail += "; ";
        }
        detail += what;
      }
    }
  };

  CycleSet const& cycles(int r) {
    static std::map<int, CycleSet> cache;
    auto it = cache.find(r);
    if (it == cache.end()) {
      it = cache.emplace(r, enumerate_cycles(Degree(r))).first;
    }
    return it->second;
  }

  std::multiset<std::size_t> periods(CycleSet const& cs, CycleKind kind) {
    std::multiset<std::size_t> out;
    for (auto const& c : cs.cycles()) {
      if (c.kind() == kind) {
        out.insert(c.period());
      }
    }
    return out;
  }

  Perm transposition(int i, Degree d) {
    std::vector<int> img(static_cast<std::size_t>(d.value()));
    for (int k = 0; k < d.value(); ++k) {
      img[static_cast<std::size_t>(k)] = k + 1;
    }
    std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
    return Perm::from_images(img);
  }

  Outcome c1() {
    Outcome    o;
    auto const& cs = cycles(2);
    o.expect(cs.representations() == 4, "|Hom(K_3, S_2)| != 4");
    o.expect(cs.size() == 2, "expected two cycles");
    o.expect(periods(cs, CycleKind::type_i) == std::multiset<std::size_t>{1, 3},
             "type I periods are not {1, 3}");
    o.expect(cs.cycles().front().is_trivial(), "first cycle is not trivial");
    return o;
  }

  Outcome c2() {
    Outcome    o;
    auto const& cs = cycles(3);
    o.expect(cs.representations() == 36, "|Hom(K_3, S_3)| != 36");
    o.expect(periods(cs, CycleKind::type_ii) == std::multiset<std::size_t>{2, 9, 9},
             "type II periods are not {9, 9, 2}");
    o.expect(format_paper_table(cs, true) == fixtures::kHomK3S3TypeII,
             "r=3 table differs from fixture");
    return o;
  }

  Outcome c3() {
    Outcome    o;
    auto const& cs = cycles(4);
    o.expect(cs.count(CycleKind::type_ii) == 71, "type II count != 71");
    auto const want = parse_paper_table(fixtures::kHomK3S4TypeII, Degree(4)).entries;
    std::vector<GoldenEntry> type2;
    for (auto const& c : cs.cycles()) {
      if (c.kind() == CycleKind::type_ii) {
        type2.push_back(golden_entry(c));
      }
    }
    std::size_t same = 0;
    for (std::size_t i = 0; i < std::min(type2.size(), want.size()); ++i) {
      same += type2[i] == want[i];
    }
    o.expect(same == 71 && want.size() == 71, std::to_string(same) + "/71 entries identical");
    o.expect(format_paper_table(cs, true) == fixtures::kHomK3S4TypeII,
             "r=4 table not byte-identical");
    return o;
  }

  Outcome c4() {
    Outcome o;
    for (int r = 2; r <= 5; ++r) {
      auto const& cs          = cycles(r);
      auto const [cnt, reps] = type1_closed_form(Degree(r));
      o.expect(cs.count(CycleKind::type_i) == cnt, "type I count r=" + std::to_string(r));
      o.expect(cs.representations(CycleKind::type_i) == reps,
               "type I representations r=" + std::to_string(r));
    }
    return o;
  }

  Outcome c5() {
    Outcome o;
    for (int r = 2; r <= 5; ++r) {
      std::uint64_t sum = 0;
      for (auto const& c : cycles(r).cycles()) {
        sum += c.period();
      }
      std::uint64_t const f = factorial(r);
      o.expect(sum == f * f, "sum of periods r=" + std::to_string(r));
    }
    return o;
  }

  Outcome c6() {
    Outcome    o;
    auto const got  = extension_data(enumerate_hom_kn(4, cycles(4)));
    auto const want = parse_extension_fixture(fixtures::kHomK4S4Extension);
    o.expect(got == want, "extension data differs");
    std::set<std::uint64_t> keys;
    for (auto const& [b3, vs] : got) {
      keys.insert(b3);
      o.expect(vs.size() == 10, "b_3=" + std::to_string(b3) + " not on ten vertices");
    }
    o.expect(keys == std::set<std::uint64_t>{8, 17, 24}, "b_3 set != {8, 17, 24}");
    return o;
  }

  Outcome c7() {
    Outcome    o;
    auto const k4 = enumerate_hom_kn(4, cycles(3));
    for (auto const& rep : k4.orbits()) {
      o.expect(rep.b(3).is_identity(), "nontrivial b_3 on a cycle at r=3");
    }
    o.expect(!k4.orbits().empty(), "Hom(K_4, S_3) empty");
    return o;
  }

  Outcome c8() {
    Outcome o;
    for (auto [n, r] : {std::pair{5, 3}, std::pair{5, 4}, std::pair{6, 5}}) {
      auto const kn = enumerate_hom_kn(n, cycles(r));
      o.expect(kn.only_trivial() && kn.representation_count() == 1,
               "Hom(K_" + std::to_string(n) + ", S_" + std::to_string(r) + ") not trivial");
    }
    return o;
  }

  Outcome c9() {
    Outcome o;
    o.expect(subgroup_count(3, Degree(2)) == 3, "K_3 index 2");
    o.expect(subgroup_count(3, Degree(3)) == 13, "K_3 index 3 subgroups");
    o.expect(transitive_reps(3, Degree(3)) == 26, "K_3 index 3 transitive");
    o.expect(subgroup_count(4, Degree(2)) == 3, "K_4 index 2");
    o.expect(subgroup_count(4, Degree(3)) == 13, "K_4 index 3 subgroups");
    o.expect(transitive_reps(4, Degree(3)) == 26, "K_4 index 3 transitive");
    return o;
  }

  Outcome c10() {
    Outcome o;
    for (int r = 2; r <= 5; ++r) {
      // brute force: walk every type I cycle and test each rotation
      std::uint64_t brute = 0;
      for (auto const& c : cycles(r).cycles()) {
        if (c.kind() == CycleKind::type_i && is_transitive(c.seq(), Degree(r))) {
          brute += c.period();
        }
      }
      o.expect(brute == transitive_type1_closed_form(Degree(r)),
               "3(r-1)! mismatch r=" + std::to_string(r));
    }
    return o;
  }

  Outcome c11() {
    Outcome      o;
    Degree const d(3);
    Perm const   s1 = transposition(1, d);
    Perm const   s2 = transposition(2, d);
    Perm const   z0 = compose(s2, inverse(s1));
    Perm const   z1 = compose(s1, z0, inverse(s1));
    o.expect(z0 == Perm::from_images({3, 1, 2}), "pi(z_0) != (132)");
    o.expect(z1 == Perm::from_images({2, 3, 1}), "pi(z_1) != (123)");
    auto const c = cycle_through({z0, z1});
    o.expect(c.label() == std::pair<std::uint64_t, std::uint64_t>{4, 5}, "label != B[4, 5]");
    bool found = false;
    for (std::size_t k = 0; k < c.period(); ++k) {
      auto const v = c.vertex(static_cast<std::int64_t>(k));
      found        = found || (v.a0 == z0 && v.a1 == z1);
    }
    o.expect(found, "no rotation equals (z_0, z_1)");
    auto const& cs = cycles(3).cycles();
    o.expect(std::find(cs.begin(), cs.end(), c) != cs.end(), "B[4, 5] not enumerated");
    return o;
  }

  Outcome c12() {
    Outcome      o;
    Degree const d(5);
    auto const   k5         = enumerate_hom_kn(5, cycles(5));
    auto const   nontrivial = k5.nontrivial();
    o.expect(!nontrivial.empty(), "no nontrivial representation");
    o.expect(parity_audit(nontrivial), "odd generator found");

    std::vector<Perm> s;
    for (int i = 1; i <= 4; ++i) {
      s.push_back(transposition(i, d));
    }
    Perm const s1inv = inverse(s[0]);
    Perm const z0    = compose(s[1], s1inv);
    Perm const z1    = compose(s[0], z0, s1inv);
    Perm const x3    = compose(s[2], s1inv);
    Perm const x4    = compose(s[3], s1inv);
    bool       found = false;
    for (auto const& rep : k5.representations()) {
      found = found || (rep.a(0) == z0 && rep.a(1) == z1 && rep.b(3) == x3 && rep.b(4) == x4);
    }
    o.expect(found, "pi|K_5 missing");
    return o;
  }

  Outcome c13() {
    Outcome o;
    for (auto [r, want] : {std::pair{4, 24ULL}, std::pair{3, 6ULL}}) {
      auto const bn = enumerate_hom_bn(enumerate_hom_kn(5, cycles(r)));
      o.expect(bn.representation_count() == want,
               "|Hom(B_5, S_" + std::to_string(r) + ")| != " + std::to_string(want));
      // all sigma_i equal <=> z's, x's trivial
      for (auto const& br : bn.representations()) {
        o.expect(br.rep.is_trivial(), "generator images differ");
      }
    }
    return o;
  }

  Outcome c14() {
    Outcome    o;
    auto const k5 = enumerate_hom_kn(5, cycles(4));
    o.expect(!k5.representations().empty(), "nothing extends to level 5");
    for (auto const& rep : k5.representations()) {
      TowerRep const base(rep.cycle_ptr(), rep.rotation());
      auto const     lifts = braid_intertwiners(base);
      o.expect(!lifts.empty(), "no braid lift");
      o.expect(std::find(lifts.begin(), lifts.end(), rep.b(4)) != lifts.end(),
               "b_4 is not a lift");
    }
    return o;
  }

  Outcome c15() {
    Outcome o;
    for (int r = 3; r <= 4; ++r) {
      auto const mine   = oracle::keys(enumerate_hom_kn(4, cycles(r)));
      auto const oracle = oracle::hom_kn_full_scan(4, Degree(r));
      o.expect(mine == oracle, "Hom(K_4, S_" + std::to_string(r) + ") differs from full scan");
    }
    return o;
  }

  Outcome c16() {
    Outcome      o;
    using namespace cli;
    unsigned const max = std::max(2U, std::thread::hardware_concurrency());
    auto           compare = [&](RunConfig cfg, std::string const& tag) {
      cfg.no_cache = true;
      cfg.workers  = 1;
      auto const a = run(cfg);
      cfg.workers  = max;
      auto const b = run(cfg);
      o.expect(a.out == b.out && a.status == b.status, tag);
      o.expect(a.status == kStatusOk, tag + " failed: " + a.err);
    };
    for (int r = 1; r <= 4; ++r) {
      for (auto fmt : {Format::paper, Format::json, Format::dot}) {
        RunConfig cfg;
        cfg.command = Command::cycles;
        cfg.r       = r;
        cfg.format  = fmt;
        compare(cfg, "cycles r=" + std::to_string(r));
      }
      RunConfig graph;
      graph.command = Command::graph;
      graph.r       = r;
      compare(graph, "graph r=" + std::to_string(r));
      for (int n = 3; n <= 5; ++n) {
        for (auto cmd : {Command::extend, Command::braid, Command::census}) {
          for (auto fmt : {Format::paper, Format::json}) {
            RunConfig cfg;
            cfg.command = cmd;
            cfg.n       = n;
            cfg.r       = r;
            cfg.format  = fmt;
            compare(cfg, std::string(cli::name(cmd)) + " n=" + std::to_string(n)
                             + " r=" + std::to_string(r));
          }
        }
      }
    }
    RunConfig conj;
    conj.command = Command::conjecture;
    conj.r       = 4;
    conj.n_max   = 6;
    compare(conj, "conjecture");
    RunConfig verify;
    verify.command = Command::verify_paper;
    compare(verify, "verify-paper");
    return o;
  }

}  // namespace

int main() {
  std::vector<std::pair<char const*, std::function<Outcome()>>> const criteria{
      {"|Hom(K_3, S_2)| = 4 with periods {1, 3}", c1},
      {"|Hom(K_3, S_3)| = 36, type II table r=3", c2},
      {"71 type II cycles at r=4, table r=4", c3},
      {"type I closed forms r=2..5", c4},
      {"mass conservation r=2..5", c5},
      {"K_4 extension at r=4", c6},
      {"K_4 extension at r=3 is trivial", c7},
      {"Hom(K_5,S_3), Hom(K_5,S_4), Hom(K_6,S_5) trivial", c8},
      {"subgroup census K_3, K_4", c9},
      {"transitive type I = 3(r-1)! r=2..5", c10},
      {"pi|K_3 is B[4, 5]", c11},
      {"Hom(K_5, S_5) nontrivial reps are even", c12},
      {"|Hom(B_5,S_4)| = 24, |Hom(B_5,S_3)| = 6", c13},
      {"c = b_4 lifts at (3, 4)", c14},
      {"K_4 full-scan oracle r=3,4", c15},
      {"CLI output independent of workers", c16},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& ex) {
      o.passed = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    failures += !o.passed;
    std::printf("%s %2zu  %s%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
