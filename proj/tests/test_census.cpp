#include <set>

#include "catch_amalgamated.hpp"

#include "braidrep/census.hpp"
#include "oracle.hpp"

using namespace braidrep;

TEST_CASE("transitive representations", "[census]") {
  CHECK(transitive_reps(3, Degree(2)) == 3);
  CHECK(transitive_reps(3, Degree(3)) == 26);
  CHECK(transitive_reps(4, Degree(3)) == 26);
  CHECK_THROWS_AS(transitive_reps(2, Degree(3)), std::invalid_argument);
}

TEST_CASE("transitive type I closed form", "[census]") {
  CHECK(transitive_type1_closed_form(Degree(2)) == 3);
  CHECK(transitive_type1_closed_form(Degree(3)) == 6);
  CHECK(transitive_type1_closed_form(Degree(4)) == 18);
  CHECK_THROWS_AS(transitive_type1_closed_form(Degree(1)), std::invalid_argument);
  for (int r = 2; r <= 5; ++r) {
    auto const cs = enumerate_cycles(Degree(r));
    CHECK(transitive_type1_count(cs) == transitive_type1_closed_form(Degree(r)));
    // transitive type I cycles are exactly those through (1, a) with a an r-cycle
    for (auto const& c : cs.cycles()) {
      if (c.kind() != CycleKind::type_i || c.is_trivial()) {
        continue;
      }
      Perm const a = c.seq()[0].is_identity() ? c.seq()[1] : c.seq()[0];
      int        len = 1;
      for (int p = a(1); p != 1; p = a(p)) {
        ++len;
      }
      CHECK(is_transitive(c.seq(), Degree(r)) == (len == r));
    }
  }
}

TEST_CASE("K_3 transitive count splits by cycle type", "[census][property]") {
  for (int r = 2; r <= 4; ++r) {
    auto const    cs    = enumerate_cycles(Degree(r));
    std::uint64_t type2 = 0;
    for (auto const& c : cs.cycles()) {
      if (c.kind() == CycleKind::type_ii && is_transitive(c.seq(), Degree(r))) {
        type2 += c.period();
      }
    }
    CHECK(transitive_reps(enumerate_hom_kn(3, cs))
          == transitive_type1_closed_form(Degree(r)) + type2);
  }
}

TEST_CASE("subgroup counts", "[census]") {
  CHECK(subgroup_count(3, Degree(2)) == 3);
  CHECK(subgroup_count(3, Degree(3)) == 13);
  CHECK(subgroup_count(4, Degree(2)) == 3);
  CHECK(subgroup_count(4, Degree(3)) == 13);
  // divisibility holds everywhere we can compute
  for (int n = 3; n <= 6; ++n) {
    for (int r = 1; r <= 5; ++r) {
      CHECK_NOTHROW(subgroup_count(n, Degree(r)));
    }
  }
}

TEST_CASE("transitivity grows with the generator set", "[census][property]") {
  auto const k4 = enumerate_hom_kn(4, Degree(4));
  for (auto const& rep : k4.orbits()) {
    if (is_transitive(rep.cycle().seq(), Degree(4))) {
      CHECK(is_transitive(rep));
    }
  }
}

TEST_CASE("conjecture probes", "[census]") {
  CHECK(conjecture_probe(5, Degree(4)));
  CHECK(conjecture_probe(6, Degree(5)));
  CHECK(conjecture_probe(5, Degree(3)));
  CHECK(conjecture_probe(5, Degree(2)));
  // r = n: every nontrivial representation of K_5 into S_5 is transitive
  CHECK(conjecture_probe(5, Degree(5)));
  CHECK_THROWS_AS(conjecture_probe(4, Degree(3)), std::invalid_argument);
  CHECK_THROWS_AS(conjecture_probe(5, Degree(6)), std::invalid_argument);
}

TEST_CASE("braid subgroup counts", "[census]") {
  CHECK(braid_subgroup_count(5, Degree(2)) == 1);
  CHECK(braid_subgroup_count(5, Degree(3)) == 1);
  CHECK(braid_subgroup_count(5, Degree(4)) == 1);

  // B_3 into S_3: count transitive pairs (s_1, s_2) with the braid relation
  std::uint64_t transitive = 0;
  auto const    all        = all_perms(Degree(3));
  for (auto const& s1 : all) {
    for (auto const& s2 : all) {
      if (braid(s1, s2)) {
        std::vector<Perm> gens{s1, s2};
        transitive += is_transitive(gens, Degree(3));
      }
    }
  }
  CHECK(transitive == 8);
  CHECK(braid_subgroup_count(3, Degree(3)) == transitive / 2);
}

TEST_CASE("conjecture instances have exactly r! braid reps with cyclic image", "[census]") {
  for (auto [n, r] : {std::pair{5, 2}, std::pair{5, 3}, std::pair{5, 4}, std::pair{6, 5}}) {
    Degree const d(r);
    auto const   kn = enumerate_hom_kn(n, d);
    REQUIRE(conjecture_probe(kn));
    auto const bn = enumerate_hom_bn(kn);
    CHECK(bn.representation_count() == factorial(r));
    for (auto const& br : bn.orbits()) {
      CHECK(br.rep.is_trivial());  // every sigma_i = sigma_1
    }
  }
}

TEST_CASE("census report", "[census]") {
  auto const c = census(3, Degree(3));
  CHECK(c.total_reps == 36);
  CHECK(c.type1_cycles == 5);
  CHECK(c.type2_cycles == 3);
  CHECK(c.transitive_reps == 26);
  CHECK(c.subgroup_count == 13);
  CHECK_FALSE(c.conjecture_holds.has_value());

  for (int r = 1; r <= 5; ++r) {
    auto const rep = census(3, Degree(r));
    CHECK(rep.total_reps == factorial(r) * factorial(r));
    CHECK(rep.subgroup_count * factorial(r - 1) == rep.transitive_reps);
    CHECK(rep.total_reps >= rep.transitive_reps);
  }

  auto const k5 = census(5, Degree(4));
  REQUIRE(k5.conjecture_holds.has_value());
  CHECK(*k5.conjecture_holds);
  CHECK(k5.total_reps == 1);
  CHECK(k5.subgroup_count == 0);
}
