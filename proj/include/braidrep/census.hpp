// Transitive representations, subgroup counts by index, and finite instance
// checks of the triviality conjectures.
//
// Subgroups of index r in a group K correspond to transitive homomorphisms
// K -> S_r, (r - 1)! of them per subgroup.

#ifndef BRAIDREP_CENSUS_HPP_
#define BRAIDREP_CENSUS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"
#include "perm.hpp"
#include "shift_graph.hpp"
#include "tower.hpp"

namespace braidrep {

  struct CensusReport {
    int                 n = 3;
    int                 degree = 1;
    std::uint64_t       total_reps = 0;
    std::uint64_t       type1_cycles = 0;
    std::uint64_t       type2_cycles = 0;
    std::uint64_t       transitive_reps = 0;
    std::uint64_t       subgroup_count = 0;
    std::optional<bool> conjecture_holds;

    friend bool operator==(CensusReport const&, CensusReport const&) = default;
  };

  [[nodiscard]] inline bool is_transitive(TowerRep const& rep) {
    auto const gens = rep.generators();
    return is_transitive(gens, rep.degree());
  }

  [[nodiscard]] inline bool is_transitive(BraidRep const& br) {
    auto gens = br.rep.generators();
    gens.push_back(br.c);
    return is_transitive(gens, br.rep.degree());
  }

  [[nodiscard]] inline std::uint64_t transitive_reps(HomKn const& hom) {
    std::uint64_t total = 0;
    for (auto const& o : hom.orbits()) {
      total += is_transitive(o) ? o.period() : 0;
    }
    return total;
  }

  [[nodiscard]] inline std::uint64_t transitive_reps(int                       n,
                                                     Degree                    d,
                                                     EnumerationOptions const& opts = {}) {
    return transitive_reps(enumerate_hom_kn(n, d, opts));
  }

  [[nodiscard]] inline std::uint64_t transitive_type1_closed_form(Degree d) {
    if (d.value() < 2) {
      throw std::invalid_argument("closed form needs r >= 2");
    }
    return 3 * factorial(d.value() - 1);
  }

  // Sum of periods of transitive type I cycles, by orbit closure.
  [[nodiscard]] inline std::uint64_t transitive_type1_count(CycleSet const& cs) {
    std::uint64_t total = 0;
    for (auto const& c : cs.cycles()) {
      if (c.kind() == CycleKind::type_i && is_transitive(c.seq(), cs.degree())) {
        total += c.period();
      }
    }
    return total;
  }

  namespace detail {
    [[nodiscard]] inline std::uint64_t divide_by_stabilizer(std::uint64_t transitive,
                                                            Degree        d) {
      std::uint64_t const f = factorial(d.value() - 1);
      if (transitive % f != 0) {
        throw std::logic_error("transitive count " + std::to_string(transitive)
                               + " is not divisible by (r-1)! = "
                               + std::to_string(f));
      }
      return transitive / f;
    }
  }  // namespace detail

  [[nodiscard]] inline std::uint64_t subgroup_count(HomKn const& hom) {
    return detail::divide_by_stabilizer(transitive_reps(hom), hom.degree());
  }

  [[nodiscard]] inline std::uint64_t subgroup_count(int                       n,
                                                    Degree                    d,
                                                    EnumerationOptions const& opts = {}) {
    return subgroup_count(enumerate_hom_kn(n, d, opts));
  }

  [[nodiscard]] inline std::uint64_t braid_transitive_reps(HomBn const& hom) {
    std::uint64_t total = 0;
    for (auto const& o : hom.orbits()) {
      total += is_transitive(o) ? o.rep.period() : 0;
    }
    return total;
  }

  [[nodiscard]] inline std::uint64_t braid_subgroup_count(HomBn const& hom) {
    return detail::divide_by_stabilizer(braid_transitive_reps(hom), hom.degree());
  }

  [[nodiscard]] inline std::uint64_t braid_subgroup_count(int                       n,
                                                          Degree                    d,
                                                          EnumerationOptions const& opts = {}) {
    return braid_subgroup_count(enumerate_hom_bn(n, d, opts));
  }

  [[nodiscard]] inline bool in_conjecture_domain(int n, Degree d) noexcept {
    return n >= 5 && d.value() <= n;
  }

  // For r < n: Hom(K_n, S_r) is trivial. For r == n: every nontrivial
  // representation of K_n into S_n is transitive. Instance checks only.
  [[nodiscard]] inline bool conjecture_probe(HomKn const& hom) {
    if (!in_conjecture_domain(hom.level(), hom.degree())) {
      throw std::invalid_argument("conjecture probe needs n >= 5 and r <= n");
    }
    if (hom.degree().value() < hom.level()) {
      return hom.only_trivial();
    }
    auto const rest = hom.nontrivial();
    return std::all_of(rest.begin(), rest.end(),
                       [](auto const& rep) { return is_transitive(rep); });
  }

  [[nodiscard]] inline bool conjecture_probe(int                       n,
                                             Degree                    d,
                                             EnumerationOptions const& opts = {}) {
    if (!in_conjecture_domain(n, d)) {
      throw std::invalid_argument("conjecture probe needs n >= 5 and r <= n");
    }
    return conjecture_probe(enumerate_hom_kn(n, d, opts));
  }

  [[nodiscard]] inline CensusReport census(HomKn const& hom) {
    CensusReport rep;
    rep.n          = hom.level();
    rep.degree     = hom.degree().value();
    rep.total_reps = hom.representation_count();
    ShiftCycle const* last = nullptr;
    for (auto const& o : hom.orbits()) {
      if (&o.cycle() != last && (last == nullptr || o.cycle() != *last)) {
        (o.cycle().kind() == CycleKind::type_i ? rep.type1_cycles : rep.type2_cycles) += 1;
      }
      last = &o.cycle();
    }
    rep.transitive_reps = transitive_reps(hom);
    rep.subgroup_count  = detail::divide_by_stabilizer(rep.transitive_reps, hom.degree());
    if (in_conjecture_domain(hom.level(), hom.degree())) {
      rep.conjecture_holds = conjecture_probe(hom);
    }
    return rep;
  }

  [[nodiscard]] inline CensusReport census(int                       n,
                                           Degree                    d,
                                           EnumerationOptions const& opts = {}) {
    return census(enumerate_hom_kn(n, d, opts));
  }

}  // namespace braidrep

#endif  // BRAIDREP_CENSUS_HPP_
