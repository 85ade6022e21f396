// JSON encoding of results. Permutations are written as ranks only; every
// document carries its degree. Field order is fixed.
//
//   CycleSet     {"degree", "cycles": [{"vertex": [i0, i1], "period", "kind",
//                 "ranks": [a_0, ..., a_{p-1}]}]}
//   HomKn        {"n", "degree", "representation_count",
//                 "orbits": [{"cycle": [ranks], "rotation", "b": [ranks], "trivial"}]}
//   HomBn        as HomKn, each orbit with an extra "c": rank
//   CensusReport {"n", "degree", "total_reps", "type1_cycles", "type2_cycles",
//                 "transitive_reps", "subgroup_count", "conjecture_holds"}

#ifndef BRAIDREP_SERIALIZE_HPP_
#define BRAIDREP_SERIALIZE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "census.hpp"
#include "perm.hpp"
#include "shift_graph.hpp"
#include "tower.hpp"

namespace braidrep {

  using Json = nlohmann::ordered_json;

  namespace detail {
    [[nodiscard]] inline Json ranks_json(std::vector<Perm> const& perms) {
      Json out = Json::array();
      for (auto const& p : perms) {
        out.push_back(rank_of(p).value());
      }
      return out;
    }

    [[nodiscard]] inline std::vector<Perm> perms_from_json(Json const& j, Degree d) {
      std::vector<Perm> out;
      for (auto const& k : j) {
        out.push_back(perm_of_rank(k.get<std::uint64_t>(), d));
      }
      return out;
    }

    [[nodiscard]] inline Json tower_json(TowerRep const& rep) {
      return Json{{"cycle", ranks_json(rep.cycle().seq())},
                  {"rotation", rep.rotation()},
                  {"b", ranks_json(rep.bseq())},
                  {"trivial", rep.is_trivial()}};
    }

    [[nodiscard]] inline TowerRep tower_from_json(Json const& j, Degree d) {
      auto cycle = std::make_shared<ShiftCycle const>(
          ShiftCycle::from_sequence(perms_from_json(j.at("cycle"), d)));
      return TowerRep(std::move(cycle), j.at("rotation").get<std::size_t>(),
                      perms_from_json(j.at("b"), d));
    }
  }  // namespace detail

  [[nodiscard]] inline Json to_json(CycleSet const& cs) {
    Json cycles = Json::array();
    for (auto const& c : cs.cycles()) {
      auto const [i0, i1] = c.label();
      cycles.push_back(Json{{"vertex", {i0, i1}},
                            {"period", c.period()},
                            {"kind", to_string(c.kind())},
                            {"ranks", detail::ranks_json(c.seq())}});
    }
    return Json{{"degree", cs.degree().value()}, {"cycles", std::move(cycles)}};
  }

  [[nodiscard]] inline CycleSet cycle_set_from_json(Json const& j) {
    Degree const            d(j.at("degree").get<int>());
    std::vector<ShiftCycle> cycles;
    for (auto const& c : j.at("cycles")) {
      cycles.push_back(ShiftCycle::from_sequence(detail::perms_from_json(c.at("ranks"), d)));
      if (to_string(cycles.back().kind()) != c.at("kind").get<std::string>()) {
        throw std::invalid_argument("cycle kind does not match its sequence");
      }
    }
    return CycleSet(d, std::move(cycles));
  }

  [[nodiscard]] inline Json to_json(HomKn const& hom) {
    Json orbits = Json::array();
    for (auto const& o : hom.orbits()) {
      orbits.push_back(detail::tower_json(o));
    }
    return Json{{"n", hom.level()},
                {"degree", hom.degree().value()},
                {"representation_count", hom.representation_count()},
                {"orbits", std::move(orbits)}};
  }

  [[nodiscard]] inline HomKn hom_kn_from_json(Json const& j) {
    Degree const          d(j.at("degree").get<int>());
    std::vector<TowerRep> orbits;
    for (auto const& o : j.at("orbits")) {
      orbits.push_back(detail::tower_from_json(o, d));
    }
    return HomKn(j.at("n").get<int>(), d, std::move(orbits));
  }

  [[nodiscard]] inline Json to_json(HomBn const& hom) {
    Json orbits = Json::array();
    for (auto const& o : hom.orbits()) {
      Json entry = detail::tower_json(o.rep);
      entry["c"] = rank_of(o.c).value();
      orbits.push_back(std::move(entry));
    }
    return Json{{"n", hom.level()},
                {"degree", hom.degree().value()},
                {"representation_count", hom.representation_count()},
                {"orbits", std::move(orbits)}};
  }

  [[nodiscard]] inline HomBn hom_bn_from_json(Json const& j) {
    Degree const          d(j.at("degree").get<int>());
    std::vector<BraidRep> orbits;
    for (auto const& o : j.at("orbits")) {
      orbits.push_back({detail::tower_from_json(o, d),
                        perm_of_rank(o.at("c").get<std::uint64_t>(), d)});
    }
    return HomBn(j.at("n").get<int>(), d, std::move(orbits));
  }

  [[nodiscard]] inline Json to_json(CensusReport const& c) {
    Json j{{"n", c.n},
           {"degree", c.degree},
           {"total_reps", c.total_reps},
           {"type1_cycles", c.type1_cycles},
           {"type2_cycles", c.type2_cycles},
           {"transitive_reps", c.transitive_reps},
           {"subgroup_count", c.subgroup_count}};
    j["conjecture_holds"] = c.conjecture_holds ? Json(*c.conjecture_holds) : Json(nullptr);
    return j;
  }

  [[nodiscard]] inline CensusReport census_from_json(Json const& j) {
    CensusReport c;
    c.n               = j.at("n").get<int>();
    c.degree          = j.at("degree").get<int>();
    c.total_reps      = j.at("total_reps").get<std::uint64_t>();
    c.type1_cycles    = j.at("type1_cycles").get<std::uint64_t>();
    c.type2_cycles    = j.at("type2_cycles").get<std::uint64_t>();
    c.transitive_reps = j.at("transitive_reps").get<std::uint64_t>();
    c.subgroup_count  = j.at("subgroup_count").get<std::uint64_t>();
    if (!j.at("conjecture_holds").is_null()) {
      c.conjecture_holds = j.at("conjecture_holds").get<bool>();
    }
    return c;
  }

  [[nodiscard]] inline std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace braidrep

#endif  // BRAIDREP_SERIALIZE_HPP_
