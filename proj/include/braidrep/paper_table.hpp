// The reference cycle-table notation and golden-fixture verification.
//
// Table grammar, one entry per cycle, entries sorted by vertex:
//
//   B[i0, i1] = [j2, j3, ..., j_{p+1}]
//   p
//
// where (i0, i1) are the ranks of the canonical vertex (a_0, a_1) and the
// body lists the ranks of a_2, ..., a_{p+1} with indices taken mod p, so the
// last two body entries repeat the vertex.

#ifndef BRAIDREP_PAPER_TABLE_HPP_
#define BRAIDREP_PAPER_TABLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "census.hpp"
#include "paper_data.hpp"
#include "perm.hpp"
#include "shift_graph.hpp"
#include "tower.hpp"

namespace braidrep {

  struct GoldenEntry {
    std::uint64_t              v0 = 0;
    std::uint64_t              v1 = 0;
    std::vector<std::uint64_t> body;
    std::size_t                period = 0;

    friend bool operator==(GoldenEntry const&, GoldenEntry const&) = default;
  };

  struct GoldenTable {
    std::string              label;
    std::vector<GoldenEntry> entries;

    friend bool operator==(GoldenTable const&, GoldenTable const&) = default;
  };

  class TableParseError : public std::runtime_error {
   public:
    TableParseError(std::size_t line, std::string const& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  [[nodiscard]] inline GoldenEntry golden_entry(ShiftCycle const& c) {
    GoldenEntry e;
    std::tie(e.v0, e.v1) = c.label();
    e.period             = c.period();
    for (std::size_t k = 0; k < c.period(); ++k) {
      e.body.push_back(rank_of(c.at(static_cast<std::int64_t>(k) + 2)).value());
    }
    return e;
  }

  [[nodiscard]] inline GoldenTable golden_table(std::vector<ShiftCycle> const& cycles,
                                                std::string                    label = {}) {
    GoldenTable t{std::move(label), {}};
    for (auto const& c : cycles) {
      t.entries.push_back(golden_entry(c));
    }
    return t;
  }

  [[nodiscard]] inline std::string format_golden(GoldenTable const& t) {
    std::ostringstream out;
    for (auto const& e : t.entries) {
      out << "B[" << e.v0 << ", " << e.v1 << "] = [";
      for (std::size_t i = 0; i < e.body.size(); ++i) {
        out << (i == 0 ? "" : ", ") << e.body[i];
      }
      out << "]\n" << e.period << "\n";
    }
    return out.str();
  }

  [[nodiscard]] inline std::string format_paper_table(std::vector<ShiftCycle> const& cycles) {
    return format_golden(golden_table(cycles));
  }

  [[nodiscard]] inline std::string format_paper_table(CycleSet const& cs, bool type2_only) {
    std::vector<ShiftCycle> chosen;
    for (auto const& c : cs.cycles()) {
      if (!type2_only || c.kind() == CycleKind::type_ii) {
        chosen.push_back(c);
      }
    }
    return format_paper_table(chosen);
  }

  [[nodiscard]] inline GoldenTable parse_paper_table(std::string_view text,
                                                     Degree           d,
                                                     std::string      label = {}) {
    static std::regex const head(R"(^B\[(\d+), (\d+)\] = \[(\d+(?:, \d+)*)\]$)");
    static std::regex const count(R"(^(\d+)$)");
    std::uint64_t const     order = factorial(d.value());

    std::vector<std::string> lines;
    std::istringstream       in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
      lines.push_back(line);
    }
    if (lines.size() % 2 != 0) {
      throw TableParseError(lines.size(), "entry without a period line");
    }

    auto parse_rank = [order](std::string const& s, std::size_t line) {
      std::uint64_t const v = std::stoull(s);
      if (v < 1 || v > order) {
        throw TableParseError(line, "rank " + s + " outside [1, " + std::to_string(order) + "]");
      }
      return v;
    };

    GoldenTable t{std::move(label), {}};
    for (std::size_t i = 0; i < lines.size(); i += 2) {
      std::smatch m;
      if (!std::regex_match(lines[i], m, head)) {
        throw TableParseError(i + 1, "malformed entry '" + lines[i] + "'");
      }
      GoldenEntry e;
      e.v0 = parse_rank(m[1], i + 1);
      e.v1 = parse_rank(m[2], i + 1);
      std::string const body = m[3];
      std::regex const  num(R"(\d+)");
      for (auto it = std::sregex_iterator(body.begin(), body.end(), num);
           it != std::sregex_iterator(); ++it) {
        e.body.push_back(parse_rank(it->str(), i + 1));
      }
      std::smatch pm;
      if (!std::regex_match(lines[i + 1], pm, count)) {
        throw TableParseError(i + 2, "malformed period '" + lines[i + 1] + "'");
      }
      e.period = std::stoull(pm[1]);
      if (e.body.size() != e.period) {
        throw TableParseError(i + 1, "body has " + std::to_string(e.body.size())
                                         + " entries, period is "
                                         + std::to_string(e.period));
      }
      bool const wraps = e.period == 1
                             ? e.body[0] == e.v0 && e.v0 == e.v1
                             : e.body[e.period - 2] == e.v0 && e.body[e.period - 1] == e.v1;
      if (!wraps) {
        throw TableParseError(i + 1, "body does not end with the vertex");
      }
      if (!t.entries.empty()
          && std::pair(t.entries.back().v0, t.entries.back().v1) >= std::pair(e.v0, e.v1)) {
        throw TableParseError(i + 1, "entries not sorted by vertex");
      }
      t.entries.push_back(std::move(e));
    }
    return t;
  }

  // Checks an entry against the shift recurrence, least period and
  // canonical labelling. Returns a description of the first problem.
  [[nodiscard]] inline std::optional<std::string> validate_entry(GoldenEntry const& e,
                                                                 Degree             d) {
    std::vector<Perm> seq{perm_of_rank(e.v0, d), perm_of_rank(e.v1, d)};
    for (auto k : e.body) {
      seq.push_back(perm_of_rank(k, d));
    }
    for (std::size_t m = 0; m + 2 < seq.size(); ++m) {
      if (seq[m + 2] != compose(inverse(seq[m]), seq[m + 1])) {
        return "recurrence fails at a_" + std::to_string(m + 2);
      }
    }
    if (e.period == 0 || e.period > seq.size()) {
      return std::string("period does not fit the sequence");
    }
    seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(e.period), seq.end());
    try {
      auto const c = ShiftCycle::from_sequence(seq);
      if (c.label() != std::pair(e.v0, e.v1)) {
        return "label is not the canonical vertex (expected B["
               + std::to_string(c.label().first) + ", "
               + std::to_string(c.label().second) + "])";
      }
    } catch (std::invalid_argument const& ex) {
      return std::string(ex.what());
    }
    return std::nullopt;
  }

  // b_3 rank -> extendable cycle vertices, from the bracketed K_4 layout
  // "[b3, [i0, i1], [i0, i1], ...]".
  [[nodiscard]] inline std::map<std::uint64_t, std::set<std::pair<std::uint64_t, std::uint64_t>>>
  parse_extension_fixture(std::string_view text) {
    static std::regex const line_re(R"(^\[(\d+)((?:, \[\d+, \d+\])*)\]$)");
    static std::regex const pair_re(R"(\[(\d+), (\d+)\])");
    std::map<std::uint64_t, std::set<std::pair<std::uint64_t, std::uint64_t>>> out;
    std::istringstream in{std::string(text)};
    std::size_t        n = 0;
    for (std::string line; std::getline(in, line);) {
      ++n;
      std::smatch m;
      if (!std::regex_match(line, m, line_re)) {
        throw TableParseError(n, "malformed extension line '" + line + "'");
      }
      auto&             slot  = out[std::stoull(m[1])];
      std::string const pairs = m[2];
      for (auto it = std::sregex_iterator(pairs.begin(), pairs.end(), pair_re);
           it != std::sregex_iterator(); ++it) {
        slot.emplace(std::stoull((*it)[1]), std::stoull((*it)[2]));
      }
    }
    return out;
  }

  // Same shape as parse_extension_fixture, computed: for each nontrivial b_3
  // the labels of cycles admitting it.
  [[nodiscard]] inline std::map<std::uint64_t, std::set<std::pair<std::uint64_t, std::uint64_t>>>
  extension_data(HomKn const& k4) {
    std::map<std::uint64_t, std::set<std::pair<std::uint64_t, std::uint64_t>>> out;
    for (auto const& o : k4.orbits()) {
      if (!o.b(3).is_identity()) {
        out[rank_of(o.b(3)).value()].insert(o.cycle().label());
      }
    }
    return out;
  }

  struct GoldenCheck {
    std::string name;
    bool        passed = false;
    std::string detail;
  };

  struct GoldenReport {
    std::vector<GoldenCheck> checks;

    [[nodiscard]] bool all_passed() const noexcept {
      return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
    }

    [[nodiscard]] std::string text() const {
      std::ostringstream out;
      for (auto const& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) {
          out << ": " << c.detail;
        }
        out << "\n";
      }
      out << (all_passed() ? "all fixtures pass" : "verification FAILED") << "\n";
      return out.str();
    }
  };

  namespace detail {
    template <typename T>
    [[nodiscard]] GoldenCheck expect_equal(std::string name, T const& got, T const& want) {
      std::ostringstream out;
      out << "got " << got << ", expected " << want;
      return {std::move(name), got == want, out.str()};
    }

    [[nodiscard]] inline GoldenCheck check_fixture_entries(std::string      name,
                                                           std::string_view text,
                                                           Degree           d) {
      auto const  table = parse_paper_table(text, d);
      std::string problems;
      for (auto const& e : table.entries) {
        if (auto why = validate_entry(e, d)) {
          problems += "B[" + std::to_string(e.v0) + ", " + std::to_string(e.v1)
                      + "] quarantined (" + *why + "); ";
        }
      }
      return {std::move(name), problems.empty(),
              problems.empty() ? std::to_string(table.entries.size()) + " entries consistent"
                               : problems};
    }

    [[nodiscard]] inline GoldenCheck check_table_bytes(std::string      name,
                                                       CycleSet const&  cs,
                                                       std::string_view want) {
      std::string const got   = format_paper_table(cs, true);
      std::size_t const lines = static_cast<std::size_t>(std::count(got.begin(), got.end(), '\n'));
      if (got == want) {
        return {std::move(name), true, std::to_string(lines / 2) + " entries byte-identical"};
      }
      std::size_t i = 0;
      while (i < got.size() && i < want.size() && got[i] == want[i]) {
        ++i;
      }
      return {std::move(name), false,
              "first difference at byte " + std::to_string(i) + "; computed "
                  + std::to_string(lines / 2) + " entries"};
    }
  }  // namespace detail

  // Recomputes every reference table and count and diffs against the
  // fixtures. Failures are report entries, never exceptions.
  [[nodiscard]] inline GoldenReport verify_golden(EnumerationOptions const& opts = {}) {
    GoldenReport rep;
    auto add = [&rep](auto&& make) {
      try {
        rep.checks.push_back(make());
      } catch (std::exception const& ex) {
        rep.checks.push_back({"(exception)", false, ex.what()});
      }
    };

    std::map<int, CycleSet> cycles;
    for (int r = 2; r <= 5; ++r) {
      cycles.emplace(r, enumerate_cycles(Degree(r), opts));
    }

    add([&] {
      return detail::check_fixture_entries("fixture n=3 r=3 entries satisfy recurrence",
                                           fixtures::kHomK3S3TypeII, Degree(3));
    });
    add([&] {
      return detail::check_fixture_entries("fixture n=3 r=4 entries satisfy recurrence",
                                           fixtures::kHomK3S4TypeII, Degree(4));
    });
    add([&] {
      return detail::expect_equal<std::uint64_t>("|Hom(K_3, S_2)|",
                                                 cycles.at(2).representations(), 4);
    });
    add([&] {
      return detail::expect_equal<std::uint64_t>("|Hom(K_3, S_3)|",
                                                 cycles.at(3).representations(), 36);
    });
    add([&] {
      return detail::check_table_bytes("type II table n=3 r=3", cycles.at(3),
                                       fixtures::kHomK3S3TypeII);
    });
    add([&] {
      return detail::expect_equal<std::size_t>("type II cycles at r=4",
                                               cycles.at(4).count(CycleKind::type_ii), 71);
    });
    add([&] {
      return detail::check_table_bytes("type II table n=3 r=4", cycles.at(4),
                                       fixtures::kHomK3S4TypeII);
    });
    for (int r = 2; r <= 5; ++r) {
      add([&] {
        auto const& cs      = cycles.at(r);
        auto const  closed  = type1_closed_form(Degree(r));
        bool const  ok      = closed.first == cs.count(CycleKind::type_i)
                        && closed.second == cs.representations(CycleKind::type_i);
        return GoldenCheck{"type I closed form r=" + std::to_string(r), ok,
                           std::to_string(cs.count(CycleKind::type_i)) + " cycles, "
                               + std::to_string(cs.representations(CycleKind::type_i))
                               + " representations"};
      });
      add([&] {
        std::uint64_t const f = factorial(r);
        return detail::expect_equal("mass conservation r=" + std::to_string(r),
                                    cycles.at(r).representations(), f * f);
      });
      add([&] {
        return detail::expect_equal("transitive type I r=" + std::to_string(r),
                                    transitive_type1_count(cycles.at(r)),
                                    transitive_type1_closed_form(Degree(r)));
      });
    }
    add([&] {
      auto const k4   = enumerate_hom_kn(4, cycles.at(4), opts);
      bool const same = extension_data(k4) == parse_extension_fixture(fixtures::kHomK4S4Extension);
      return GoldenCheck{"K_4 extension data r=4", same,
                         same ? "ten vertices x b_3 in {8, 17, 24}" : "extension sets differ"};
    });
    add([&] {
      auto const k4 = enumerate_hom_kn(4, cycles.at(3), opts);
      return detail::expect_equal<std::size_t>("nontrivial b_3 at r=3",
                                               extension_data(k4).size(), 0);
    });
    for (auto [n, r] : {std::pair{5, 3}, std::pair{5, 4}, std::pair{6, 5}}) {
      add([&, n = n, r = r] {
        auto const hom = enumerate_hom_kn(n, cycles.at(r), opts);
        return GoldenCheck{"Hom(K_" + std::to_string(n) + ", S_" + std::to_string(r)
                               + ") trivial",
                           hom.only_trivial() && hom.representation_count() == 1,
                           std::to_string(hom.representation_count()) + " representation(s)"};
      });
    }
    struct Expected {
      int           n, r;
      std::uint64_t transitive, subgroups;
    };
    for (auto want : {Expected{3, 2, 3, 3}, Expected{3, 3, 26, 13}, Expected{4, 2, 3, 3},
                       Expected{4, 3, 26, 13}}) {
      add([&] {
        auto const c  = census(enumerate_hom_kn(want.n, cycles.at(want.r), opts));
        bool const ok = c.transitive_reps == want.transitive && c.subgroup_count == want.subgroups;
        return GoldenCheck{"census K_" + std::to_string(want.n) + " index "
                               + std::to_string(want.r),
                           ok,
                           std::to_string(c.transitive_reps) + " transitive, "
                               + std::to_string(c.subgroup_count) + " subgroups"};
      });
    }
    for (auto [r, want] : {std::pair{4, std::uint64_t{24}}, std::pair{3, std::uint64_t{6}}}) {
      add([&, r = r, want = want] {
        auto const bn = enumerate_hom_bn(enumerate_hom_kn(5, cycles.at(r), opts), opts);
        return detail::expect_equal("|Hom(B_5, S_" + std::to_string(r) + ")|",
                                    bn.representation_count(), want);
      });
    }
    add([&] {
      Degree const d(3);
      auto const   c = cycle_through({perm_of_rank(5, d), perm_of_rank(4, d)});
      bool const   ok = c.label() == std::pair<std::uint64_t, std::uint64_t>{4, 5}
                      && c.period() == 2 && shift_rotate(c, 1)[0] == Perm::from_images({3, 1, 2})
                      && shift_rotate(c, 1)[1] == Perm::from_images({2, 3, 1});
      return GoldenCheck{"orbit of pi|K_3 is B[4, 5]", ok, ""};
    });
    return rep;
  }

}  // namespace braidrep

#endif  // BRAIDREP_PAPER_TABLE_HPP_
