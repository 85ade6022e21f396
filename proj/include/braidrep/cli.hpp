// Command execution for the braidrep tool. Argument parsing lives in
// tools/braidrep.cpp; everything here is callable in-process.

#ifndef BRAIDREP_CLI_HPP_
#define BRAIDREP_CLI_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cache.hpp"
#include "census.hpp"
#include "paper_table.hpp"
#include "serialize.hpp"
#include "shift_graph.hpp"
#include "tower.hpp"

namespace braidrep::cli {

  enum class Command { cycles, extend, braid, census, conjecture, verify_paper, graph };
  enum class Format { paper, json, dot };
  enum class KindFilter { all, type_i, type_ii };

  struct RunConfig {
    Command               command = Command::cycles;
    std::optional<int>    n;
    std::optional<int>    r;
    std::optional<int>    n_max;
    Format                format  = Format::paper;
    KindFilter            kind    = KindFilter::all;
    std::filesystem::path cache_dir;
    bool                  no_cache = false;
    unsigned              workers  = 0;
    int                   max_degree = kDefaultMaxDegree;
  };

  struct RunResult {
    int         status = 0;
    std::string out;
    std::string err;
  };

  inline constexpr int kStatusOk         = 0;
  inline constexpr int kStatusMismatch   = 1;
  inline constexpr int kStatusUsage      = 2;
  inline constexpr int kStatusInternal   = 3;

  [[nodiscard]] inline char const* name(Command c) noexcept {
    switch (c) {
      case Command::cycles: return "cycles";
      case Command::extend: return "extend";
      case Command::braid: return "braid";
      case Command::census: return "census";
      case Command::conjecture: return "conjecture";
      case Command::verify_paper: return "verify-paper";
      case Command::graph: return "graph";
    }
    return "?";
  }

  [[nodiscard]] inline char const* name(Format f) noexcept {
    switch (f) {
      case Format::paper: return "paper";
      case Format::json: return "json";
      case Format::dot: return "dot";
    }
    return "?";
  }

  [[nodiscard]] inline char const* name(KindFilter k) noexcept {
    switch (k) {
      case KindFilter::all: return "all";
      case KindFilter::type_i: return "I";
      case KindFilter::type_ii: return "II";
    }
    return "?";
  }

  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  namespace detail {
    using braidrep::detail::ranks_json;

    [[nodiscard]] inline int require(std::optional<int> const& v, char const* flag) {
      if (!v) {
        throw UsageError(std::string("missing required option --") + flag);
      }
      return *v;
    }

    [[nodiscard]] inline Degree degree_of(RunConfig const& cfg) {
      int const r = require(cfg.r, "r");
      if (r < 1 || r > cfg.max_degree) {
        throw UsageError("--r must lie in [1, " + std::to_string(cfg.max_degree) + "]");
      }
      return Degree(r);
    }

    [[nodiscard]] inline int level_of(RunConfig const& cfg, std::optional<int> fallback = {}) {
      int const n = cfg.n ? *cfg.n : require(fallback, "n");
      if (n < 3) {
        throw UsageError("--n must be at least 3");
      }
      return n;
    }

    inline void require_format(RunConfig const& cfg, std::initializer_list<Format> allowed) {
      for (auto f : allowed) {
        if (cfg.format == f) {
          return;
        }
      }
      throw UsageError(std::string("format '") + name(cfg.format) + "' is not available for "
                       + name(cfg.command));
    }

    [[nodiscard]] inline bool keep(KindFilter k, ShiftCycle const& c) noexcept {
      return k == KindFilter::all
             || (k == KindFilter::type_i) == (c.kind() == CycleKind::type_i);
    }

    [[nodiscard]] inline std::string cycles_json(Degree d, std::vector<ShiftCycle> cycles) {
      return dump(to_json(CycleSet(d, std::move(cycles))));
    }

    [[nodiscard]] inline std::string dot_of(Degree d, std::vector<ShiftCycle> cycles) {
      return to_dot(CycleSet(d, std::move(cycles)));
    }

    [[nodiscard]] inline std::string run_cycles(RunConfig const& cfg, EnumerationOptions const& opts) {
      Degree const d = degree_of(cfg);
      int const    n = level_of(cfg, 3);
      auto const   cs = enumerate_cycles(d, opts);
      std::vector<ShiftCycle> chosen;
      if (n == 3) {
        for (auto const& c : cs.cycles()) {
          if (keep(cfg.kind, c)) {
            chosen.push_back(c);
          }
        }
      } else {
        auto const hom = enumerate_hom_kn(n, cs, opts);
        for (auto const& o : hom.orbits()) {
          if (keep(cfg.kind, o.cycle()) && (chosen.empty() || chosen.back() != o.cycle())) {
            chosen.push_back(o.cycle());
          }
        }
      }
      switch (cfg.format) {
        case Format::paper: return format_paper_table(chosen);
        case Format::json: return cycles_json(d, std::move(chosen));
        case Format::dot: return dot_of(d, std::move(chosen));
      }
      return {};
    }

    [[nodiscard]] inline std::string join_ranks(std::vector<Perm> const& perms) {
      std::string out;
      for (std::size_t i = 0; i < perms.size(); ++i) {
        out += (i == 0 ? "" : ", ") + std::to_string(rank_of(perms[i]).value());
      }
      return out;
    }

    // Grouped by b-sequence, as "[b_3, ..., b_{n-1}, [i0, i1], ...]"; only
    // representations with some nontrivial b_i are listed.
    [[nodiscard]] inline std::string extension_listing(HomKn const& hom) {
      std::map<std::vector<std::uint64_t>, std::vector<std::pair<std::uint64_t, std::uint64_t>>>
          groups;
      for (auto const& o : hom.orbits()) {
        bool nontrivial = false;
        std::vector<std::uint64_t> key;
        for (auto const& b : o.bseq()) {
          nontrivial = nontrivial || !b.is_identity();
          key.push_back(rank_of(b).value());
        }
        if (nontrivial) {
          groups[key].push_back(o.cycle().label());
        }
      }
      std::ostringstream out;
      for (auto& [key, vertices] : groups) {
        std::sort(vertices.begin(), vertices.end());
        out << "[";
        for (std::size_t i = 0; i < key.size(); ++i) {
          out << (i == 0 ? "" : ", ") << key[i];
        }
        for (auto const& [i0, i1] : vertices) {
          out << ", [" << i0 << ", " << i1 << "]";
        }
        out << "]\n";
      }
      return out.str();
    }

    [[nodiscard]] inline std::string run_extend(RunConfig const& cfg, EnumerationOptions const& opts) {
      require_format(cfg, {Format::paper, Format::json});
      Degree const d   = degree_of(cfg);
      auto const   hom = enumerate_hom_kn(level_of(cfg), d, opts);
      if (cfg.format == Format::json) {
        return dump(to_json(hom));
      }
      if (hom.level() == 3) {
        std::vector<ShiftCycle> all;
        for (auto const& o : hom.orbits()) {
          all.push_back(o.cycle());
        }
        return format_paper_table(all);
      }
      return extension_listing(hom);
    }

    [[nodiscard]] inline std::string run_braid(RunConfig const& cfg, EnumerationOptions const& opts) {
      require_format(cfg, {Format::paper, Format::json});
      Degree const d   = degree_of(cfg);
      auto const   hom = enumerate_hom_bn(level_of(cfg), d, opts);
      if (cfg.format == Format::json) {
        return dump(to_json(hom));
      }
      std::ostringstream out;
      for (auto const& o : hom.orbits()) {
        auto const [i0, i1] = o.rep.cycle().label();
        out << "B[" << i0 << ", " << i1 << "] p=" << o.rep.period() << " b=["
            << join_ranks(o.rep.bseq()) << "] c=" << rank_of(o.c).value() << "\n";
      }
      out << "representations = " << hom.representation_count() << "\n";
      return out.str();
    }

    [[nodiscard]] inline std::string run_census(RunConfig const& cfg, EnumerationOptions const& opts) {
      require_format(cfg, {Format::paper, Format::json});
      Degree const d = degree_of(cfg);
      auto const   c = census(level_of(cfg), d, opts);
      if (cfg.format == Format::json) {
        return dump(to_json(c));
      }
      std::ostringstream out;
      out << "n = " << c.n << "\n"
          << "r = " << c.degree << "\n"
          << "total representations = " << c.total_reps << "\n"
          << "type I cycles = " << c.type1_cycles << "\n"
          << "type II cycles = " << c.type2_cycles << "\n"
          << "transitive representations = " << c.transitive_reps << "\n"
          << "subgroups of index r = " << c.subgroup_count << "\n"
          << "conjecture holds = "
          << (c.conjecture_holds ? (*c.conjecture_holds ? "yes" : "NO") : "n/a") << "\n";
      return out.str();
    }

    struct Matrix {
      std::string text;
      bool        counterexample = false;
    };

    [[nodiscard]] inline Matrix run_conjecture(RunConfig const& cfg, EnumerationOptions const& opts) {
      require_format(cfg, {Format::paper, Format::json});
      int const r_max = degree_of(cfg).value();
      int const n_max = require(cfg.n_max, "n-max");
      if (n_max < 5) {
        throw UsageError("--n-max must be at least 5");
      }
      if (r_max < 2) {
        throw UsageError("--r must be at least 2");
      }
      Json               cells = Json::array();
      std::ostringstream out;
      out << "n\\r";
      for (int r = 2; r <= r_max; ++r) {
        out << "  " << r;
      }
      out << "\n";
      bool                    counterexample = false;
      std::map<int, CycleSet> cycle_sets;
      for (int n = 5; n <= n_max; ++n) {
        out << (n < 10 ? "  " : " ") << n;
        for (int r = 2; r <= r_max; ++r) {
          Degree const d(r);
          if (!in_conjecture_domain(n, d)) {
            out << "  -";
            continue;
          }
          auto it = cycle_sets.find(r);
          if (it == cycle_sets.end()) {
            it = cycle_sets.emplace(r, enumerate_cycles(d, opts)).first;
          }
          bool const holds = conjecture_probe(enumerate_hom_kn(n, it->second, opts));
          counterexample   = counterexample || !holds;
          out << "  " << (holds ? "T" : "F");
          cells.push_back(Json{{"n", n}, {"r", r}, {"holds", holds}});
        }
        out << "\n";
      }
      if (cfg.format == Format::json) {
        return {dump(Json{{"r_max", r_max}, {"n_max", n_max}, {"cells", std::move(cells)}}),
                counterexample};
      }
      out << (counterexample ? "COUNTEREXAMPLE FOUND\n" : "all probes hold\n");
      return {out.str(), counterexample};
    }

    [[nodiscard]] inline CacheKey cache_key(RunConfig const& cfg) {
      CacheKey key;
      key.command = name(cfg.command);
      key.n       = cfg.n.value_or(0);
      key.r       = cfg.r.value_or(0);
      key.variant = std::string(name(cfg.format)) + "|type=" + name(cfg.kind)
                    + "|nmax=" + std::to_string(cfg.n_max.value_or(0));
      return key;
    }
  }  // namespace detail

  // Executes one command. Output is a function of (command, n, r, format,
  // filters) only; worker count and cache state never change it.
  [[nodiscard]] inline RunResult run(RunConfig const& cfg) {
    RunResult          res;
    EnumerationOptions opts;
    opts.workers    = cfg.workers;
    opts.max_degree = cfg.max_degree;
    try {
      if (cfg.command == Command::verify_paper) {
        auto const report = verify_golden(opts);
        res.out           = report.text();
        res.status        = report.all_passed() ? kStatusOk : kStatusMismatch;
        return res;
      }
      if (cfg.command == Command::graph) {
        detail::require_format(cfg, {Format::dot, Format::paper});
      } else if (cfg.command != Command::cycles) {
        detail::require_format(cfg, {Format::paper, Format::json});
      }

      std::optional<ResultCache> cache;
      if (!cfg.no_cache) {
        cache.emplace(cfg.cache_dir.empty() ? default_cache_dir() : cfg.cache_dir,
                      [&res](std::string const& msg) { res.err += "warning: " + msg + "\n"; });
      }
      auto const key = detail::cache_key(cfg);
      if (cache) {
        if (auto hit = cache->lookup(key)) {
          res.out = std::move(*hit);
          if (cfg.command == Command::conjecture) {
            res.status = res.out.find("COUNTEREXAMPLE") != std::string::npos
                                 || res.out.find("\"holds\": false") != std::string::npos
                             ? kStatusMismatch
                             : kStatusOk;
          }
          return res;
        }
      }

      switch (cfg.command) {
        case Command::cycles: res.out = detail::run_cycles(cfg, opts); break;
        case Command::graph: {
          RunConfig dot = cfg;
          dot.format    = Format::dot;
          res.out       = detail::run_cycles(dot, opts);
          break;
        }
        case Command::extend: res.out = detail::run_extend(cfg, opts); break;
        case Command::braid: res.out = detail::run_braid(cfg, opts); break;
        case Command::census: res.out = detail::run_census(cfg, opts); break;
        case Command::conjecture: {
          auto m     = detail::run_conjecture(cfg, opts);
          res.out    = std::move(m.text);
          res.status = m.counterexample ? kStatusMismatch : kStatusOk;
          break;
        }
        case Command::verify_paper: break;
      }
      if (cache) {
        try {
          cache->store(key, res.out);
        } catch (std::exception const& ex) {
          res.err += std::string("warning: cache not written: ") + ex.what() + "\n";
        }
      }
    } catch (std::invalid_argument const& ex) {
      res.status = kStatusUsage;
      res.err += std::string("error: ") + ex.what() + "\n";
      res.out.clear();
    } catch (std::out_of_range const& ex) {
      res.status = kStatusUsage;
      res.err += std::string("error: ") + ex.what() + "\n";
      res.out.clear();
    } catch (std::exception const& ex) {
      res.status = kStatusInternal;
      res.err += std::string("internal error: ") + ex.what() + "\n";
      res.out.clear();
    }
    return res;
  }

}  // namespace braidrep::cli

#endif  // BRAIDREP_CLI_HPP_
