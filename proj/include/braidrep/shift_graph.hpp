// The representation-shift graph of Hom(K_3, S_r).
//
// A vertex is a pair (a_0, a_1) of permutations, the images of z_0 and z_1.
// Its single out-edge goes to (a_1, a_0^-1 a_1), the unique way to continue
// the relation z_m z_{m+2} = z_{m+1}. The edge map is a bijection on a
// finite set, so the graph is a disjoint union of cycles; each cycle of
// length p carries p representations of K_3.

#ifndef BRAIDREP_SHIFT_GRAPH_HPP_
#define BRAIDREP_SHIFT_GRAPH_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "perm.hpp"

namespace braidrep {

  struct Vertex {
    Perm a0;
    Perm a1;

    friend auto operator<=>(Vertex const&, Vertex const&) = default;
  };

  [[nodiscard]] inline Vertex step(Vertex const& v) {
    return {v.a1, compose(inverse(v.a0), v.a1)};
  }

  [[nodiscard]] inline Vertex step_back(Vertex const& v) {
    return {compose(v.a0, inverse(v.a1)), v.a0};
  }

  enum class CycleKind { type_i, type_ii };

  [[nodiscard]] inline char const* to_string(CycleKind k) noexcept {
    return k == CycleKind::type_i ? "I" : "II";
  }

  class ShiftCycle {
   public:
    // Builds a cycle from one period of a shift sequence, in any rotation.
    // Throws if the sequence violates the recurrence or is not least-period.
    [[nodiscard]] static ShiftCycle from_sequence(std::vector<Perm> seq) {
      if (seq.empty()) {
        throw std::invalid_argument("empty shift sequence");
      }
      std::size_t const p = seq.size();
      for (auto const& a : seq) {
        detail::require_same_degree(seq[0], a);
      }
      for (std::size_t m = 0; m < p; ++m) {
        if (seq[(m + 2) % p] != compose(inverse(seq[m]), seq[(m + 1) % p])) {
          throw std::invalid_argument("sequence violates a_{m+2} = a_m^-1 a_{m+1}");
        }
      }
      for (std::size_t q = 1; q < p; ++q) {
        if (seq[q] == seq[0] && seq[(q + 1) % p] == seq[1 % p]) {
          throw std::invalid_argument("sequence period is not least");
        }
      }
      return ShiftCycle(std::move(seq));
    }

    [[nodiscard]] Degree degree() const noexcept {
      return seq_.front().degree();
    }

    [[nodiscard]] std::size_t period() const noexcept {
      return seq_.size();
    }

    [[nodiscard]] std::vector<Perm> const& seq() const noexcept {
      return seq_;
    }

    // a_m with m taken mod p.
    [[nodiscard]] Perm const& at(std::int64_t m) const noexcept {
      auto const p = static_cast<std::int64_t>(seq_.size());
      return seq_[static_cast<std::size_t>(((m % p) + p) % p)];
    }

    [[nodiscard]] CycleKind kind() const noexcept {
      return kind_;
    }

    [[nodiscard]] bool is_trivial() const noexcept {
      return seq_.size() == 1 && seq_[0].is_identity();
    }

    [[nodiscard]] Vertex vertex(std::int64_t k = 0) const {
      return {at(k), at(k + 1)};
    }

    // (rank a_0, rank a_1) of the canonical rotation.
    [[nodiscard]] std::pair<std::uint64_t, std::uint64_t> label() const {
      return {rank_of(seq_[0]).value(), rank_of(at(1)).value()};
    }

    friend bool operator==(ShiftCycle const&, ShiftCycle const&) = default;

    // Orders by canonical vertex.
    friend bool operator<(ShiftCycle const& x, ShiftCycle const& y) {
      return x.vertex() < y.vertex();
    }

   private:
    explicit ShiftCycle(std::vector<Perm> seq) : seq_(std::move(seq)) {
      std::size_t const p    = seq_.size();
      std::size_t       best = 0;
      for (std::size_t k = 1; k < p; ++k) {
        if (Vertex{seq_[k], seq_[(k + 1) % p]}
            < Vertex{seq_[best], seq_[(best + 1) % p]}) {
          best = k;
        }
      }
      std::rotate(seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(best), seq_.end());
      kind_ = CycleKind::type_ii;
      for (std::size_t m = 0; m < p; ++m) {
        if (seq_[m] == seq_[(m + 1) % p]) {
          kind_ = CycleKind::type_i;
          break;
        }
      }
    }

    friend ShiftCycle cycle_through(Vertex const&);

    std::vector<Perm> seq_;
    CycleKind         kind_ = CycleKind::type_ii;
  };

  [[nodiscard]] inline ShiftCycle cycle_through(Vertex const& v) {
    detail::require_same_degree(v.a0, v.a1);
    std::vector<Perm> seq;
    Vertex            cur = v;
    do {
      seq.push_back(cur.a0);
      cur = step(cur);
    } while (cur != v);
    return ShiftCycle(std::move(seq));
  }

  // The k-th iterate of the representation under the shift: rotation of the
  // stored sequence by k.
  [[nodiscard]] inline std::vector<Perm> shift_rotate(ShiftCycle const& c,
                                                      std::int64_t      k) {
    std::vector<Perm> out;
    out.reserve(c.period());
    for (std::size_t m = 0; m < c.period(); ++m) {
      out.push_back(c.at(k + static_cast<std::int64_t>(m)));
    }
    return out;
  }

  class CycleSet {
   public:
    CycleSet(Degree d, std::vector<ShiftCycle> cycles)
        : degree_(d), cycles_(std::move(cycles)) {
      std::sort(cycles_.begin(), cycles_.end());
    }

    [[nodiscard]] Degree degree() const noexcept {
      return degree_;
    }

    [[nodiscard]] std::vector<ShiftCycle> const& cycles() const noexcept {
      return cycles_;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return cycles_.size();
    }

    [[nodiscard]] std::size_t count(CycleKind k) const noexcept {
      return static_cast<std::size_t>(std::count_if(
          cycles_.begin(), cycles_.end(), [k](auto const& c) { return c.kind() == k; }));
    }

    // Sum of periods: |Hom(K_3, S_r)| restricted to the given kind.
    [[nodiscard]] std::uint64_t representations(CycleKind k) const noexcept {
      std::uint64_t total = 0;
      for (auto const& c : cycles_) {
        total += c.kind() == k ? c.period() : 0;
      }
      return total;
    }

    [[nodiscard]] std::uint64_t representations() const noexcept {
      return representations(CycleKind::type_i) + representations(CycleKind::type_ii);
    }

    friend bool operator==(CycleSet const&, CycleSet const&) = default;

   private:
    Degree                  degree_;
    std::vector<ShiftCycle> cycles_;
  };

  // Every cycle of the shift graph over S_r x S_r. Workers sweep disjoint
  // blocks of the vertex space and claim vertices in a shared bitmap; a
  // cycle entered by two workers at once is reported twice and deduplicated
  // by canonical vertex.
  [[nodiscard]] inline CycleSet enumerate_cycles(Degree                    d,
                                                 EnumerationOptions const& opts = {}) {
    require_enumerable(d, opts);
    std::uint64_t const n        = factorial(d.value());
    std::uint64_t const vertices = n * n;
    std::vector<std::atomic<std::uint64_t>> visited((vertices + 63) / 64);

    auto index = [n](Vertex const& v) {
      return (rank_of(v.a0).value() - 1) * n + (rank_of(v.a1).value() - 1);
    };
    auto claim = [&visited](std::uint64_t i) {
      std::uint64_t const bit = std::uint64_t{1} << (i % 64);
      return (visited[i / 64].fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
    };

    unsigned const                       workers = resolve_workers(opts.workers);
    std::vector<std::vector<ShiftCycle>> found(workers);
    std::uint64_t const                  rows = n;
    parallel_blocks(workers, workers, [&](std::size_t wb, std::size_t we) {
      for (std::size_t w = wb; w < we; ++w) {
        std::uint64_t const chunk = (rows + workers - 1) / workers;
        std::uint64_t const first = std::min<std::uint64_t>(rows, w * chunk);
        std::uint64_t const last  = std::min<std::uint64_t>(rows, first + chunk);
        for (std::uint64_t i = first; i < last; ++i) {
          Perm const a0 = perm_of_rank(i + 1, d);
          for (std::uint64_t j = 0; j < n; ++j) {
            if (!claim(i * n + j)) {
              continue;
            }
            Vertex const      start{a0, perm_of_rank(j + 1, d)};
            std::vector<Perm> seq{start.a0};
            for (Vertex cur = step(start); cur != start; cur = step(cur)) {
              claim(index(cur));
              seq.push_back(cur.a0);
            }
            found[w].push_back(ShiftCycle::from_sequence(std::move(seq)));
          }
        }
      }
    });

    std::vector<ShiftCycle> all;
    for (auto& part : found) {
      std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return CycleSet(d, std::move(all));
  }

  // (number of type I cycles, number of representations they carry), from
  // the involution count n_r: ((1 + n_r + r!) / 2, 3 r! - 2).
  [[nodiscard]] inline std::pair<std::uint64_t, std::uint64_t>
  type1_closed_form(Degree d) noexcept {
    std::uint64_t const f = factorial(d.value());
    return {(1 + count_involutions(d) + f) / 2, 3 * f - 2};
  }

  // Graphviz export of the functional graph: one node per vertex, labelled
  // by ranks, one edge per step.
  [[nodiscard]] inline std::string to_dot(CycleSet const& cs) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto const& c : cs.cycles()) {
      for (std::size_t k = 0; k < c.period(); ++k) {
        auto const v = c.vertex(static_cast<std::int64_t>(k));
        edges.emplace_back(v, c.vertex(static_cast<std::int64_t>(k) + 1));
      }
    }
    std::sort(edges.begin(), edges.end());
    auto name = [](Vertex const& v) {
      return "\"(" + std::to_string(rank_of(v.a0).value()) + ", "
             + std::to_string(rank_of(v.a1).value()) + ")\"";
    };
    std::ostringstream out;
    out << "digraph shift_graph_S" << cs.degree().value() << " {\n";
    for (auto const& [from, to] : edges) {
      out << "  " << name(from) << ";\n";
    }
    for (auto const& [from, to] : edges) {
      out << "  " << name(from) << " -> " << name(to) << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace braidrep

#endif  // BRAIDREP_SHIFT_GRAPH_HPP_
