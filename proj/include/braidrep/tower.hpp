// Extending shift cycles up the tower K_3 < K_4 < ... < K_n and lifting
// representations of K_n to the braid group B_n.
//
// A representation of K_n into S_r is a shift sequence (a_m), the images of
// z_m, together with b_3, ..., b_{n-1}, the images of x_3, ..., x_{n-1}. The
// images satisfy
//
//   a_m b_3 a_{m+2} = b_3 a_{m+1} b_3        for all m,
//   a_m b_i = b_i a_{m+1}                     for i >= 4 and all m,
//   b_i b_j = b_j b_i                         for |i - j| >= 2,
//   b_i b_j b_i = b_j b_i b_j                 for |i - j| = 1.
//
// A lift to B_n adds c with a_m c = c a_{m+1} for all m and c b_i = b_i c
// for every i. Evaluating a homomorphism on sigma_1 z_m sigma_1^-1 = z_{m+1}
// gives the conjugate orientation, c a_m = a_{m+1} c; the two families are
// exchanged by c -> c^-1, so c here is the image of sigma_1^-1.
//
// Every relation is quantified over all m, so the admissible b_i and c do not
// depend on which rotation of the cycle is used. Results are therefore stored
// once per (cycle, bseq[, c]) with rotation 0 and expanded on demand.

#ifndef BRAIDREP_TOWER_HPP_
#define BRAIDREP_TOWER_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "perm.hpp"
#include "shift_graph.hpp"

namespace braidrep {

  class TowerRep {
   public:
    TowerRep(std::shared_ptr<ShiftCycle const> cycle,
             std::size_t                       rotation = 0,
             std::vector<Perm>                 bseq     = {})
        : cycle_(std::move(cycle)), rotation_(rotation), bseq_(std::move(bseq)) {
      if (!cycle_) {
        throw std::invalid_argument("TowerRep without a cycle");
      }
      if (rotation_ >= cycle_->period()) {
        throw std::out_of_range("rotation outside [0, period)");
      }
      for (auto const& b : bseq_) {
        detail::require_same_degree(cycle_->at(0), b);
      }
    }

    // n: this represents an element of Hom(K_n, S_r).
    [[nodiscard]] int level() const noexcept {
      return 3 + static_cast<int>(bseq_.size());
    }

    [[nodiscard]] Degree degree() const noexcept {
      return cycle_->degree();
    }

    [[nodiscard]] ShiftCycle const& cycle() const noexcept {
      return *cycle_;
    }

    [[nodiscard]] std::shared_ptr<ShiftCycle const> const& cycle_ptr() const noexcept {
      return cycle_;
    }

    [[nodiscard]] std::size_t rotation() const noexcept {
      return rotation_;
    }

    // (b_3, ..., b_{n-1})
    [[nodiscard]] std::vector<Perm> const& bseq() const noexcept {
      return bseq_;
    }

    // b_i for 3 <= i < level().
    [[nodiscard]] Perm const& b(int i) const {
      return bseq_.at(static_cast<std::size_t>(i - 3));
    }

    // a_m of the rotated sequence.
    [[nodiscard]] Perm const& a(std::int64_t m) const noexcept {
      return cycle_->at(m + static_cast<std::int64_t>(rotation_));
    }

    [[nodiscard]] std::vector<Perm> sequence() const {
      return shift_rotate(*cycle_, static_cast<std::int64_t>(rotation_));
    }

    [[nodiscard]] std::size_t period() const noexcept {
      return cycle_->period();
    }

    [[nodiscard]] bool is_trivial() const noexcept {
      return cycle_->is_trivial()
             && std::all_of(bseq_.begin(), bseq_.end(), [](auto const& b) {
                  return b.is_identity();
                });
    }

    // Images of all generators: a_0, ..., a_{p-1}, b_3, ..., b_{n-1}.
    [[nodiscard]] std::vector<Perm> generators() const {
      std::vector<Perm> out = cycle_->seq();
      out.insert(out.end(), bseq_.begin(), bseq_.end());
      return out;
    }

    [[nodiscard]] TowerRep extended(Perm const& next) const {
      std::vector<Perm> bs = bseq_;
      bs.push_back(next);
      return TowerRep(cycle_, rotation_, std::move(bs));
    }

    [[nodiscard]] TowerRep rotated(std::size_t k) const {
      return TowerRep(cycle_, k, bseq_);
    }

    friend bool operator==(TowerRep const& x, TowerRep const& y) {
      return x.cycle() == y.cycle() && x.rotation_ == y.rotation_ && x.bseq_ == y.bseq_;
    }

    friend bool operator<(TowerRep const& x, TowerRep const& y) {
      if (x.cycle() != y.cycle()) {
        return x.cycle() < y.cycle();
      }
      if (x.rotation_ != y.rotation_) {
        return x.rotation_ < y.rotation_;
      }
      return x.bseq_ < y.bseq_;
    }

   private:
    std::shared_ptr<ShiftCycle const> cycle_;
    std::size_t                       rotation_;
    std::vector<Perm>                 bseq_;
  };

  struct BraidRep {
    TowerRep rep;
    Perm     c;

    friend bool operator==(BraidRep const&, BraidRep const&) = default;

    friend bool operator<(BraidRep const& x, BraidRep const& y) {
      if (!(x.rep == y.rep)) {
        return x.rep < y.rep;
      }
      return x.c < y.c;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Relation predicates
  ////////////////////////////////////////////////////////////////////////

  // a_m b_3 a_{m+2} == b_3 a_{m+1} b_3 for all m mod p.
  [[nodiscard]] inline bool check_k4(ShiftCycle const& cycle, Perm const& b3) {
    detail::require_same_degree(cycle.at(0), b3);
    auto const p = static_cast<std::int64_t>(cycle.period());
    for (std::int64_t m = 0; m < p; ++m) {
      if (compose(cycle.at(m), b3, cycle.at(m + 2))
          != compose(b3, cycle.at(m + 1), b3)) {
        return false;
      }
    }
    return true;
  }

  // a_m x == x a_{m+1} for all m mod p.
  [[nodiscard]] inline bool intertwines(ShiftCycle const& cycle, Perm const& x) {
    auto const p = static_cast<std::int64_t>(cycle.period());
    for (std::int64_t m = 0; m < p; ++m) {
      if (compose(cycle.at(m), x) != compose(x, cycle.at(m + 1))) {
        return false;
      }
    }
    return true;
  }

  // All defining relations of K_n at n = rep.level(), evaluated on the
  // rotated sequence.
  [[nodiscard]] inline bool check_level(TowerRep const& rep) {
    auto const p = static_cast<std::int64_t>(rep.period());
    for (std::int64_t m = 0; m < p; ++m) {
      if (rep.a(m + 2) != compose(inverse(rep.a(m)), rep.a(m + 1))) {
        return false;
      }
    }
    int const n = rep.level();
    for (int i = 3; i < n; ++i) {
      Perm const& bi = rep.b(i);
      for (std::int64_t m = 0; m < p; ++m) {
        bool const ok = i == 3
                            ? compose(rep.a(m), bi, rep.a(m + 2)) == compose(bi, rep.a(m + 1), bi)
                            : compose(rep.a(m), bi) == compose(bi, rep.a(m + 1));
        if (!ok) {
          return false;
        }
      }
      for (int j = 3; j < i; ++j) {
        bool const ok = i - j >= 2 ? commute(bi, rep.b(j)) : braid(bi, rep.b(j));
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  // Whether x is an admissible image for the next generator x_n of K_{n+1},
  // n = rep.level().
  [[nodiscard]] inline bool admits_next(TowerRep const& rep, Perm const& x) {
    int const n = rep.level();
    if (n == 3) {
      return check_k4(rep.cycle(), x);
    }
    if (!intertwines(rep.cycle(), x)) {
      return false;
    }
    for (int i = 3; i <= n - 2; ++i) {
      if (!commute(x, rep.b(i))) {
        return false;
      }
    }
    return braid(x, rep.b(n - 1));
  }

  // Every x in S_r admissible as the image of x_n, identity included, in
  // rank order.
  [[nodiscard]] inline std::vector<Perm> valid_b_next(TowerRep const& rep) {
    std::vector<Perm> out;
    std::uint64_t const total = factorial(rep.degree().value());
    for (std::uint64_t k = 1; k <= total; ++k) {
      Perm x = perm_of_rank(k, rep.degree());
      if (admits_next(rep, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  // Every c in S_r with a_m c = c a_{m+1} for all m and c b_i = b_i c for all
  // i, in rank order.
  [[nodiscard]] inline std::vector<Perm> braid_intertwiners(TowerRep const& rep) {
    std::vector<Perm> out;
    std::uint64_t const total = factorial(rep.degree().value());
    for (std::uint64_t k = 1; k <= total; ++k) {
      Perm c = perm_of_rank(k, rep.degree());
      if (!intertwines(rep.cycle(), c)) {
        continue;
      }
      if (std::all_of(rep.bseq().begin(), rep.bseq().end(),
                      [&c](auto const& b) { return commute(c, b); })) {
        out.push_back(c);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  // Hom(K_n, S_r), one entry per shift orbit (rotation 0). Each entry stands
  // for period() representations.
  class HomKn {
   public:
    HomKn(int level, Degree d, std::vector<TowerRep> orbits)
        : level_(level), degree_(d), orbits_(std::move(orbits)) {
      std::sort(orbits_.begin(), orbits_.end());
    }

    [[nodiscard]] int level() const noexcept {
      return level_;
    }

    [[nodiscard]] Degree degree() const noexcept {
      return degree_;
    }

    [[nodiscard]] std::vector<TowerRep> const& orbits() const noexcept {
      return orbits_;
    }

    [[nodiscard]] std::uint64_t representation_count() const noexcept {
      std::uint64_t total = 0;
      for (auto const& o : orbits_) {
        total += o.period();
      }
      return total;
    }

    [[nodiscard]] bool only_trivial() const noexcept {
      return std::all_of(orbits_.begin(), orbits_.end(),
                         [](auto const& o) { return o.is_trivial(); });
    }

    [[nodiscard]] std::vector<TowerRep> nontrivial() const {
      std::vector<TowerRep> out;
      std::copy_if(orbits_.begin(), orbits_.end(), std::back_inserter(out),
                   [](auto const& o) { return !o.is_trivial(); });
      return out;
    }

    // One TowerRep per (cycle, rotation, bseq).
    [[nodiscard]] std::vector<TowerRep> representations() const {
      std::vector<TowerRep> out;
      for (auto const& o : orbits_) {
        for (std::size_t k = 0; k < o.period(); ++k) {
          out.push_back(o.rotated(k));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    friend bool operator==(HomKn const&, HomKn const&) = default;

   private:
    int                   level_;
    Degree                degree_;
    std::vector<TowerRep> orbits_;
  };

  // Hom(B_n, S_r), one entry per (orbit, c).
  class HomBn {
   public:
    HomBn(int level, Degree d, std::vector<BraidRep> orbits)
        : level_(level), degree_(d), orbits_(std::move(orbits)) {
      std::sort(orbits_.begin(), orbits_.end());
    }

    [[nodiscard]] int level() const noexcept {
      return level_;
    }

    [[nodiscard]] Degree degree() const noexcept {
      return degree_;
    }

    [[nodiscard]] std::vector<BraidRep> const& orbits() const noexcept {
      return orbits_;
    }

    [[nodiscard]] std::uint64_t representation_count() const noexcept {
      std::uint64_t total = 0;
      for (auto const& o : orbits_) {
        total += o.rep.period();
      }
      return total;
    }

    [[nodiscard]] std::vector<BraidRep> representations() const {
      std::vector<BraidRep> out;
      for (auto const& o : orbits_) {
        for (std::size_t k = 0; k < o.rep.period(); ++k) {
          out.push_back({o.rep.rotated(k), o.c});
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    friend bool operator==(HomBn const&, HomBn const&) = default;

   private:
    int                   level_;
    Degree                degree_;
    std::vector<BraidRep> orbits_;
  };

  namespace detail {
    inline void require_level(int n) {
      if (n < 3) {
        throw std::invalid_argument("level n must be at least 3, got "
                                    + std::to_string(n));
      }
    }

    [[nodiscard]] inline std::vector<TowerRep> base_orbits(CycleSet const& cs) {
      std::vector<TowerRep> out;
      out.reserve(cs.size());
      for (auto const& c : cs.cycles()) {
        out.emplace_back(std::make_shared<ShiftCycle const>(c));
      }
      return out;
    }

    // Applies expand to every rep in parallel; concatenates in input order.
    template <typename T, typename Expand>
    [[nodiscard]] std::vector<T> flat_map(std::vector<TowerRep> const& in,
                                          unsigned                     workers,
                                          Expand&&                     expand) {
      std::vector<std::vector<T>> slots(in.size());
      parallel_for(in.size(), workers, [&](std::size_t i) { slots[i] = expand(in[i]); });
      std::vector<T> out;
      for (auto& s : slots) {
        std::move(s.begin(), s.end(), std::back_inserter(out));
      }
      return out;
    }

    [[nodiscard]] inline std::vector<TowerRep> next_level(std::vector<TowerRep> const& reps,
                                                          unsigned workers) {
      return flat_map<TowerRep>(reps, workers, [](TowerRep const& rep) {
        std::vector<TowerRep> out;
        for (auto const& x : valid_b_next(rep)) {
          out.push_back(rep.extended(x));
        }
        return out;
      });
    }
  }  // namespace detail

  // Hom(K_n, S_r), built level by level from the cycles of the shift graph.
  // Identity-valued b_i branches are kept: they contribute to |Hom| at n = 4.
  [[nodiscard]] inline HomKn enumerate_hom_kn(int                       n,
                                              CycleSet const&           cycles,
                                              EnumerationOptions const& opts = {}) {
    detail::require_level(n);
    unsigned const workers = resolve_workers(opts.workers);
    auto           reps    = detail::base_orbits(cycles);
    for (int level = 3; level < n; ++level) {
      reps = detail::next_level(reps, workers);
    }
    return HomKn(n, cycles.degree(), std::move(reps));
  }

  [[nodiscard]] inline HomKn enumerate_hom_kn(int                       n,
                                              Degree                    d,
                                              EnumerationOptions const& opts = {}) {
    detail::require_level(n);
    return enumerate_hom_kn(n, enumerate_cycles(d, opts), opts);
  }

  // Hom(B_n, S_r) by solving for c directly on every representation of K_n.
  [[nodiscard]] inline HomBn enumerate_hom_bn(HomKn const&              kn,
                                              EnumerationOptions const& opts = {}) {
    auto lifts = detail::flat_map<BraidRep>(
        kn.orbits(), resolve_workers(opts.workers), [](TowerRep const& rep) {
          std::vector<BraidRep> out;
          for (auto const& c : braid_intertwiners(rep)) {
            out.push_back({rep, c});
          }
          return out;
        });
    return HomBn(kn.level(), kn.degree(), std::move(lifts));
  }

  [[nodiscard]] inline HomBn enumerate_hom_bn(int                       n,
                                              Degree                    d,
                                              EnumerationOptions const& opts = {}) {
    return enumerate_hom_bn(enumerate_hom_kn(n, d, opts), opts);
  }

  struct LadderResult {
    HomKn kn;
    HomBn bn;
  };

  // Hom(K_n, S_r) and Hom(B_n, S_r) via the interleaved ladder: a lift c of
  // [C, b_3, ..., b_{i-2}] to B_{i-1} either commutes with b_{i-1}, giving a
  // lift of [C, b_3, ..., b_{i-1}] to B_i, or braids with it, giving the
  // extension b_i = c to K_{i+1}. Only the first rung (b_3) needs a search
  // over S_r. Independent of enumerate_hom_kn / enumerate_hom_bn beyond the
  // relation predicates.
  [[nodiscard]] inline LadderResult enumerate_ladder(int n, CycleSet const& cycles) {
    detail::require_level(n);
    Degree const d = cycles.degree();

    using Key = std::pair<ShiftCycle const*, std::vector<Perm>>;
    auto key  = [](TowerRep const& rep) { return Key{&rep.cycle(), rep.bseq()}; };

    // Rung 3: K_3 and B_3.
    std::vector<TowerRep> k_prev = detail::base_orbits(cycles);
    std::vector<BraidRep> b_prev;
    for (auto const& rep : k_prev) {
      for (auto const& c : braid_intertwiners(rep)) {
        b_prev.push_back({rep, c});
      }
    }
    if (n == 3) {
      return {HomKn(3, d, k_prev), HomBn(3, d, b_prev)};
    }
    // Rung 4: K_4 by search.
    std::vector<TowerRep> k_cur;
    for (auto const& rep : k_prev) {
      for (std::uint64_t k = 1; k <= factorial(d.value()); ++k) {
        Perm b3 = perm_of_rank(k, d);
        if (check_k4(rep.cycle(), b3)) {
          k_cur.push_back(rep.extended(b3));
        }
      }
    }
    // Rung i >= 4: from K_i and B_{i-1}, produce B_i and K_{i+1}.
    for (int i = 4;; ++i) {
      std::map<Key, std::vector<Perm>> lifts;
      for (auto const& br : b_prev) {
        lifts[key(br.rep)].push_back(br.c);
      }
      std::vector<BraidRep> b_cur;
      std::vector<TowerRep> k_next;
      for (auto const& rep : k_cur) {
        std::vector<Perm> shorter(rep.bseq().begin(), rep.bseq().end() - 1);
        auto it = lifts.find(Key{&rep.cycle(), shorter});
        if (it == lifts.end()) {
          continue;
        }
        Perm const& last = rep.bseq().back();
        for (auto const& c : it->second) {
          if (commute(c, last)) {
            b_cur.push_back({rep, c});
          }
          if (braid(c, last)) {
            k_next.push_back(rep.extended(c));
          }
        }
      }
      if (i == n) {
        return {HomKn(n, d, std::move(k_cur)), HomBn(n, d, std::move(b_cur))};
      }
      k_cur  = std::move(k_next);
      b_prev = std::move(b_cur);
    }
  }

  // True iff every a_m and b_i of every rep is even. Levels below 5 are
  // rejected: K_4 does have odd images (any transposition cycle with b_3 = 1).
  [[nodiscard]] inline bool parity_audit(std::span<TowerRep const> reps) {
    for (auto const& rep : reps) {
      if (rep.level() < 5) {
        throw std::invalid_argument("parity audit applies to levels n >= 5");
      }
    }
    for (auto const& rep : reps) {
      for (auto const& g : rep.generators()) {
        if (parity(g) == Parity::odd) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace braidrep

#endif  // BRAIDREP_TOWER_HPP_
