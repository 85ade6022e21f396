// Brute-force oracles for Hom(K_n, S_r) and Hom(B_n, S_r), written directly
// from the group presentations. They share only Perm arithmetic with the
// library, never its shift-graph, extension or lifting code.

#ifndef BRAIDREP_TESTS_ORACLE_HPP_
#define BRAIDREP_TESTS_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "braidrep/perm.hpp"
#include "braidrep/tower.hpp"

namespace braidrep::oracle {

  // (rank z_0, rank z_1, rank x_3, ..., rank x_{n-1}[, rank c])
  using Key = std::vector<std::uint64_t>;

  // One period of the sequence z_m determined by z_0, z_1 through
  // z_m z_{m+2} = z_{m+1}.
  inline std::vector<Perm> z_sequence(Perm const& z0, Perm const& z1) {
    std::vector<Perm> seq{z0, z1};
    while (true) {
      Perm next = compose(inverse(seq[seq.size() - 2]), seq.back());
      if (seq.back() == z0 && next == z1) {
        seq.pop_back();
        return seq;
      }
      seq.push_back(next);
    }
  }

  // All defining relations of K_n on a candidate assignment.
  inline bool kn_relations_hold(std::vector<Perm> const& z, std::vector<Perm> const& x) {
    auto const p  = z.size();
    auto       zm = [&](std::size_t m) -> Perm const& { return z[m % p]; };
    for (std::size_t i = 0; i < x.size(); ++i) {
      int const gen = static_cast<int>(i) + 3;
      for (std::size_t m = 0; m < p; ++m) {
        if (gen == 3) {
          if (compose(compose(zm(m), x[i]), zm(m + 2)) != compose(compose(x[i], zm(m + 1)), x[i])) {
            return false;
          }
        } else if (compose(zm(m), x[i]) != compose(x[i], zm(m + 1))) {
          return false;
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        auto const& u = x[i];
        auto const& v = x[j];
        if (i - j >= 2) {
          if (compose(u, v) != compose(v, u)) {
            return false;
          }
        } else if (compose(compose(u, v), u) != compose(compose(v, u), v)) {
          return false;
        }
      }
    }
    return true;
  }

  // Hom(K_n, S_r) by scanning every assignment of (z_0, z_1, x_3, ...,
  // x_{n-1}) in S_r^{n-1}. No pruning: every tuple is tested in full.
  inline std::set<Key> hom_kn_full_scan(int n, Degree d) {
    auto const    all = all_perms(d);
    std::set<Key> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n - 1), 0);
    std::vector<std::vector<Perm>> seqs(all.size() * all.size());
    while (true) {
      auto& z = seqs[idx[0] * all.size() + idx[1]];
      if (z.empty()) {
        z = z_sequence(all[idx[0]], all[idx[1]]);
      }
      std::vector<Perm> x;
      for (std::size_t i = 2; i < idx.size(); ++i) {
        x.push_back(all[idx[i]]);
      }
      if (kn_relations_hold(z, x)) {
        Key key;
        for (auto i : idx) {
          key.push_back(i + 1);
        }
        out.insert(key);
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == all.size()) {
        idx[pos++] = 0;
      }
      if (pos == idx.size()) {
        return out;
      }
    }
  }

  // Hom(B_n, S_r): tuples (s_1, ..., s_{n-1}) satisfying the braid relations,
  // found by depth-first assignment, each translated to
  // (z_0 = s_2 s_1^-1, z_1 = s_1 z_0 s_1^-1, x_i = s_i s_1^-1, c = s_1^-1).
  inline std::set<Key> hom_bn(int n, Degree d) {
    auto const        all = all_perms(d);
    std::set<Key>     out;
    std::vector<Perm> s;
    std::function<void()> extend = [&] {
      if (static_cast<int>(s.size()) == n - 1) {
        Perm const s1inv = inverse(s[0]);
        Perm const z0    = compose(s[1], s1inv);
        Perm const z1    = compose(compose(s[0], z0), s1inv);
        Key        key{rank_of(z0).value(), rank_of(z1).value()};
        for (std::size_t i = 2; i < s.size(); ++i) {
          key.push_back(rank_of(compose(s[i], s1inv)).value());
        }
        key.push_back(rank_of(s1inv).value());
        out.insert(key);
        return;
      }
      for (auto const& t : all) {
        bool ok = true;
        for (std::size_t j = 0; j < s.size() && ok; ++j) {
          bool const adjacent = s.size() - j == 1;
          ok = adjacent ? compose(compose(t, s[j]), t) == compose(compose(s[j], t), s[j])
                        : compose(t, s[j]) == compose(s[j], t);
        }
        if (ok) {
          s.push_back(t);
          extend();
          s.pop_back();
        }
      }
    };
    extend();
    return out;
  }

  inline Key key_of(TowerRep const& rep) {
    Key key{rank_of(rep.a(0)).value(), rank_of(rep.a(1)).value()};
    for (auto const& b : rep.bseq()) {
      key.push_back(rank_of(b).value());
    }
    return key;
  }

  inline std::set<Key> keys(HomKn const& hom) {
    std::set<Key> out;
    for (auto const& rep : hom.representations()) {
      out.insert(key_of(rep));
    }
    return out;
  }

  inline std::set<Key> keys(HomBn const& hom) {
    std::set<Key> out;
    for (auto const& br : hom.representations()) {
      Key key = key_of(br.rep);
      key.push_back(rank_of(br.c).value());
      out.insert(key);
    }
    return out;
  }

}  // namespace braidrep::oracle

#endif  // BRAIDREP_TESTS_ORACLE_HPP_
