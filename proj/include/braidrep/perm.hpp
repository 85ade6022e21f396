// Permutations of {1, ..., r} for small r, their lexicographic ranking, and
// orbit utilities.
//
// A Perm stores its image sequence. Composition is right-to-left:
// compose(x, y)(i) == x(y(i)). Ranks are 1-based positions in the
// lexicographic order of image sequences, so rank 1 is always the identity.

#ifndef BRAIDREP_PERM_HPP_
#define BRAIDREP_PERM_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef BRAIDREP_STORAGE_DEGREE
#define BRAIDREP_STORAGE_DEGREE 8
#endif

namespace braidrep {

  // Largest degree a Perm can physically hold.
  inline constexpr int kStorageDegree = BRAIDREP_STORAGE_DEGREE;
  // Default ceiling for exhaustive enumeration: (7!)^2 shift vertices.
  inline constexpr int kDefaultMaxDegree = 7;

  static_assert(kStorageDegree >= 1 && kStorageDegree <= 20,
                "r! must fit in 64 bits");

  class Degree {
   public:
    explicit Degree(int r) : r_(r) {
      if (r < 1 || r > kStorageDegree) {
        throw std::invalid_argument("degree " + std::to_string(r)
                                    + " outside [1, "
                                    + std::to_string(kStorageDegree) + "]");
      }
    }

    [[nodiscard]] int value() const noexcept {
      return r_;
    }

    friend auto operator<=>(Degree, Degree) = default;

   private:
    int r_;
  };

  [[nodiscard]] inline std::uint64_t factorial(int k) noexcept {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) {
      f *= static_cast<std::uint64_t>(i);
    }
    return f;
  }

  // 1-based lexicographic rank of an element of S_r.
  class Rank {
   public:
    Rank(std::uint64_t value, Degree d) : value_(value) {
      if (value < 1 || value > factorial(d.value())) {
        throw std::out_of_range("rank " + std::to_string(value)
                                + " outside [1, "
                                + std::to_string(factorial(d.value())) + "]");
      }
    }

    [[nodiscard]] std::uint64_t value() const noexcept {
      return value_;
    }

    friend auto operator<=>(Rank, Rank) = default;

   private:
    std::uint64_t value_;
  };

  enum class Parity { even, odd };

  class Perm {
   public:
    [[nodiscard]] static Perm identity(Degree d) noexcept {
      Perm p(d);
      for (int i = 0; i < d.value(); ++i) {
        p.img_[i] = static_cast<std::uint8_t>(i);
      }
      return p;
    }

    // images are 1-based: images[i - 1] is the image of i.
    [[nodiscard]] static Perm from_images(std::span<int const> images) {
      Degree d(static_cast<int>(images.size()));
      Perm   p(d);
      std::array<bool, kStorageDegree> seen{};
      for (int i = 0; i < d.value(); ++i) {
        int v = images[i];
        if (v < 1 || v > d.value() || seen[v - 1]) {
          throw std::invalid_argument("image sequence is not a bijection");
        }
        seen[v - 1] = true;
        p.img_[i]   = static_cast<std::uint8_t>(v - 1);
      }
      return p;
    }

    [[nodiscard]] static Perm from_images(std::initializer_list<int> images) {
      return from_images(std::span<int const>(images.begin(), images.size()));
    }

    [[nodiscard]] Degree degree() const noexcept {
      return Degree(r_);
    }

    [[nodiscard]] int size() const noexcept {
      return r_;
    }

    // Image of the point i, 1-based.
    [[nodiscard]] int operator()(int i) const noexcept {
      return img_[i - 1] + 1;
    }

    // Image of the point i, 0-based.
    [[nodiscard]] int image0(int i) const noexcept {
      return img_[i];
    }

    [[nodiscard]] std::vector<int> images() const {
      std::vector<int> out(r_);
      for (int i = 0; i < r_; ++i) {
        out[i] = img_[i] + 1;
      }
      return out;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (int i = 0; i < r_; ++i) {
        if (img_[i] != i) {
          return false;
        }
      }
      return true;
    }

    // Same-degree values order exactly as their ranks do.
    friend auto operator<=>(Perm const&, Perm const&) = default;

   private:
    explicit Perm(Degree d) noexcept : r_(static_cast<std::uint8_t>(d.value())) {}

    friend Perm compose(Perm const&, Perm const&);
    friend Perm inverse(Perm const&) noexcept;
    friend Perm perm_of_rank(Rank, Degree);

    std::uint8_t                               r_;
    std::array<std::uint8_t, kStorageDegree> img_{};
  };

  namespace detail {
    inline void require_same_degree(Perm const& x, Perm const& y) {
      if (x.size() != y.size()) {
        throw std::invalid_argument("degree mismatch: "
                                    + std::to_string(x.size()) + " vs "
                                    + std::to_string(y.size()));
      }
    }
  }  // namespace detail

  [[nodiscard]] inline Perm compose(Perm const& x, Perm const& y) {
    detail::require_same_degree(x, y);
    Perm out(x.degree());
    for (int i = 0; i < x.r_; ++i) {
      out.img_[i] = x.img_[y.img_[i]];
    }
    return out;
  }

  [[nodiscard]] inline Perm compose(Perm const& x,
                                    Perm const& y,
                                    Perm const& z) {
    return compose(compose(x, y), z);
  }

  [[nodiscard]] inline Perm inverse(Perm const& x) noexcept {
    Perm out(x.degree());
    for (int i = 0; i < x.r_; ++i) {
      out.img_[x.img_[i]] = static_cast<std::uint8_t>(i);
    }
    return out;
  }

  [[nodiscard]] inline bool commute(Perm const& x, Perm const& y) {
    return compose(x, y) == compose(y, x);
  }

  // x y x == y x y
  [[nodiscard]] inline bool braid(Perm const& x, Perm const& y) {
    return compose(x, y, x) == compose(y, x, y);
  }

  // Lehmer code read as a factorial-base number, plus one.
  [[nodiscard]] inline Rank rank_of(Perm const& x) {
    int const     r = x.size();
    std::uint64_t k = 0;
    for (int i = 0; i < r; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < r; ++j) {
        smaller += x.image0(j) < x.image0(i);
      }
      k = k * static_cast<std::uint64_t>(r - i) + static_cast<std::uint64_t>(smaller);
    }
    return Rank(k + 1, x.degree());
  }

  [[nodiscard]] inline Perm perm_of_rank(Rank k, Degree d) {
    Rank const    checked(k.value(), d);
    int const     r    = d.value();
    std::uint64_t rest = checked.value() - 1;
    std::array<std::uint8_t, kStorageDegree> pool{};
    std::iota(pool.begin(), pool.begin() + r, std::uint8_t{0});
    int  left = r;
    Perm out(d);
    for (int i = 0; i < r; ++i) {
      std::uint64_t const block = factorial(r - i - 1);
      auto const          pick  = static_cast<int>(rest / block);
      rest %= block;
      out.img_[i] = pool[pick];
      std::copy(pool.begin() + pick + 1, pool.begin() + left, pool.begin() + pick);
      --left;
    }
    return out;
  }

  [[nodiscard]] inline Perm perm_of_rank(std::uint64_t k, Degree d) {
    return perm_of_rank(Rank(k, d), d);
  }

  [[nodiscard]] inline Parity parity(Perm const& x) noexcept {
    int const r = x.size();
    std::array<bool, kStorageDegree> seen{};
    int cycles = 0;
    for (int i = 0; i < r; ++i) {
      if (!seen[i]) {
        ++cycles;
        for (int j = i; !seen[j]; j = x.image0(j)) {
          seen[j] = true;
        }
      }
    }
    return (r - cycles) % 2 == 0 ? Parity::even : Parity::odd;
  }

  // Number of elements of order exactly two, from the recurrence
  // t(k) = t(k - 1) + (k - 1) t(k - 2) for involutions including the identity.
  [[nodiscard]] inline std::uint64_t count_involutions(Degree d) noexcept {
    std::uint64_t prev = 1, cur = 1;
    for (int k = 2; k <= d.value(); ++k) {
      std::uint64_t next = cur + static_cast<std::uint64_t>(k - 1) * prev;
      prev               = cur;
      cur                = next;
    }
    return cur - 1;
  }

  // True iff <gens> has a single orbit on {1, ..., r}. Orbit closure of the
  // point 1; the generated group is never enumerated.
  [[nodiscard]] inline bool is_transitive(std::span<Perm const> gens, Degree d) {
    int const r = d.value();
    for (auto const& g : gens) {
      if (g.size() != r) {
        throw std::invalid_argument("degree mismatch in generator set");
      }
    }
    std::array<bool, kStorageDegree> reached{};
    std::array<int, kStorageDegree>  stack{};
    int top = 0, count = 1;
    reached[0] = true;
    stack[top++] = 0;
    while (top > 0) {
      int const pt = stack[--top];
      for (auto const& g : gens) {
        int const next = g.image0(pt);
        if (!reached[next]) {
          reached[next] = true;
          stack[top++]  = next;
          ++count;
        }
      }
    }
    return count == r;
  }

  [[nodiscard]] inline std::vector<Perm> all_perms(Degree d) {
    std::vector<Perm> out;
    std::uint64_t const n = factorial(d.value());
    out.reserve(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      out.push_back(perm_of_rank(k, d));
    }
    return out;
  }

}  // namespace braidrep

#endif  // BRAIDREP_PERM_HPP_
