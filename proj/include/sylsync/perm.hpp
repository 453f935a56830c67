#pragma once

// Permutations act on {0, ..., degree-1} in image-array form. Composition is
// left to right: compose(p, q) applies p first, so x -> q[p[x]].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylsync {

using Point = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;

  /// Throws Errc::invalid_permutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Skips the bijection check; callers guarantee it.
  static Permutation unchecked(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1)(2 3 4)"; "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  /// Cycles given as point lists, e.g. {{0, 1, 2}}.
  static Permutation from_cycle_list(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  bool is_even() const;
  std::uint64_t order() const;
  /// Cycle lengths (fixed points included) in non-increasing order.
  std::vector<std::size_t> cycle_type() const;
  /// First point not fixed, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Applies p, then q. Throws Errc::degree_mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// p^g = g^-1 p g.
Permutation conjugate(const Permutation& p, const Permutation& g);

Permutation power(const Permutation& p, std::int64_t k);

struct GenSet {
  std::size_t degree = 1;
  std::vector<Permutation> gens;

  /// Throws Errc::degree_mismatch if some generator has another degree.
  void validate() const;
};

}  // namespace sylsync
