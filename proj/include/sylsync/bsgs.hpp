#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sylsync/perm.hpp"
#include "sylsync/rng.hpp"

namespace sylsync {

using BigInt = boost::multiprecision::cpp_int;

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Immutable after construction.
///
/// Level i stabilises base[0..i-1] pointwise; its transversal maps base[i]
/// to every point of the basic orbit. An element factors uniquely as
/// r_{k-1} * ... * r_1 * r_0 with r_i from the level-i transversal (r_0 is
/// applied last).
class BsgsGroup {
 public:
  struct Level {
    Point base_point = 0;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_pos;  // point -> index in orbit, -1 if absent
    std::vector<Permutation> reps;        // reps[k] maps base_point to orbit[k]
    std::vector<Permutation> rep_inverses;
  };

  /// Builds a verified BSGS. `base_prefix` is used as the start of the base
  /// (extended when needed). When `known_order` is given, construction stops
  /// as soon as the transversal product reaches it; the caller guarantees the
  /// value is the true order.
  static BsgsGroup build(const GenSet& gens, std::span<const Point> base_prefix = {},
                         const std::optional<BigInt>& known_order = std::nullopt);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Point>& base() const noexcept { return base_; }
  const GenSet& strong_generators() const noexcept { return strong_; }
  const GenSet& generators() const noexcept { return input_; }
  const BigInt& order() const noexcept { return order_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  /// Residue after sifting and the level where sifting stopped
  /// (levels().size() when it went all the way through).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from_level = 0) const;

  /// Throws Errc::degree_mismatch.
  bool contains(const Permutation& g) const;

  /// Exactly uniform: independent uniform transversal representatives.
  Permutation random_element(RngStream& rng) const;

  /// Calls `visit` on every element; stops early when it returns false.
  /// Returns false if stopped early.
  bool for_each_element(const std::function<bool(const Permutation&)>& visit) const;

 private:
  void rebuild_level(std::size_t i);

  std::size_t degree_ = 1;
  GenSet input_;
  GenSet strong_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Convenience: bsgs_build(gens) in the operation vocabulary.
inline BsgsGroup bsgs_build(const GenSet& gens) { return BsgsGroup::build(gens); }

BigInt factorial(unsigned n);

}  // namespace sylsync
