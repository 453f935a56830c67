#pragma once

#include <cstdint>

namespace sylsync {

/// Seeded xoshiro256** stream. Identical (master_seed, stream_id) pairs give
/// identical sequences on every platform; the state is derived through
/// SplitMix64 so neighbouring stream ids are decorrelated.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next();

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1).
  double uniform();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t s_[4];
};

/// Stable 64-bit mix used to derive stream ids from task names.
std::uint64_t mix64(std::uint64_t x);

}  // namespace sylsync
