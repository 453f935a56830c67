#pragma once

#include <cstddef>
#include <cstdint>

namespace sylsync {

struct Caps {
  std::size_t dense_cap = 5000;
  std::size_t enumeration_cap = 300;
  std::uint64_t tuple_space_bound = 1'000'000;
  std::size_t sampled_tuples = 10'000;
  std::uint64_t sylow_enumeration_limit = std::uint64_t{1} << 22;
  std::size_t mc_trials = 10'000;
};

}  // namespace sylsync
