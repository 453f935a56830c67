#pragma once

#include <cstdint>
#include <map>

#include "sylsync/dense_group.hpp"

namespace sylsync {

struct GroupInvariants {
  SubgroupHandle center;
  SubgroupHandle hypercenter;
  SubgroupHandle fitting;
  std::map<std::uint64_t, SubgroupHandle> p_cores;
  bool is_nilpotent = true;
  bool is_metanilpotent = true;
  bool odd_order = true;
};

GroupInvariants invariants(const DenseGroup& D);

/// F(D): join of the p-cores.
SubgroupHandle fitting_subgroup(const DenseGroup& D);

}  // namespace sylsync
