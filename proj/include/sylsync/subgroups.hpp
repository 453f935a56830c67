#pragma once

#include <cstdint>
#include <vector>

#include "sylsync/dense_group.hpp"

namespace sylsync {

/// Every subgroup exactly once, ordered by (order, smallest differing index).
/// Throws Errc::order_exceeds_cap when |D| > enum_cap.
std::vector<SubgroupHandle> enumerate_subgroups(const DenseGroup& D,
                                                std::size_t enum_cap = kDefaultEnumerationCap);

std::vector<SubgroupHandle> abelian_subgroups(const std::vector<SubgroupHandle>& all);
std::vector<SubgroupHandle> nilpotent_subgroups(const std::vector<SubgroupHandle>& all);
/// Nilpotent members not properly contained in another nilpotent member.
std::vector<SubgroupHandle> maximal_nilpotent_subgroups(const std::vector<SubgroupHandle>& all);
/// Subgroups whose order is the full pi-part of |D|.
std::vector<SubgroupHandle> hall_subgroups(const std::vector<SubgroupHandle>& all,
                                           const std::vector<std::uint64_t>& pi);

}  // namespace sylsync
