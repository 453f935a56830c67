#include "sylsync/subgroups.hpp"

#include <algorithm>
#include <unordered_set>

#include "sylsync/arith.hpp"
#include "sylsync/error.hpp"

namespace sylsync {

std::vector<SubgroupHandle> enumerate_subgroups(const DenseGroup& D, std::size_t enum_cap) {
  if (D.order() > enum_cap)
    throw Error(Errc::order_exceeds_cap, "subgroup enumeration needs order <= " +
                                             std::to_string(enum_cap) + ", got " +
                                             std::to_string(D.order()));

  // Every subgroup K is cyclic or K = <M, c> for a maximal M < K and a cyclic
  // c of prime-power order outside M, so joining with those cyclics is
  // exhaustive.
  std::vector<SubgroupHandle> found;
  std::unordered_set<Mask, MaskHash> seen;
  auto add = [&](SubgroupHandle H) {
    if (seen.insert(H.mask()).second) found.push_back(std::move(H));
  };

  std::vector<Index> cyclic_gens;
  std::vector<SubgroupHandle> cyclic;
  for (Index g = 0; g < D.order(); ++g) {
    Index seed[] = {g};
    SubgroupHandle C = subgroup_closure(D, seed);
    add(C);
    if (prime_divisors(D.element_order(g)).size() == 1 &&
        std::none_of(cyclic.begin(), cyclic.end(), [&](const auto& X) { return X == C; })) {
      cyclic.push_back(C);
      cyclic_gens.push_back(g);
    }
  }

  for (std::size_t k = 0; k < found.size(); ++k) {
    std::vector<Index> gens = generating_set(found[k]);
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (found[k].contains(cyclic_gens[c])) continue;
      std::vector<Index> seeds = gens;
      seeds.push_back(cyclic_gens[c]);
      add(subgroup_closure(D, seeds));
    }
  }

  std::sort(found.begin(), found.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

std::vector<SubgroupHandle> abelian_subgroups(const std::vector<SubgroupHandle>& all) {
  std::vector<SubgroupHandle> out;
  for (const auto& H : all)
    if (is_abelian(H)) out.push_back(H);
  return out;
}

std::vector<SubgroupHandle> nilpotent_subgroups(const std::vector<SubgroupHandle>& all) {
  std::vector<SubgroupHandle> out;
  for (const auto& H : all)
    if (is_nilpotent(H)) out.push_back(H);
  return out;
}

std::vector<SubgroupHandle> maximal_nilpotent_subgroups(const std::vector<SubgroupHandle>& all) {
  auto nil = nilpotent_subgroups(all);
  std::vector<SubgroupHandle> out;
  for (const auto& H : nil) {
    bool maximal = std::none_of(nil.begin(), nil.end(), [&](const SubgroupHandle& K) {
      return K.order() > H.order() && H.is_subgroup_of(K);
    });
    if (maximal) out.push_back(H);
  }
  return out;
}

std::vector<SubgroupHandle> hall_subgroups(const std::vector<SubgroupHandle>& all,
                                           const std::vector<std::uint64_t>& pi) {
  std::vector<SubgroupHandle> out;
  if (all.empty()) return out;
  const std::size_t n = all.front().parent().order();
  std::uint64_t target = 1;
  for (std::uint64_t p : pi) target *= p_part(n, p);
  for (const auto& H : all)
    if (H.order() == target) out.push_back(H);
  return out;
}

}  // namespace sylsync
