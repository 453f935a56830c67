#pragma once

#include <memory>
#include <string>

#include "oracles.hpp"
#include "sylsync/dense_group.hpp"
#include "sylsync/group_spec.hpp"

namespace fixture {

using namespace sylsync;

inline Permutation cyc(std::size_t n, const char* text) { return Permutation::from_cycles(n, text); }

inline std::shared_ptr<const DenseGroup> dense(const GroupSpec& spec) { return build_dense(spec); }

inline std::shared_ptr<const DenseGroup> dense(const char* json) { return build_dense(parse_spec(json)); }

inline oracle::ElementSet to_set(const SubgroupHandle& H) {
  oracle::ElementSet out;
  for (Index i : H.elements()) out.insert(H.parent().element(i));
  return out;
}

inline oracle::ElementSet all_elements(const DenseGroup& D) {
  oracle::ElementSet out;
  for (Index i = 0; i < D.order(); ++i) out.insert(D.element(i));
  return out;
}

inline SubgroupHandle from_set(const DenseGroup& D, const oracle::ElementSet& S) {
  Mask m(D.order());
  for (const auto& g : S) m.set(D.index_of(g));
  return SubgroupHandle(D, std::move(m));
}

inline SubgroupHandle generated(const DenseGroup& D, std::initializer_list<const char*> cycles) {
  std::vector<Index> seeds;
  for (const char* c : cycles) seeds.push_back(D.index_of(cyc(D.degree(), c)));
  return subgroup_closure(D, seeds);
}

}  // namespace fixture
