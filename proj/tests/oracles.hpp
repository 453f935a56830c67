#pragma once

// Brute-force reference computations on explicit element sets. These work on
// std::set<Permutation> and never touch the indexed dense backend, so they
// stay an independent check of it.

#include <algorithm>
#include <set>
#include <vector>

#include "sylsync/perm.hpp"

namespace oracle {

using sylsync::Permutation;
using ElementSet = std::set<Permutation>;

inline ElementSet closure(std::size_t degree, const std::vector<Permutation>& gens) {
  ElementSet out{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : gens) {
      Permutation y = queue[k] * s;
      if (out.insert(y).second) queue.push_back(y);
    }
  }
  return out;
}

inline ElementSet conjugate_set(const ElementSet& H, const Permutation& g) {
  ElementSet out;
  for (const auto& h : H) out.insert(sylsync::conjugate(h, g));
  return out;
}

inline ElementSet intersection(const ElementSet& A, const ElementSet& B) {
  ElementSet out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::inserter(out, out.end()));
  return out;
}

inline bool subset(const ElementSet& A, const ElementSet& B) {
  return std::includes(B.begin(), B.end(), A.begin(), A.end());
}

inline ElementSet normalizer(const ElementSet& G, const ElementSet& H) {
  ElementSet out;
  for (const auto& g : G)
    if (conjugate_set(H, g) == H) out.insert(g);
  return out;
}

inline ElementSet centralizer(const ElementSet& G, const ElementSet& H) {
  ElementSet out;
  for (const auto& g : G) {
    bool ok = true;
    for (const auto& h : H)
      if (g * h != h * g) {
        ok = false;
        break;
      }
    if (ok) out.insert(g);
  }
  return out;
}

inline ElementSet core(const ElementSet& G, const ElementSet& H) {
  ElementSet out = H;
  for (const auto& g : G) out = intersection(out, conjugate_set(H, g));
  return out;
}

/// All subgroups by closing every subset reachable from cyclic subgroups
/// under pairwise joins until nothing new appears.
inline std::vector<ElementSet> all_subgroups(std::size_t degree, const ElementSet& G) {
  std::set<ElementSet> found;
  for (const auto& g : G) found.insert(closure(degree, {g}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Permutation> gens(current[i].begin(), current[i].end());
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(closure(degree, gens)).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

/// Sylow p-subgroups: subgroups of full p-power order.
inline std::vector<ElementSet> sylow_subgroups(const std::vector<ElementSet>& subgroups,
                                               std::size_t group_order, std::uint64_t p) {
  std::size_t target = 1;
  for (std::size_t n = group_order; n % p == 0; n /= p) target *= p;
  std::vector<ElementSet> out;
  for (const auto& H : subgroups)
    if (H.size() == target) out.push_back(H);
  return out;
}

}  // namespace oracle
