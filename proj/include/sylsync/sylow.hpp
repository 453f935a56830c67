#pragma once

#include <cstdint>
#include <vector>

#include "sylsync/bsgs.hpp"
#include "sylsync/dense_group.hpp"

namespace sylsync {

/// All Sylow p-subgroups of a dense group, with the conjugation labelling
/// `conjugate_of[g] = j` meaning representative^g == conjugates[j].
struct SylowSystem {
  std::uint64_t prime = 0;
  SubgroupHandle representative;
  std::vector<SubgroupHandle> conjugates;  // conjugates[0] is the representative
  std::vector<Index> transversal;          // representative^transversal[j] == conjugates[j]
  std::vector<std::uint32_t> conjugate_of;
  SubgroupHandle normalizer;               // of the representative
  SubgroupHandle p_core;
  bool is_normal = true;

  std::size_t count() const noexcept { return conjugates.size(); }
  /// Index of conjugates[j]^g.
  std::size_t act(std::size_t j, Index g) const;
  SubgroupHandle normalizer_of(std::size_t j) const;
};

/// Sylow construction by p-subgroup ascent inside normalizers; p not dividing
/// |D| gives the trivial system.
SylowSystem sylow_dense(const DenseGroup& D, std::uint64_t p);

/// Generators of a Sylow p-subgroup of Sym(n): one iterated wreath power of
/// the p-cycle per base-p digit of n, on consecutive blocks.
GenSet sym_sylow(std::size_t n, std::uint64_t p);

inline constexpr std::uint64_t kDenseEvenExtractionLimit = std::uint64_t{1} << 22;

/// Sylow p-subgroup of Alt(n) (n >= 3). For odd p this is sym_sylow; for
/// p = 2 it is the even part of sym_sylow(n, 2).
GenSet alt_sylow(std::size_t n, std::uint64_t p);

/// The two p = 2 routes of alt_sylow, exposed so they can be compared.
GenSet even_part_by_enumeration(const GenSet& gens);
GenSet even_part_by_schreier(const GenSet& gens);

struct IntersectionProfile {
  std::uint64_t prime = 0;
  std::vector<SubgroupHandle> distinct_intersections;  // in first-seen order over conjugates
  std::vector<SubgroupHandle> minimal_set;
  std::size_t min_order = 1;
  /// good[j]: representative ∩ conjugates[j] is inclusion-minimal.
  std::vector<bool> good;
  /// core_hit[j]: representative ∩ conjugates[j] equals the p-core.
  std::vector<bool> core_hit;
};

IntersectionProfile intersection_profile(const DenseGroup& D, const SylowSystem& S);

}  // namespace sylsync
