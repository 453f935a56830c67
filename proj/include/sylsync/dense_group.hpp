#pragma once

// Small groups as explicit element tables. Elements are kept in
// lexicographic order of their image arrays, so the identity has index 0 and
// the order does not depend on how the group was generated. Subgroups are
// membership bitmaps over those indices.

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sylsync/perm.hpp"

namespace sylsync {

using Index = std::uint32_t;
using Mask = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultDenseCap = 5000;
inline constexpr std::size_t kDefaultEnumerationCap = 300;

struct MaskHash {
  std::size_t operator()(const Mask& m) const noexcept;
};

class DenseGroup {
 public:
  static constexpr Index identity_index = 0;

  /// Probes the order with Schreier-Sims first; throws
  /// Errc::order_exceeds_cap when it is larger than `cap`.
  static DenseGroup materialize(const GenSet& gens, std::size_t cap = kDefaultDenseCap);

  /// `elements` must form a group. Generators default to a greedy
  /// generating set.
  static DenseGroup from_elements(std::size_t degree, std::vector<Permutation> elements,
                                  const std::vector<Permutation>& generators = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }

  std::span<const Point> images(Index i) const {
    return {images_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation element(Index i) const;

  /// Index of a*b (a applied first).
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  /// a^g = g^-1 a g.
  Index conj(Index a, Index g) const { return mul(mul(inverse_[g], a), g); }
  /// [a, b] = a^-1 b^-1 a b.
  Index commutator(Index a, Index b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  Index pow(Index a, std::uint64_t k) const;

  std::optional<Index> find(const Permutation& g) const;
  /// Throws Errc::invalid_argument for non-members.
  Index index_of(const Permutation& g) const;

  const std::vector<Index>& generators() const noexcept { return generators_; }
  std::uint64_t element_order(Index i) const { return element_orders_[i]; }
  /// Primes dividing the order, increasing.
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  /// FNV-1a digest of the canonical element table (hex).
  const std::string& content_hash() const noexcept { return hash_; }

 private:
  struct Key {
    std::uint64_t lo = 0, hi = 0;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  template <class ImageOf>
  Key make_key(ImageOf&& image_of) const;

  std::size_t degree_ = 1;
  std::size_t order_ = 1;
  std::vector<Point> images_;
  std::vector<Point> base_;
  unsigned bits_ = 1;
  std::unordered_map<Key, Index, KeyHash> index_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::vector<std::uint64_t> element_orders_;
  std::vector<std::uint64_t> primes_;
  std::string hash_;
};

/// A subgroup of a DenseGroup given by its membership bitmap. The parent must
/// outlive the handle.
class SubgroupHandle {
 public:
  SubgroupHandle() = default;
  SubgroupHandle(const DenseGroup& parent, Mask mask)
      : parent_(&parent), mask_(std::move(mask)), order_(mask_.count()) {}

  const DenseGroup& parent() const { return *parent_; }
  const Mask& mask() const noexcept { return mask_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Index g) const { return mask_.test(g); }
  std::vector<Index> elements() const;
  bool is_subgroup_of(const SubgroupHandle& other) const { return mask_.is_subset_of(other.mask_); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const { return order_ == parent_->order(); }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.mask_ == b.mask_;
  }

 private:
  const DenseGroup* parent_ = nullptr;
  Mask mask_;
  std::size_t order_ = 0;
};

struct QuotientMap {
  const DenseGroup* source = nullptr;
  SubgroupHandle kernel;
  std::shared_ptr<const DenseGroup> quotient;
  std::vector<Index> projection;  // source index -> quotient index

  SubgroupHandle image(const SubgroupHandle& H) const;
  SubgroupHandle preimage(const SubgroupHandle& Hbar) const;
};

SubgroupHandle trivial_subgroup(const DenseGroup& D);
SubgroupHandle whole_group(const DenseGroup& D);

/// Smallest subgroup containing `seeds`.
SubgroupHandle subgroup_closure(const DenseGroup& D, std::span<const Index> seeds);
SubgroupHandle subgroup_closure(const DenseGroup& D, std::initializer_list<Index> seeds);

/// Closure of H together with extra elements.
SubgroupHandle extend(const SubgroupHandle& H, std::span<const Index> extra);

SubgroupHandle intersect(const SubgroupHandle& A, const SubgroupHandle& B);
SubgroupHandle join(const SubgroupHandle& A, const SubgroupHandle& B);

/// Greedy generating set in increasing index order.
std::vector<Index> generating_set(const SubgroupHandle& H);

/// H^g.
SubgroupHandle conjugate(const SubgroupHandle& H, Index g);

bool is_closed(const SubgroupHandle& H);
bool is_normal(const SubgroupHandle& H);
bool is_abelian(const SubgroupHandle& H);
/// Nilpotent iff for each prime the p-elements number exactly the p-part.
bool is_nilpotent(const SubgroupHandle& H);

SubgroupHandle normalizer(const SubgroupHandle& H);
SubgroupHandle centralizer(const SubgroupHandle& H);
SubgroupHandle center(const DenseGroup& D);
/// (C_D(H), Z(D)).
std::pair<SubgroupHandle, SubgroupHandle> centralizer_and_center(const DenseGroup& D,
                                                                 const SubgroupHandle& H);

/// Intersection of all conjugates of H.
SubgroupHandle core(const SubgroupHandle& H);
SubgroupHandle normal_closure(const DenseGroup& D, std::span<const Index> seeds);

/// Throws Errc::not_normal.
QuotientMap quotient(const DenseGroup& D, const SubgroupHandle& N);

std::vector<std::vector<Index>> conjugacy_classes(const DenseGroup& D);

/// Largest normal pi-subgroup.
SubgroupHandle pi_core(const DenseGroup& D, const std::vector<std::uint64_t>& pi);

/// Final term of the upper central series, by commutator ascent.
SubgroupHandle hypercenter(const DenseGroup& D);

/// Elements of the right coset H*g.
std::vector<Index> right_coset(const SubgroupHandle& H, Index g);

/// Number of elements of HK.
std::size_t product_size(const SubgroupHandle& H, const SubgroupHandle& K);

}  // namespace sylsync
