#include "sylsync/dense_group.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <deque>
#include <string>

#include "sylsync/arith.hpp"
#include "sylsync/bsgs.hpp"
#include "sylsync/error.hpp"

namespace sylsync {

std::size_t MaskHash::operator()(const Mask& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ m.size();
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(m, std::back_inserter(blocks));
  for (std::uint64_t b : blocks) {
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::size_t DenseGroup::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t x = k.lo ^ (k.hi * 0x9E3779B97F4A7C15ULL);
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return static_cast<std::size_t>(x);
}

template <class ImageOf>
DenseGroup::Key DenseGroup::make_key(ImageOf&& image_of) const {
  Key key;
  unsigned shift = 0;
  for (Point b : base_) {
    std::uint64_t v = image_of(b);
    if (shift < 64) {
      key.lo |= v << shift;
      if (shift + bits_ > 64) key.hi |= v >> (64 - shift);
    } else {
      key.hi |= v << (shift - 64);
    }
    shift += bits_;
  }
  return key;
}

DenseGroup DenseGroup::from_elements(std::size_t degree, std::vector<Permutation> elements,
                                     const std::vector<Permutation>& generators) {
  DenseGroup D;
  D.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw Error(Errc::invalid_argument, "element list must contain the identity");
  D.order_ = elements.size();

  D.images_.resize(D.order_ * degree);
  for (std::size_t i = 0; i < D.order_; ++i) {
    if (elements[i].degree() != degree) throw Error(Errc::degree_mismatch, "element degree");
    std::copy(elements[i].images().begin(), elements[i].images().end(),
              D.images_.begin() + static_cast<std::ptrdiff_t>(i * degree));
  }

  // Greedy base: keep adding the first point moved by some element that
  // fixes all chosen points.
  std::vector<std::size_t> alive;
  for (std::size_t i = 1; i < D.order_; ++i) alive.push_back(i);
  while (!alive.empty()) {
    Point b = static_cast<Point>(elements[alive.front()].first_moved_point());
    D.base_.push_back(b);
    std::erase_if(alive, [&](std::size_t i) { return elements[i][b] != b; });
  }
  D.bits_ = degree <= 1 ? 1u : static_cast<unsigned>(std::bit_width(degree - 1));
  if (D.base_.size() * D.bits_ > 128)
    throw Error(Errc::invalid_argument, "base too long for the dense index key");

  D.index_.reserve(D.order_ * 2);
  for (std::size_t i = 0; i < D.order_; ++i) {
    const Permutation& g = elements[i];
    D.index_.emplace(D.make_key([&](Point b) { return g[b]; }), static_cast<Index>(i));
  }
  if (D.index_.size() != D.order_) throw Error(Errc::invalid_argument, "base does not separate");

  D.inverse_.resize(D.order_);
  D.element_orders_.resize(D.order_);
  for (std::size_t i = 0; i < D.order_; ++i) {
    const Permutation& g = elements[i];
    D.inverse_[i] = *D.find(g.inverse());
    D.element_orders_[i] = g.order();
  }
  D.primes_ = prime_divisors(D.order_);

  if (!generators.empty()) {
    for (const auto& g : generators) {
      if (g.is_identity()) continue;
      auto idx = D.find(g);
      if (!idx) throw Error(Errc::invalid_argument, "generator outside the element list");
      if (std::find(D.generators_.begin(), D.generators_.end(), *idx) == D.generators_.end())
        D.generators_.push_back(*idx);
    }
  } else {
    D.generators_ = generating_set(whole_group(D));
  }

  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t v) {
    for (int k = 0; k < 2; ++k) {
      h ^= (v >> (8 * k)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  feed(degree);
  for (Point p : D.images_) feed(p);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  D.hash_ = buf;
  return D;
}

DenseGroup DenseGroup::materialize(const GenSet& gens, std::size_t cap) {
  BsgsGroup bsgs = BsgsGroup::build(gens);
  if (bsgs.order() > cap)
    throw Error(Errc::order_exceeds_cap,
                "order " + bsgs.order().str() + " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(bsgs.order()));
  bsgs.for_each_element([&](const Permutation& g) {
    elements.push_back(g);
    return true;
  });
  return from_elements(gens.degree, std::move(elements), gens.gens);
}

Permutation DenseGroup::element(Index i) const {
  auto im = images(i);
  return Permutation::unchecked(std::vector<Point>(im.begin(), im.end()));
}

Index DenseGroup::mul(Index a, Index b) const {
  const Point* ia = images_.data() + static_cast<std::size_t>(a) * degree_;
  const Point* ib = images_.data() + static_cast<std::size_t>(b) * degree_;
  return index_.find(make_key([&](Point x) { return ib[ia[x]]; }))->second;
}

Index DenseGroup::pow(Index a, std::uint64_t k) const {
  Index result = identity_index;
  Index base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Index> DenseGroup::find(const Permutation& g) const {
  if (g.degree() != degree_) return std::nullopt;
  auto it = index_.find(make_key([&](Point x) { return g[x]; }));
  if (it == index_.end()) return std::nullopt;
  auto im = images(it->second);
  if (!std::equal(im.begin(), im.end(), g.images().begin())) return std::nullopt;
  return it->second;
}

Index DenseGroup::index_of(const Permutation& g) const {
  auto idx = find(g);
  if (!idx) throw Error(Errc::invalid_argument, "permutation " + g.to_cycle_string() + " is not in the group");
  return *idx;
}

std::vector<Index> SubgroupHandle::elements() const {
  std::vector<Index> out;
  out.reserve(order_);
  for (auto i = mask_.find_first(); i != Mask::npos; i = mask_.find_next(i))
    out.push_back(static_cast<Index>(i));
  return out;
}

SubgroupHandle trivial_subgroup(const DenseGroup& D) {
  Mask m(D.order());
  m.set(DenseGroup::identity_index);
  return SubgroupHandle(D, std::move(m));
}

SubgroupHandle whole_group(const DenseGroup& D) {
  Mask m(D.order());
  m.set();
  return SubgroupHandle(D, std::move(m));
}

namespace {

// Closes `mask` (already containing `members`) under right multiplication by
// `gens`.
void close_under(const DenseGroup& D, Mask& mask, std::vector<Index>& members,
                 std::span<const Index> gens) {
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (Index s : gens) {
      Index y = D.mul(members[k], s);
      if (!mask.test(y)) {
        mask.set(y);
        members.push_back(y);
      }
    }
  }
}

}  // namespace

SubgroupHandle subgroup_closure(const DenseGroup& D, std::span<const Index> seeds) {
  Mask mask(D.order());
  mask.set(DenseGroup::identity_index);
  std::vector<Index> members{DenseGroup::identity_index};
  std::vector<Index> gens;
  for (Index s : seeds)
    if (s != DenseGroup::identity_index) gens.push_back(s);
  close_under(D, mask, members, gens);
  return SubgroupHandle(D, std::move(mask));
}

SubgroupHandle subgroup_closure(const DenseGroup& D, std::initializer_list<Index> seeds) {
  return subgroup_closure(D, std::span<const Index>(seeds.begin(), seeds.size()));
}

SubgroupHandle extend(const SubgroupHandle& H, std::span<const Index> extra) {
  const DenseGroup& D = H.parent();
  bool inside = std::all_of(extra.begin(), extra.end(), [&](Index x) { return H.contains(x); });
  if (inside) return H;
  std::vector<Index> gens = generating_set(H);
  gens.insert(gens.end(), extra.begin(), extra.end());
  // existing members are closed under H's generators; a fresh pass keeps it simple
  return subgroup_closure(D, gens);
}

SubgroupHandle intersect(const SubgroupHandle& A, const SubgroupHandle& B) {
  return SubgroupHandle(A.parent(), A.mask() & B.mask());
}

SubgroupHandle join(const SubgroupHandle& A, const SubgroupHandle& B) {
  if (B.is_subgroup_of(A)) return A;
  if (A.is_subgroup_of(B)) return B;
  std::vector<Index> gens = generating_set(A);
  auto more = generating_set(B);
  gens.insert(gens.end(), more.begin(), more.end());
  return subgroup_closure(A.parent(), gens);
}

std::vector<Index> generating_set(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  std::vector<Index> gens;
  Mask reached(D.order());
  reached.set(DenseGroup::identity_index);
  std::vector<Index> members{DenseGroup::identity_index};
  std::size_t count = 1;
  for (auto i = H.mask().find_first(); i != Mask::npos && count < H.order();
       i = H.mask().find_next(i)) {
    if (reached.test(i)) continue;
    gens.push_back(static_cast<Index>(i));
    reached.set(i);
    members.push_back(static_cast<Index>(i));
    close_under(D, reached, members, gens);
    count = members.size();
  }
  return gens;
}

SubgroupHandle conjugate(const SubgroupHandle& H, Index g) {
  const DenseGroup& D = H.parent();
  Mask m(D.order());
  Index gi = D.inv(g);
  for (auto i = H.mask().find_first(); i != Mask::npos; i = H.mask().find_next(i))
    m.set(D.mul(D.mul(gi, static_cast<Index>(i)), g));
  return SubgroupHandle(D, std::move(m));
}

bool is_closed(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  if (!H.contains(DenseGroup::identity_index)) return false;
  auto elems = H.elements();
  for (Index a : elems) {
    if (!H.contains(D.inv(a))) return false;
    for (Index b : elems)
      if (!H.contains(D.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  auto gens = generating_set(H);
  for (Index g : D.generators())
    for (Index s : gens)
      if (!H.contains(D.conj(s, g))) return false;
  return true;
}

bool is_abelian(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  auto gens = generating_set(H);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (D.mul(gens[i], gens[j]) != D.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_nilpotent(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  for (std::uint64_t p : prime_divisors(H.order())) {
    std::size_t count = 0;
    for (auto i = H.mask().find_first(); i != Mask::npos; i = H.mask().find_next(i))
      if (is_prime_power_of(D.element_order(static_cast<Index>(i)), p)) ++count;
    if (count != p_part(H.order(), p)) return false;
  }
  return true;
}

namespace {

// Shared shape of normalizer and centralizer: the accepted set is a subgroup
// containing `start`, and rejection of g rejects the whole coset N*g.
template <class Accept>
SubgroupHandle grow_subgroup(const DenseGroup& D, SubgroupHandle start, Accept&& accept) {
  SubgroupHandle N = std::move(start);
  Mask rejected(D.order());
  for (Index g = 0; g < D.order(); ++g) {
    if (N.contains(g) || rejected.test(g)) continue;
    if (accept(g)) {
      Index extra[] = {g};
      N = extend(N, extra);
    } else {
      for (auto n = N.mask().find_first(); n != Mask::npos; n = N.mask().find_next(n))
        rejected.set(D.mul(static_cast<Index>(n), g));
    }
  }
  return N;
}

}  // namespace

SubgroupHandle normalizer(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  auto gens = generating_set(H);
  return grow_subgroup(D, H, [&](Index g) {
    for (Index s : gens)
      if (!H.contains(D.conj(s, g))) return false;
    return true;
  });
}

SubgroupHandle centralizer(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  auto gens = generating_set(H);
  return grow_subgroup(D, trivial_subgroup(D), [&](Index g) {
    for (Index s : gens)
      if (D.mul(s, g) != D.mul(g, s)) return false;
    return true;
  });
}

SubgroupHandle center(const DenseGroup& D) { return centralizer(whole_group(D)); }

std::pair<SubgroupHandle, SubgroupHandle> centralizer_and_center(const DenseGroup& D,
                                                                 const SubgroupHandle& H) {
  return {centralizer(H), center(D)};
}

SubgroupHandle core(const SubgroupHandle& H) {
  const DenseGroup& D = H.parent();
  Mask result = H.mask();
  Mask covered(D.order());
  auto elems = H.elements();
  for (Index g = 0; g < D.order(); ++g) {
    if (covered.test(g)) continue;
    for (Index h : elems) covered.set(D.mul(h, g));
    if (g != DenseGroup::identity_index) result &= conjugate(H, g).mask();
  }
  return SubgroupHandle(D, std::move(result));
}

SubgroupHandle normal_closure(const DenseGroup& D, std::span<const Index> seeds) {
  // the normal closure is generated by the conjugacy-class orbits of the seeds
  Mask seen(D.order());
  std::vector<Index> orbit;
  for (Index s : seeds) {
    if (seen.test(s)) continue;
    seen.set(s);
    orbit.push_back(s);
  }
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (Index g : D.generators()) {
      Index y = D.conj(orbit[k], g);
      if (!seen.test(y)) {
        seen.set(y);
        orbit.push_back(y);
      }
    }
  }
  return subgroup_closure(D, orbit);
}

QuotientMap quotient(const DenseGroup& D, const SubgroupHandle& N) {
  if (!is_normal(N)) throw Error(Errc::not_normal, "quotient by a non-normal subgroup");
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(D.order(), none);
  std::vector<Index> reps;
  auto kernel = N.elements();
  for (Index g = 0; g < D.order(); ++g) {
    if (label[g] != none) continue;
    for (Index n : kernel) label[D.mul(n, g)] = reps.size();
    reps.push_back(g);
  }
  const std::size_t m = reps.size();
  std::vector<Permutation> perms;
  perms.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<Point> images(m);
    for (std::size_t d = 0; d < m; ++d) images[d] = static_cast<Point>(label[D.mul(reps[d], reps[c])]);
    perms.push_back(Permutation::unchecked(std::move(images)));
  }
  std::vector<Permutation> gens;
  for (Index g : D.generators()) gens.push_back(perms[label[g]]);

  QuotientMap qm;
  qm.source = &D;
  qm.kernel = N;
  auto Q = std::make_shared<DenseGroup>(DenseGroup::from_elements(m, perms, gens));
  std::vector<Index> coset_to_q(m);
  for (std::size_t c = 0; c < m; ++c) coset_to_q[c] = Q->index_of(perms[c]);
  qm.projection.resize(D.order());
  for (Index g = 0; g < D.order(); ++g) qm.projection[g] = coset_to_q[label[g]];
  qm.quotient = std::move(Q);
  return qm;
}

SubgroupHandle QuotientMap::image(const SubgroupHandle& H) const {
  Mask m(quotient->order());
  for (auto i = H.mask().find_first(); i != Mask::npos; i = H.mask().find_next(i))
    m.set(projection[i]);
  return SubgroupHandle(*quotient, std::move(m));
}

SubgroupHandle QuotientMap::preimage(const SubgroupHandle& Hbar) const {
  Mask m(source->order());
  for (Index g = 0; g < source->order(); ++g)
    if (Hbar.contains(projection[g])) m.set(g);
  return SubgroupHandle(*source, std::move(m));
}

std::vector<std::vector<Index>> conjugacy_classes(const DenseGroup& D) {
  std::vector<std::vector<Index>> classes;
  Mask seen(D.order());
  for (Index x = 0; x < D.order(); ++x) {
    if (seen.test(x)) continue;
    std::vector<Index> cls{x};
    seen.set(x);
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (Index g : D.generators()) {
        Index y = D.conj(cls[k], g);
        if (!seen.test(y)) {
          seen.set(y);
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

SubgroupHandle pi_core(const DenseGroup& D, const std::vector<std::uint64_t>& pi) {
  // x lies in O_pi(D) iff the normal closure of x is a pi-group; the classes
  // passing that test make up O_pi exactly.
  std::vector<Index> members;
  for (const auto& cls : conjugacy_classes(D)) {
    Index x = cls.front();
    if (x == DenseGroup::identity_index) continue;
    if (!is_pi_number(D.element_order(x), pi)) continue;
    SubgroupHandle closure = subgroup_closure(D, cls);
    if (is_pi_number(closure.order(), pi)) members.insert(members.end(), cls.begin(), cls.end());
  }
  return subgroup_closure(D, members);
}

SubgroupHandle hypercenter(const DenseGroup& D) {
  SubgroupHandle Z = trivial_subgroup(D);
  for (;;) {
    Mask next(D.order());
    for (Index g = 0; g < D.order(); ++g) {
      bool central = true;
      for (Index s : D.generators()) {
        if (!Z.contains(D.commutator(g, s))) {
          central = false;
          break;
        }
      }
      if (central) next.set(g);
    }
    if (next == Z.mask()) return Z;
    Z = SubgroupHandle(D, std::move(next));
  }
}

std::vector<Index> right_coset(const SubgroupHandle& H, Index g) {
  std::vector<Index> out;
  for (auto h = H.mask().find_first(); h != Mask::npos; h = H.mask().find_next(h))
    out.push_back(H.parent().mul(static_cast<Index>(h), g));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t product_size(const SubgroupHandle& H, const SubgroupHandle& K) {
  return H.order() * K.order() / intersect(H, K).order();
}

}  // namespace sylsync
