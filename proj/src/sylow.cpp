#include "sylsync/sylow.hpp"

#include <algorithm>

#include "sylsync/arith.hpp"
#include "sylsync/error.hpp"

namespace sylsync {

std::size_t SylowSystem::act(std::size_t j, Index g) const {
  const DenseGroup& D = representative.parent();
  return conjugate_of[D.mul(transversal[j], g)];
}

SubgroupHandle SylowSystem::normalizer_of(std::size_t j) const {
  const DenseGroup& D = representative.parent();
  Mask m(D.order());
  for (Index g = 0; g < D.order(); ++g)
    if (act(j, g) == j) m.set(g);
  return SubgroupHandle(D, std::move(m));
}

SylowSystem sylow_dense(const DenseGroup& D, std::uint64_t p) {
  SylowSystem S;
  S.prime = p;
  const std::size_t target = p_part(D.order(), p);

  SubgroupHandle H = trivial_subgroup(D);
  while (H.order() < target) {
    SubgroupHandle N = normalizer(H);
    Index pick = 0;
    bool found = false;
    for (auto g = N.mask().find_first(); g != Mask::npos; g = N.mask().find_next(g)) {
      if (H.contains(static_cast<Index>(g))) continue;
      if (is_prime_power_of(D.element_order(static_cast<Index>(g)), p)) {
        pick = static_cast<Index>(g);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::invalid_argument, "Sylow ascent stalled");
    Index extra[] = {pick};
    H = extend(H, extra);
  }
  S.representative = H;
  S.normalizer = normalizer(H);

  const std::uint32_t unset = UINT32_MAX;
  S.conjugate_of.assign(D.order(), unset);
  auto norm = S.normalizer.elements();
  for (Index g = 0; g < D.order(); ++g) {
    if (S.conjugate_of[g] != unset) continue;
    auto j = static_cast<std::uint32_t>(S.conjugates.size());
    S.conjugates.push_back(g == DenseGroup::identity_index ? H : conjugate(H, g));
    S.transversal.push_back(g);
    for (Index n : norm) S.conjugate_of[D.mul(n, g)] = j;
  }

  Mask core_mask = H.mask();
  for (const auto& P : S.conjugates) core_mask &= P.mask();
  S.p_core = SubgroupHandle(D, std::move(core_mask));
  S.is_normal = S.conjugates.size() == 1;
  return S;
}

namespace {

// Sylow p-subgroup of Sym(p^k) on points offset .. offset + p^k - 1:
// generator l shifts the p blocks of size p^l inside the first block of
// size p^(l+1).
void wreath_generators(std::size_t n, std::size_t offset, std::uint64_t p, unsigned k,
                       std::vector<Permutation>& out) {
  std::size_t block = 1;
  for (unsigned l = 0; l < k; ++l) {
    std::size_t next = block * p;
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(x);
    for (std::size_t x = 0; x < next; ++x)
      images[offset + x] = static_cast<Point>(offset + (x + block) % next);
    out.push_back(Permutation(std::move(images)));
    block = next;
  }
}

}  // namespace

GenSet sym_sylow(std::size_t n, std::uint64_t p) {
  if (n < 1) throw Error(Errc::invalid_argument, "sym_sylow needs n >= 1");
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "sym_sylow needs a prime");
  GenSet out{n, {}};
  std::size_t offset = 0;
  std::size_t rest = n;
  // digits from the most significant end so big blocks come first
  std::vector<std::size_t> digits;
  for (std::size_t m = rest; m > 0; m /= p) digits.push_back(m % p);
  std::size_t power = 1;
  for (std::size_t i = 1; i < digits.size(); ++i) power *= p;
  for (std::size_t i = digits.size(); i-- > 0;) {
    for (std::size_t c = 0; c < digits[i]; ++c) {
      wreath_generators(n, offset, p, static_cast<unsigned>(i), out.gens);
      offset += power;
    }
    power /= p;
  }
  return out;
}

GenSet even_part_by_schreier(const GenSet& gens) {
  // Schreier generators of the sign kernel for the transversal {1, t}.
  const Permutation* t = nullptr;
  for (const auto& g : gens.gens)
    if (!g.is_even()) {
      t = &g;
      break;
    }
  if (!t) return gens;
  GenSet out{gens.degree, {}};
  Permutation t_inv = t->inverse();
  out.gens.push_back(*t * *t);
  for (const auto& g : gens.gens) {
    if (g.is_even()) {
      out.gens.push_back(g);
      out.gens.push_back(*t * g * t_inv);
    } else {
      out.gens.push_back(g * t_inv);
      out.gens.push_back(*t * g);
    }
  }
  std::erase_if(out.gens, [](const Permutation& g) { return g.is_identity(); });
  return out;
}

GenSet even_part_by_enumeration(const GenSet& gens) {
  BsgsGroup P = BsgsGroup::build(gens);
  bool any_odd = std::any_of(gens.gens.begin(), gens.gens.end(),
                             [](const Permutation& g) { return !g.is_even(); });
  if (!any_odd) return gens;
  const BigInt target = P.order() / 2;
  GenSet out{gens.degree, {}};
  BsgsGroup current = BsgsGroup::build(out);
  P.for_each_element([&](const Permutation& g) {
    if (!g.is_even() || current.contains(g)) return true;
    out.gens.push_back(g);
    current = BsgsGroup::build(out);
    return current.order() != target;
  });
  return out;
}

GenSet alt_sylow(std::size_t n, std::uint64_t p) {
  if (n < 3) throw Error(Errc::invalid_argument, "alt_sylow needs n >= 3");
  GenSet S = sym_sylow(n, p);
  if (p != 2) return S;
  if (BigInt(1) << legendre(n, 2) <= kDenseEvenExtractionLimit) return even_part_by_enumeration(S);
  return even_part_by_schreier(S);
}

IntersectionProfile intersection_profile(const DenseGroup& D, const SylowSystem& S) {
  (void)D;
  IntersectionProfile prof;
  prof.prime = S.prime;
  std::vector<std::size_t> which(S.count());
  for (std::size_t j = 0; j < S.count(); ++j) {
    SubgroupHandle I = intersect(S.representative, S.conjugates[j]);
    auto it = std::find(prof.distinct_intersections.begin(), prof.distinct_intersections.end(), I);
    which[j] = static_cast<std::size_t>(it - prof.distinct_intersections.begin());
    if (it == prof.distinct_intersections.end()) prof.distinct_intersections.push_back(std::move(I));
  }
  std::vector<bool> minimal(prof.distinct_intersections.size(), true);
  for (std::size_t a = 0; a < minimal.size(); ++a)
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (a != b && prof.distinct_intersections[b].order() < prof.distinct_intersections[a].order() &&
          prof.distinct_intersections[b].is_subgroup_of(prof.distinct_intersections[a]))
        minimal[a] = false;
  prof.min_order = SIZE_MAX;
  for (std::size_t a = 0; a < minimal.size(); ++a)
    if (minimal[a]) {
      prof.minimal_set.push_back(prof.distinct_intersections[a]);
      prof.min_order = std::min(prof.min_order, prof.distinct_intersections[a].order());
    }
  prof.good.resize(S.count());
  prof.core_hit.resize(S.count());
  for (std::size_t j = 0; j < S.count(); ++j) {
    prof.good[j] = minimal[which[j]];
    prof.core_hit[j] = prof.distinct_intersections[which[j]] == S.p_core;
  }
  return prof;
}

}  // namespace sylsync
