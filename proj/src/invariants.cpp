#include "sylsync/invariants.hpp"

#include "sylsync/sylow.hpp"

namespace sylsync {

namespace {

bool all_sylows_normal(const DenseGroup& D) {
  for (std::uint64_t p : D.primes())
    if (!is_normal(sylow_dense(D, p).representative)) return false;
  return true;
}

}  // namespace

SubgroupHandle fitting_subgroup(const DenseGroup& D) {
  SubgroupHandle F = trivial_subgroup(D);
  for (std::uint64_t p : D.primes()) F = join(F, sylow_dense(D, p).p_core);
  return F;
}

GroupInvariants invariants(const DenseGroup& D) {
  GroupInvariants inv;
  inv.center = center(D);
  inv.hypercenter = hypercenter(D);
  inv.fitting = trivial_subgroup(D);
  inv.is_nilpotent = true;
  for (std::uint64_t p : D.primes()) {
    SylowSystem S = sylow_dense(D, p);
    inv.p_cores.emplace(p, S.p_core);
    inv.fitting = join(inv.fitting, S.p_core);
    if (!S.is_normal) inv.is_nilpotent = false;
  }
  inv.odd_order = D.order() % 2 == 1;
  if (inv.is_nilpotent) {
    inv.is_metanilpotent = true;
  } else {
    QuotientMap q = quotient(D, inv.fitting);
    inv.is_metanilpotent = all_sylows_normal(*q.quotient);
  }
  return inv;
}

}  // namespace sylsync
