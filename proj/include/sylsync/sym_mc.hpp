#pragma once
// Probability that a Sylow subgroup P of Sym(n) or Alt(n) meets a random
// conjugate P^g nontrivially, by sampling or by exhausting the group.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylsync/bsgs.hpp"

namespace sylsync {

enum class Family { sym, alt };
std::string to_string(Family f);
Family family_from_string(const std::string& s);

inline constexpr std::uint64_t kSylowEnumerationLimit = std::uint64_t{1} << 22;

/// Limits of the p = 2 probability as n grows, reported for context only.
double limit_constant(Family f);

/// Decides P ∩ P^g = 1 by a depth-first walk over the transversal tree of
/// P, discarding a branch as soon as its fixed base images cannot extend to
/// an element of P^g. Both chains use the full base 0, 1, ..., n-1.
class IntersectionTester {
 public:
  /// Throws Errc::sylow_too_large when |P| exceeds `limit`.
  explicit IntersectionTester(const BsgsGroup& P, std::uint64_t limit = kSylowEnumerationLimit);

  /// True iff P ∩ P^g is trivial.
  bool trivial(const Permutation& g) const;

  const BsgsGroup& group() const noexcept { return P_; }

 private:
  BsgsGroup P_;
};

bool trivial_intersection_test(const BsgsGroup& P, const Permutation& g,
                               std::uint64_t limit = kSylowEnumerationLimit);

/// The ambient group and its standard Sylow p-subgroup.
GenSet family_generators(Family f, std::size_t n);
GenSet family_sylow(Family f, std::size_t n, std::uint64_t p);

struct McEstimate {
  Family family = Family::sym;
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;  // samples g with P ∩ P^g nontrivial
  double estimate = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
  BigInt sylow_order = 1;
  bool exhaustive = false;
};

nlohmann::json to_json(const McEstimate& e);

/// Monte Carlo estimate. Trials are cut into fixed blocks, each with its own
/// stream (seed, block), so the result does not depend on `jobs`.
/// Throws Errc::sylow_too_large.
McEstimate mc_intersection_prob(Family f, std::size_t n, std::uint64_t p, std::uint64_t trials,
                                std::uint64_t seed, unsigned jobs = 1,
                                std::uint64_t limit = kSylowEnumerationLimit);

/// Exact probability by running over every element of the group
/// (trials = |G|, std_error = 0). Meant for n <= 8.
McEstimate exact_intersection_prob(Family f, std::size_t n, std::uint64_t p,
                                   std::uint64_t limit = kSylowEnumerationLimit);

struct UnionBoundReport {
  Family family = Family::sym;
  std::size_t n = 0;
  std::vector<McEstimate> estimates;
  std::vector<std::pair<std::uint64_t, std::string>> gaps;  // primes skipped, with reason
  double sum = 0;
  std::size_t prime_count = 0;  // primes <= n
};

nlohmann::json to_json(const UnionBoundReport& r);

/// Estimates for every prime <= n, or only for `primes` when given.
UnionBoundReport union_bound_report(Family f, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                    const std::vector<std::uint64_t>& primes = {}, unsigned jobs = 1,
                                    std::uint64_t limit = kSylowEnumerationLimit);

struct SyncWitness {
  Family family = Family::sym;
  std::size_t n = 0;
  std::vector<std::uint64_t> primes;
  std::optional<Permutation> x;
  std::uint64_t samples = 0;
};

nlohmann::json to_json(const SyncWitness& w);

/// First uniform x (up to `budget` draws) with P_p ∩ P_p^x = 1 for every
/// listed prime. An empty prime list gives the identity.
SyncWitness sync_search(Family f, std::size_t n, const std::vector<std::uint64_t>& primes,
                        std::uint64_t budget, std::uint64_t seed,
                        std::uint64_t limit = kSylowEnumerationLimit);

/// Re-checks a witness from scratch.
bool verify_sync_witness(const SyncWitness& w, std::uint64_t limit = kSylowEnumerationLimit);

}  // namespace sylsync
