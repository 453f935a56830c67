#pragma once
// The conjugation action of a group on tuples of Sylow subgroups, one for
// each prime whose Sylow subgroup is not normal, and checkers built on it.
//
// Checkers return a Verdict instead of failing: a counterexample carries a
// witness that `replay` can re-verify.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylsync/caps.hpp"
#include "sylsync/dense_group.hpp"
#include "sylsync/sylow.hpp"

namespace sylsync {

enum class Status { verified, counterexample, skipped };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Verdict {
  std::string check;
  Status status = Status::verified;
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json sizes = nlohmann::json::object();
  std::string reason;  // why a check was skipped or failed
};

struct DsContext {
  std::shared_ptr<const DenseGroup> group;
  std::vector<std::uint64_t> rho;                // primes with a non-normal Sylow subgroup
  std::map<std::uint64_t, SylowSystem> systems;  // every prime dividing |G|
  std::map<std::uint64_t, IntersectionProfile> profiles;
  std::uint64_t tuple_space_size = 1;
  Caps caps;
  std::uint64_t seed = 0;

  const DenseGroup& G() const { return *group; }
  const SylowSystem& system(std::uint64_t p) const { return systems.at(p); }
};

DsContext build_context(std::shared_ptr<const DenseGroup> group, const Caps& caps = {},
                        std::uint64_t seed = 0);

/// One conjugate index per prime of rho, in rho's order.
using DsTuple = std::vector<std::size_t>;

nlohmann::json tuple_to_json(const DsContext& ctx, const DsTuple& t);
DsTuple tuple_from_json(const DsContext& ctx, const nlohmann::json& j);
nlohmann::json element_to_json(const DenseGroup& D, Index g);
Index element_from_json(const DenseGroup& D, const nlohmann::json& j);
nlohmann::json subgroup_to_json(const SubgroupHandle& H);
SubgroupHandle subgroup_from_json(const DenseGroup& D, const nlohmann::json& j);

DsTuple act(const DsContext& ctx, const DsTuple& t, Index g);

struct DsOrbits {
  std::vector<std::size_t> sizes;       // aligned with representatives
  std::vector<DsTuple> representatives;  // least tuple of each orbit, in increasing order
  SubgroupHandle kernel;
};

/// Throws Errc::tuple_space_too_large above caps.tuple_space_bound.
DsOrbits ds_orbits(const DsContext& ctx);

/// Elements fixing every tuple.
SubgroupHandle ds_kernel(const DsContext& ctx);

/// Intersection of the normalizers of every Sylow subgroup.
SubgroupHandle sylow_normalizer_intersection(const DsContext& ctx);

struct GammaReport {
  DsTuple tuple;
  std::map<std::uint64_t, Mask> per_prime;
  Mask joint;
  std::map<std::uint64_t, std::size_t> sizes;
  std::size_t joint_size = 0;
  std::optional<Index> witness;  // least element of the joint set
};

/// Good elements x for each coordinate, where P ∩ P^x is inclusion-minimal,
/// and their intersection.
GammaReport gamma(const DsContext& ctx, const DsTuple& tuple);

/// good[k] for conjugates[j] of the p-system: conjugates[j] ∩ conjugates[k]
/// is inclusion-minimal.
std::vector<bool> good_targets(const DsContext& ctx, std::uint64_t p, std::size_t j);
/// hit[k]: conjugates[j] ∩ conjugates[k] equals the p-core.
std::vector<bool> core_targets(const DsContext& ctx, std::uint64_t p, std::size_t j);

/// Tuples to examine for orbit-invariant properties: orbit representatives
/// when the tuple space is small enough, otherwise seeded random tuples.
struct TupleSample {
  std::vector<DsTuple> tuples;
  bool exhaustive = true;
};
TupleSample representative_tuples(const DsContext& ctx);

struct StarReport {
  std::map<std::uint64_t, bool> star_p;
  std::map<std::uint64_t, std::optional<Index>> witness;  // g with P ∩ P^g = O_p(G)
  bool star = true;
};
StarReport check_star(const DsContext& ctx);
Verdict star_verdict(const DsContext& ctx);

Verdict check_baer(const DsContext& ctx);
Verdict check_conjecture_A(const DsContext& ctx);
Verdict check_conjecture_B(const DsContext& ctx);

/// Least x outside every N_G(P_i) of the tuple. When every |P_i : O_p(G)| is
/// at most p, x must also give P_i ∩ P_i^x = O_p(G) for all i.
Verdict check_union_normalizers(const DsContext& ctx, const DsTuple& tuple);
/// check_union_normalizers over representative tuples.
Verdict check_union_theorem(const DsContext& ctx);
/// Whether the normalizers of all non-normal Sylow subgroups cover G.
bool all_normalizer_union(const DsContext& ctx);
Verdict all_normalizer_union_verdict(const DsContext& ctx);

/// Throws Errc::wrong_hypothesis when three or more primes divide |G|.
Verdict check_two_prime_transitivity(const DsContext& ctx);

struct SylowRef {
  std::uint64_t prime = 0;
  std::size_t index = 0;
};
/// Counts x with P1^x = Q1 and P2^x = Q2. Throws Errc::hypothesis_fails
/// unless G = N_G(P1) N_G(P2).
Verdict check_lemsyn(const DsContext& ctx, SylowRef P1, SylowRef P2, SylowRef Q1, SylowRef Q2);

/// Throws Errc::not_a_cover, Errc::redundant or Errc::prime_too_small.
Verdict check_bfs(const DenseGroup& D, const std::vector<SubgroupHandle>& cover, std::uint64_t p);

Verdict check_metanilpotent_sync(const DsContext& ctx);

/// Statements about H ∩ H^x for nilpotent, abelian and Hall subgroups:
/// ito, brodkey, bialostocki, zenkov, mann_fitting, maximal_nilpotent_core,
/// coprime_nilpotent, conjecture_c.
std::vector<Verdict> check_odd_order_suite(const DsContext& ctx);

/// C_K(v) = K ∩ K^v for every v in V. Throws Errc::not_semidirect.
Verdict check_semidirect_centralizer(const DenseGroup& D, const SubgroupHandle& V,
                                     const SubgroupHandle& K);

/// F(G/Z*) = F(G)/Z* where Z* is the hypercenter.
Verdict check_fitting_mod_hypercenter(const DsContext& ctx);
/// For metanilpotent G with F(G) a p-group, p does not divide |G : F(G)|.
Verdict check_metanilpotent_fitting_prime(const DsContext& ctx);

/// Runs a check that needs only the context, by name ("odd_order" runs the
/// whole subgroup suite). Throws Errc::invalid_argument for unknown names.
std::vector<Verdict> run_context_check(const DsContext& ctx, const std::string& name);

/// Re-verifies the witness of a verdict from scratch. Checks whose verdict
/// has no element witness are recomputed and compared.
bool replay(const DsContext& ctx, const Verdict& v);

}  // namespace sylsync
