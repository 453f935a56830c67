#include "sylsync/ds_action.hpp"

#include <algorithm>
#include <numeric>

#include "sylsync/arith.hpp"
#include "sylsync/error.hpp"
#include "sylsync/invariants.hpp"
#include "sylsync/rng.hpp"
#include "sylsync/subgroups.hpp"

namespace sylsync {

using nlohmann::json;

namespace {

// Witness lists are truncated to this many entries; every stored entry still
// replays.
constexpr std::size_t kMaxWitnesses = 64;

template <class Pred>
Mask mask_where(const DenseGroup& D, Pred&& pred) {
  Mask m(D.order());
  for (Index g = 0; g < D.order(); ++g)
    if (pred(g)) m.set(g);
  return m;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t stream_of(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Verdict make(std::string check, Status s = Status::verified) {
  Verdict v;
  v.check = std::move(check);
  v.status = s;
  return v;
}

Verdict skipped(std::string check, std::string reason) {
  Verdict v = make(std::move(check), Status::skipped);
  v.reason = std::move(reason);
  return v;
}

SubgroupHandle conjugate_normalizer(const SylowSystem& S, std::size_t j) {
  return conjugate(S.normalizer, S.transversal[j]);
}

// |P : O_p(G)| <= p for every prime of rho.
bool small_core_index(const DsContext& ctx) {
  for (std::uint64_t p : ctx.rho) {
    const auto& S = ctx.system(p);
    if (S.representative.order() / S.p_core.order() > p) return false;
  }
  return true;
}

bool core_hits(const DsContext& ctx, const DsTuple& t, Index x) {
  for (std::size_t i = 0; i < ctx.rho.size(); ++i) {
    const auto& S = ctx.system(ctx.rho[i]);
    auto hit = core_targets(ctx, ctx.rho[i], t[i]);
    if (!hit[S.act(t[i], x)]) return false;
  }
  return true;
}

bool outside_normalizers(const DsContext& ctx, const DsTuple& t, Index x) {
  for (std::size_t i = 0; i < ctx.rho.size(); ++i)
    if (ctx.system(ctx.rho[i]).act(t[i], x) == t[i]) return false;
  return true;
}

json sizes_of(const std::vector<std::size_t>& v) { return json(v); }

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "verified") return Status::verified;
  if (s == "counterexample") return Status::counterexample;
  if (s == "skipped") return Status::skipped;
  throw Error(Errc::parse_error, "unknown status '" + s + "'");
}

DsContext build_context(std::shared_ptr<const DenseGroup> group, const Caps& caps, std::uint64_t seed) {
  DsContext ctx;
  ctx.group = std::move(group);
  ctx.caps = caps;
  ctx.seed = seed;
  const DenseGroup& D = *ctx.group;
  for (std::uint64_t p : D.primes()) {
    auto [it, _] = ctx.systems.emplace(p, sylow_dense(D, p));
    ctx.profiles.emplace(p, intersection_profile(D, it->second));
    if (!it->second.is_normal) {
      ctx.rho.push_back(p);
      ctx.tuple_space_size = saturating_mul(ctx.tuple_space_size, it->second.count());
    }
  }
  return ctx;
}

json tuple_to_json(const DsContext& ctx, const DsTuple& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back({{"p", ctx.rho[i]}, {"sylow", t[i]}});
  return out;
}

DsTuple tuple_from_json(const DsContext& ctx, const json& j) {
  if (!j.is_array() || j.size() != ctx.rho.size())
    throw Error(Errc::validation_error, "tuple must have one entry per prime with a non-normal Sylow");
  DsTuple t;
  for (std::size_t i = 0; i < ctx.rho.size(); ++i) {
    if (j[i].at("p").get<std::uint64_t>() != ctx.rho[i])
      throw Error(Errc::validation_error, "tuple primes do not match");
    std::size_t k = j[i].at("sylow").get<std::size_t>();
    if (k >= ctx.system(ctx.rho[i]).count()) throw Error(Errc::validation_error, "Sylow index out of range");
    t.push_back(k);
  }
  return t;
}

json element_to_json(const DenseGroup& D, Index g) {
  json out = json::array();
  for (Point x : D.images(g)) out.push_back(x);
  return out;
}

Index element_from_json(const DenseGroup& D, const json& j) {
  std::vector<Point> images;
  for (const auto& v : j) images.push_back(v.get<Point>());
  if (images.size() != D.degree()) throw Error(Errc::validation_error, "element has the wrong degree");
  auto idx = D.find(Permutation(std::move(images)));
  if (!idx) throw Error(Errc::validation_error, "element is not in the group");
  return *idx;
}

json subgroup_to_json(const SubgroupHandle& H) { return json(H.elements()); }

SubgroupHandle subgroup_from_json(const DenseGroup& D, const json& j) {
  Mask m(D.order());
  for (const auto& v : j) {
    Index i = v.get<Index>();
    if (i >= D.order()) throw Error(Errc::validation_error, "subgroup index out of range");
    m.set(i);
  }
  SubgroupHandle H(D, std::move(m));
  if (!H.contains(DenseGroup::identity_index) || !is_closed(H))
    throw Error(Errc::validation_error, "index list is not a subgroup");
  return H;
}

DsTuple act(const DsContext& ctx, const DsTuple& t, Index g) {
  DsTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = ctx.system(ctx.rho[i]).act(t[i], g);
  return out;
}

SubgroupHandle ds_kernel(const DsContext& ctx) {
  const DenseGroup& D = ctx.G();
  return SubgroupHandle(D, mask_where(D, [&](Index g) {
    for (std::uint64_t p : ctx.rho) {
      const auto& S = ctx.system(p);
      for (std::size_t j = 0; j < S.count(); ++j)
        if (S.act(j, g) != j) return false;
    }
    return true;
  }));
}

SubgroupHandle sylow_normalizer_intersection(const DsContext& ctx) {
  SubgroupHandle out = whole_group(ctx.G());
  for (const auto& [p, S] : ctx.systems)
    for (std::size_t j = 0; j < S.count(); ++j) out = intersect(out, conjugate_normalizer(S, j));
  return out;
}

DsOrbits ds_orbits(const DsContext& ctx) {
  if (ctx.tuple_space_size > ctx.caps.tuple_space_bound)
    throw Error(Errc::tuple_space_too_large, "tuple space " + std::to_string(ctx.tuple_space_size) +
                                                 " exceeds bound " +
                                                 std::to_string(ctx.caps.tuple_space_bound));
  const DenseGroup& D = ctx.G();
  const std::size_t r = ctx.rho.size();
  std::vector<std::size_t> radix(r), stride(r);
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    radix[i] = ctx.system(ctx.rho[i]).count();
    stride[i] = total;
    total *= radix[i];
  }
  // action tables of the group generators on each coordinate
  const auto& gens = D.generators();
  std::vector<std::vector<std::vector<std::size_t>>> table(gens.size(), std::vector<std::vector<std::size_t>>(r));
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t i = 0; i < r; ++i) {
      const auto& S = ctx.system(ctx.rho[i]);
      for (std::size_t j = 0; j < radix[i]; ++j) table[s][i].push_back(S.act(j, gens[s]));
    }
  auto decode = [&](std::size_t code) {
    DsTuple t(r);
    for (std::size_t i = 0; i < r; ++i) t[i] = (code / stride[i]) % radix[i];
    return t;
  };

  DsOrbits out;
  std::vector<bool> seen(total, false);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      DsTuple t = decode(queue[q]);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        std::size_t code = 0;
        for (std::size_t i = 0; i < r; ++i) code += table[s][i][t[i]] * stride[i];
        if (!seen[code]) {
          seen[code] = true;
          queue.push_back(code);
        }
      }
    }
    out.representatives.push_back(decode(start));
    out.sizes.push_back(queue.size());
  }
  out.kernel = ds_kernel(ctx);
  return out;
}

std::vector<bool> good_targets(const DsContext& ctx, std::uint64_t p, std::size_t j) {
  const auto& S = ctx.system(p);
  const auto& good = ctx.profiles.at(p).good;
  Index tinv = ctx.G().inv(S.transversal[j]);
  std::vector<bool> out(S.count());
  for (std::size_t k = 0; k < S.count(); ++k) out[k] = good[S.act(k, tinv)];
  return out;
}

std::vector<bool> core_targets(const DsContext& ctx, std::uint64_t p, std::size_t j) {
  const auto& S = ctx.system(p);
  const auto& hit = ctx.profiles.at(p).core_hit;
  Index tinv = ctx.G().inv(S.transversal[j]);
  std::vector<bool> out(S.count());
  for (std::size_t k = 0; k < S.count(); ++k) out[k] = hit[S.act(k, tinv)];
  return out;
}

GammaReport gamma(const DsContext& ctx, const DsTuple& tuple) {
  const DenseGroup& D = ctx.G();
  if (tuple.size() != ctx.rho.size()) throw Error(Errc::invalid_argument, "tuple length differs from r");
  GammaReport out;
  out.tuple = tuple;
  out.joint = Mask(D.order());
  out.joint.set();
  for (std::size_t i = 0; i < ctx.rho.size(); ++i) {
    std::uint64_t p = ctx.rho[i];
    const auto& S = ctx.system(p);
    auto good = good_targets(ctx, p, tuple[i]);
    // Γ is the union of the cosets N(P)x whose target P^x is good.
    Mask m = mask_where(D, [&](Index x) { return good[S.act(tuple[i], x)]; });
    out.sizes[p] = m.count();
    out.joint &= m;
    out.per_prime.emplace(p, std::move(m));
  }
  out.joint_size = out.joint.count();
  if (out.joint_size) out.witness = static_cast<Index>(out.joint.find_first());
  return out;
}

TupleSample representative_tuples(const DsContext& ctx) {
  TupleSample out;
  if (ctx.tuple_space_size <= ctx.caps.tuple_space_bound) {
    out.tuples = ds_orbits(ctx).representatives;
    return out;
  }
  out.exhaustive = false;
  RngStream rng(ctx.seed, stream_of(ctx.G().content_hash()));
  for (std::size_t s = 0; s < ctx.caps.sampled_tuples; ++s) {
    DsTuple t;
    for (std::uint64_t p : ctx.rho) t.push_back(rng.below(ctx.system(p).count()));
    out.tuples.push_back(std::move(t));
  }
  return out;
}

StarReport check_star(const DsContext& ctx) {
  StarReport out;
  for (const auto& [p, S] : ctx.systems) {
    const auto& hit = ctx.profiles.at(p).core_hit;
    std::optional<Index> w;
    for (std::size_t k = 0; k < S.count() && !w; ++k)
      if (hit[k]) w = S.transversal[k];
    out.star_p[p] = w.has_value();
    out.witness[p] = w;
    out.star = out.star && w.has_value();
  }
  return out;
}

Verdict star_verdict(const DsContext& ctx) {
  Verdict v = make("star");
  StarReport rep = check_star(ctx);
  v.sizes["star"] = rep.star;
  for (const auto& [p, S] : ctx.systems) {
    std::string ps = std::to_string(p);
    v.sizes["star_" + ps] = rep.star_p[p];
    v.sizes["o_" + ps + "_order"] = S.p_core.order();
    v.sizes["min_intersection_order_" + ps] = ctx.profiles.at(p).min_order;
    if (rep.witness[p]) v.witness[ps] = element_to_json(ctx.G(), *rep.witness[p]);
  }
  return v;
}

Verdict check_baer(const DsContext& ctx) {
  Verdict v = make("baer");
  const DenseGroup& D = ctx.G();
  auto Z = hypercenter(D);
  auto N = sylow_normalizer_intersection(ctx);
  auto K = ds_kernel(ctx);
  v.sizes = {{"hypercenter", Z.order()}, {"normalizer_intersection", N.order()}, {"kernel", K.order()}};
  bool ok = Z == N && N == K;
  if (D.order() <= ctx.caps.enumeration_cap) {
    auto maxnil = maximal_nilpotent_subgroups(enumerate_subgroups(D, ctx.caps.enumeration_cap));
    SubgroupHandle M = whole_group(D);
    for (const auto& H : maxnil) M = intersect(M, H);
    v.sizes["maximal_nilpotent_intersection"] = M.order();
    ok = ok && M == Z;
  }
  if (!ok) {
    v.status = Status::counterexample;
    v.reason = "characterizations of the hypercenter disagree";
  }
  return v;
}

Verdict check_conjecture_A(const DsContext& ctx) {
  Verdict v = make("conjecture_a");
  TupleSample sample = representative_tuples(ctx);
  json entries = json::array();
  std::size_t min_joint = ctx.G().order();
  for (const auto& t : sample.tuples) {
    GammaReport g = gamma(ctx, t);
    min_joint = std::min(min_joint, g.joint_size);
    if (!g.witness) {
      v.status = Status::counterexample;
      v.reason = "empty set of good elements";
      v.witness = {{"tuple", tuple_to_json(ctx, t)}};
      break;
    }
    if (entries.size() < kMaxWitnesses)
      entries.push_back({{"tuple", tuple_to_json(ctx, t)}, {"x", element_to_json(ctx.G(), *g.witness)}});
  }
  if (v.status == Status::verified) v.witness = {{"tuples", entries}};
  v.sizes = {{"r", ctx.rho.size()},
             {"tuples_checked", sample.tuples.size()},
             {"exhaustive", sample.exhaustive},
             {"min_joint_size", min_joint},
             {"order", ctx.G().order()}};
  return v;
}

Verdict check_conjecture_B(const DsContext& ctx) {
  if (!check_star(ctx).star) return skipped("conjecture_b", "group does not have (*)");
  Verdict v = make("conjecture_b");
  TupleSample sample = representative_tuples(ctx);
  json entries = json::array();
  for (const auto& t : sample.tuples) {
    std::optional<Index> found;
    for (Index x = 0; x < ctx.G().order() && !found; ++x)
      if (core_hits(ctx, t, x)) found = x;
    if (!found) {
      v.status = Status::counterexample;
      v.reason = "no simultaneous x with P ∩ P^x = O_p(G)";
      v.witness = {{"tuple", tuple_to_json(ctx, t)}};
      break;
    }
    if (entries.size() < kMaxWitnesses)
      entries.push_back({{"tuple", tuple_to_json(ctx, t)}, {"x", element_to_json(ctx.G(), *found)}});
  }
  if (v.status == Status::verified) v.witness = {{"tuples", entries}};
  v.sizes = {{"tuples_checked", sample.tuples.size()}, {"exhaustive", sample.exhaustive}};
  return v;
}

Verdict check_union_normalizers(const DsContext& ctx, const DsTuple& tuple) {
  Verdict v = make("union_normalizers");
  const DenseGroup& D = ctx.G();
  std::optional<Index> x;
  std::size_t union_size = 0;
  for (Index g = 0; g < D.order(); ++g) {
    if (outside_normalizers(ctx, tuple, g)) {
      if (!x) x = g;
    } else {
      ++union_size;
    }
  }
  bool hyp = small_core_index(ctx);
  v.sizes = {{"union_size", union_size}, {"order", D.order()}, {"corollary_hypothesis", hyp}};
  v.witness = {{"tuple", tuple_to_json(ctx, tuple)}};
  if (!x) {
    v.status = Status::counterexample;
    v.reason = "the normalizers cover the group";
    return v;
  }
  v.witness["x"] = element_to_json(D, *x);
  if (hyp) {
    bool holds = core_hits(ctx, tuple, *x);
    v.sizes["corollary_holds"] = holds;
    if (!holds) {
      v.status = Status::counterexample;
      v.reason = "witness misses O_p(G) although every |P : O_p(G)| <= p";
    }
  }
  return v;
}

Verdict check_union_theorem(const DsContext& ctx) {
  Verdict v = make("union_normalizers");
  TupleSample sample = representative_tuples(ctx);
  json entries = json::array();
  std::size_t max_union = 0;
  bool hyp = small_core_index(ctx);
  for (const auto& t : sample.tuples) {
    Verdict one = check_union_normalizers(ctx, t);
    max_union = std::max<std::size_t>(max_union, one.sizes["union_size"].get<std::size_t>());
    if (one.status != Status::verified) {
      one.sizes["tuples_checked"] = sample.tuples.size();
      return one;
    }
    if (entries.size() < kMaxWitnesses) entries.push_back(one.witness);
  }
  v.witness = {{"tuples", entries}};
  v.sizes = {{"tuples_checked", sample.tuples.size()},
             {"exhaustive", sample.exhaustive},
             {"max_union_size", max_union},
             {"order", ctx.G().order()},
             {"corollary_hypothesis", hyp}};
  return v;
}

bool all_normalizer_union(const DsContext& ctx) {
  Mask m(ctx.G().order());
  for (std::uint64_t p : ctx.rho) {
    const auto& S = ctx.system(p);
    for (std::size_t j = 0; j < S.count(); ++j) m |= conjugate_normalizer(S, j).mask();
  }
  return m.all();
}

Verdict all_normalizer_union_verdict(const DsContext& ctx) {
  Verdict v = make("all_normalizer_union");
  std::size_t n = 0;
  for (std::uint64_t p : ctx.rho) n += ctx.system(p).count();
  v.sizes = {{"covers", all_normalizer_union(ctx)}, {"normalizers", n}};
  return v;
}

Verdict check_two_prime_transitivity(const DsContext& ctx) {
  if (ctx.G().primes().size() > 2)
    throw Error(Errc::wrong_hypothesis, "order has " + std::to_string(ctx.G().primes().size()) +
                                            " prime divisors");
  if (ctx.tuple_space_size > ctx.caps.tuple_space_bound)
    return skipped("two_prime_transitivity", "tuple space exceeds bound");
  Verdict v = make("two_prime_transitivity");
  DsOrbits orb = ds_orbits(ctx);
  auto sizes = orb.sizes;
  std::sort(sizes.begin(), sizes.end());
  v.sizes = {{"orbit_sizes", sizes_of(sizes)}, {"tuple_space_size", ctx.tuple_space_size}};
  if (orb.sizes.size() != 1) {
    v.status = Status::counterexample;
    v.reason = "action on Sylow tuples is not transitive";
    v.witness = {{"tuples", {tuple_to_json(ctx, orb.representatives[0]), tuple_to_json(ctx, orb.representatives[1])}}};
  }
  return v;
}

Verdict check_lemsyn(const DsContext& ctx, SylowRef P1, SylowRef P2, SylowRef Q1, SylowRef Q2) {
  if (P1.prime == P2.prime || Q1.prime != P1.prime || Q2.prime != P2.prime)
    throw Error(Errc::invalid_argument, "need Sylow subgroups for two distinct primes");
  const DenseGroup& D = ctx.G();
  const auto& S1 = ctx.system(P1.prime);
  const auto& S2 = ctx.system(P2.prime);
  for (auto [S, r] : {std::pair{&S1, P1}, {&S2, P2}, {&S1, Q1}, {&S2, Q2}})
    if (r.index >= S->count()) throw Error(Errc::invalid_argument, "Sylow index out of range");
  auto N1 = conjugate_normalizer(S1, P1.index);
  auto N2 = conjugate_normalizer(S2, P2.index);
  if (product_size(N1, N2) != D.order())
    throw Error(Errc::hypothesis_fails, "G is not N_G(P1) N_G(P2)");
  std::size_t count = 0;
  for (Index x = 0; x < D.order(); ++x)
    if (S1.act(P1.index, x) == Q1.index && S2.act(P2.index, x) == Q2.index) ++count;
  std::size_t bound = intersect(N1, N2).order();
  Verdict v = make("lemsyn", count >= bound ? Status::verified : Status::counterexample);
  auto ref = [](SylowRef r) { return json{{"p", r.prime}, {"sylow", r.index}}; };
  v.witness = {{"P1", ref(P1)}, {"P2", ref(P2)}, {"Q1", ref(Q1)}, {"Q2", ref(Q2)}};
  v.sizes = {{"count", count}, {"bound", bound}};
  return v;
}

Verdict check_bfs(const DenseGroup& D, const std::vector<SubgroupHandle>& cover, std::uint64_t p) {
  const std::size_t n = cover.size();
  Mask all(D.order());
  for (const auto& H : cover) {
    if (H.is_whole()) throw Error(Errc::not_a_cover, "cover members must be proper subgroups");
    all |= H.mask();
  }
  if (!all.all()) throw Error(Errc::not_a_cover, "subgroups do not cover the group");
  for (std::size_t i = 0; i < n; ++i) {
    Mask rest(D.order());
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) rest |= cover[k].mask();
    if (rest.all()) throw Error(Errc::redundant, "member " + std::to_string(i) + " can be removed");
  }
  if (!is_prime(p) || p < n)
    throw Error(Errc::prime_too_small, "prime " + std::to_string(p) + " is smaller than " + std::to_string(n));
  Verdict v = make("bfs");
  Mask meet(D.order());
  meet.set();
  for (const auto& H : cover) meet &= H.mask();
  std::size_t p_elements = 0;
  for (Index g = 1; g < D.order(); ++g) {
    if (!is_prime_power_of(D.element_order(g), p)) continue;
    ++p_elements;
    if (!meet.test(g) && v.status == Status::verified) {
      v.status = Status::counterexample;
      v.reason = "a p-element lies outside some member";
      v.witness["x"] = element_to_json(D, g);
    }
  }
  json members = json::array();
  for (const auto& H : cover) members.push_back(subgroup_to_json(H));
  v.witness["cover"] = members;
  v.witness["p"] = p;
  v.sizes = {{"members", n}, {"p", p}, {"p_elements", p_elements}, {"vacuous", p_elements == 0}};
  return v;
}

Verdict check_metanilpotent_sync(const DsContext& ctx) {
  const DenseGroup& D = ctx.G();
  if (D.order() % 2 == 0) return skipped("metanilpotent_sync", "even order");
  auto inv = invariants(D);
  if (!inv.is_metanilpotent) return skipped("metanilpotent_sync", "not metanilpotent");
  Verdict v = make("metanilpotent_sync");
  TupleSample sample = representative_tuples(ctx);
  auto F = inv.fitting.elements();
  json entries = json::array();
  for (const auto& t : sample.tuples) {
    std::optional<Index> found;
    for (Index x : F)
      if (core_hits(ctx, t, x)) {
        found = x;
        break;
      }
    if (!found) {
      v.status = Status::counterexample;
      v.reason = "no x in F(G) synchronizes the tuple";
      v.witness = {{"tuple", tuple_to_json(ctx, t)}};
      break;
    }
    if (entries.size() < kMaxWitnesses)
      entries.push_back({{"tuple", tuple_to_json(ctx, t)}, {"x", element_to_json(D, *found)}});
  }
  if (v.status == Status::verified) v.witness = {{"tuples", entries}};
  v.sizes = {{"fitting_order", inv.fitting.order()}, {"tuples_checked", sample.tuples.size()}};
  return v;
}

namespace {

enum class Target { pi_core, in_fitting, fitting, core, trivial };

struct OddData {
  GroupInvariants inv;
  std::vector<SubgroupHandle> subs;
};

SubgroupHandle meet_with_conjugate(const SubgroupHandle& H, Index x) {
  return intersect(H, conjugate(H, x));
}

bool target_holds(Target target, const SubgroupHandle& H, const SubgroupHandle& meet,
                  const SubgroupHandle& fitting) {
  const DenseGroup& D = H.parent();
  switch (target) {
    case Target::pi_core: return meet == pi_core(D, prime_divisors(H.order()));
    case Target::in_fitting: return meet.is_subgroup_of(fitting);
    case Target::fitting: return meet == fitting;
    case Target::core: return meet == core(H);
    case Target::trivial: return meet.is_trivial();
  }
  return false;
}

Target target_of(const std::string& check) {
  if (check == "bialostocki") return Target::pi_core;
  if (check == "zenkov" || check == "conjecture_c") return Target::in_fitting;
  if (check == "mann_fitting") return Target::fitting;
  if (check == "maximal_nilpotent_core") return Target::core;
  if (check == "coprime_nilpotent") return Target::trivial;
  throw Error(Errc::invalid_argument, "no subgroup target for " + check);
}

std::optional<Index> find_conjugator(const SubgroupHandle& H, Target target, const SubgroupHandle& fitting) {
  for (Index x = 0; x < H.parent().order(); ++x)
    if (target_holds(target, H, meet_with_conjugate(H, x), fitting)) return x;
  return std::nullopt;
}

Verdict subgroup_check(const std::string& name, const std::vector<SubgroupHandle>& family,
                       const SubgroupHandle& fitting) {
  Verdict v = make(name);
  Target target = target_of(name);
  json entries = json::array();
  for (const auto& H : family) {
    auto x = find_conjugator(H, target, fitting);
    if (!x) {
      v.status = Status::counterexample;
      v.reason = "no conjugate meets the subgroup as required";
      v.witness = {{"subgroup", subgroup_to_json(H)}};
      break;
    }
    if (entries.size() < kMaxWitnesses)
      entries.push_back({{"subgroup", subgroup_to_json(H)}, {"x", element_to_json(H.parent(), *x)}});
  }
  if (v.status == Status::verified) v.witness = {{"subgroups", entries}};
  v.sizes = {{"subgroups", family.size()}};
  return v;
}

}  // namespace

std::vector<Verdict> check_odd_order_suite(const DsContext& ctx) {
  const DenseGroup& D = ctx.G();
  const bool odd = D.order() % 2 == 1;
  const bool enumerable = D.order() <= ctx.caps.enumeration_cap;
  std::vector<Verdict> out;
  StarReport star = check_star(ctx);

  if (odd) {
    Verdict v = star_verdict(ctx);
    v.check = "ito";
    if (!star.star) {
      v.status = Status::counterexample;
      v.reason = "odd-order group without (*)";
    }
    out.push_back(std::move(v));
  } else {
    out.push_back(skipped("ito", "even order"));
  }

  {
    Verdict v = make("brodkey");
    std::vector<std::uint64_t> abelian_primes;
    for (const auto& [p, S] : ctx.systems) {
      if (!is_abelian(S.representative)) continue;
      abelian_primes.push_back(p);
      if (!star.star_p[p]) {
        v.status = Status::counterexample;
        v.reason = "abelian Sylow subgroup without (*)_p";
      } else {
        v.witness[std::to_string(p)] = element_to_json(D, *star.witness[p]);
      }
    }
    v.sizes = {{"abelian_sylow_primes", abelian_primes}};
    out.push_back(std::move(v));
  }

  const char* subgroup_checks[] = {"bialostocki", "zenkov", "mann_fitting", "maximal_nilpotent_core",
                                   "coprime_nilpotent", "conjecture_c"};
  if (!enumerable) {
    for (const char* name : subgroup_checks)
      out.push_back(skipped(name, "order exceeds the enumeration cap"));
    return out;
  }
  auto subs = enumerate_subgroups(D, ctx.caps.enumeration_cap);
  auto nil = nilpotent_subgroups(subs);
  auto F = fitting_subgroup(D);
  auto gcd = [](std::size_t a, std::size_t b) { return std::gcd(a, b); };

  for (const char* name : subgroup_checks) {
    std::string check = name;
    if (check == "zenkov") {
      out.push_back(subgroup_check(check, abelian_subgroups(subs), F));
      continue;
    }
    if (!odd) {
      out.push_back(skipped(check, "even order"));
      continue;
    }
    std::vector<SubgroupHandle> family;
    if (check == "bialostocki") {
      for (const auto& H : nil)
        if (!H.is_trivial() && gcd(H.order(), D.order() / H.order()) == 1) family.push_back(H);
    } else if (check == "mann_fitting") {
      for (const auto& H : nil)
        if (F.is_subgroup_of(H)) family.push_back(H);
    } else if (check == "maximal_nilpotent_core") {
      for (const auto& H : maximal_nilpotent_subgroups(subs))
        if (!H.is_whole()) family.push_back(H);
    } else if (check == "coprime_nilpotent") {
      for (const auto& H : nil)
        if (!H.is_whole() && gcd(F.order(), H.order()) == 1) family.push_back(H);
    } else {
      family = nil;
    }
    out.push_back(subgroup_check(check, family, F));
  }
  return out;
}

Verdict check_semidirect_centralizer(const DenseGroup& D, const SubgroupHandle& V, const SubgroupHandle& K) {
  if (!is_normal(V) || !intersect(V, K).is_trivial() || V.order() * K.order() != D.order())
    throw Error(Errc::not_semidirect, "not a semidirect decomposition V⋊K");
  Verdict v = make("semidirect_centralizer");
  v.witness = {{"V", subgroup_to_json(V)}, {"K", subgroup_to_json(K)}};
  auto kel = K.elements();
  for (Index x : V.elements()) {
    Mask c(D.order());
    for (Index k : kel)
      if (D.mul(k, x) == D.mul(x, k)) c.set(k);
    Mask meet = K.mask() & conjugate(K, x).mask();
    if (c != meet) {
      v.status = Status::counterexample;
      v.reason = "C_K(v) differs from K ∩ K^v";
      v.witness["v"] = element_to_json(D, x);
      break;
    }
  }
  v.sizes = {{"V", V.order()}, {"K", K.order()}};
  return v;
}

Verdict check_fitting_mod_hypercenter(const DsContext& ctx) {
  const DenseGroup& D = ctx.G();
  auto Z = hypercenter(D);
  auto q = quotient(D, Z);
  auto lhs = fitting_subgroup(*q.quotient);
  auto rhs = q.image(fitting_subgroup(D));
  Verdict v = make("fitting_mod_hypercenter", lhs == rhs ? Status::verified : Status::counterexample);
  v.sizes = {{"hypercenter", Z.order()}, {"quotient_fitting", lhs.order()}, {"image_of_fitting", rhs.order()}};
  return v;
}

Verdict check_metanilpotent_fitting_prime(const DsContext& ctx) {
  const DenseGroup& D = ctx.G();
  auto inv = invariants(D);
  if (!inv.is_metanilpotent) return skipped("metanilpotent_fitting_prime", "not metanilpotent");
  auto primes = prime_divisors(inv.fitting.order());
  if (primes.size() != 1) return skipped("metanilpotent_fitting_prime", "F(G) is not a p-group");
  std::uint64_t p = primes[0];
  std::size_t index = D.order() / inv.fitting.order();
  Verdict v = make("metanilpotent_fitting_prime", index % p ? Status::verified : Status::counterexample);
  v.sizes = {{"p", p}, {"index", index}};
  return v;
}

bool replay(const DsContext& ctx, const Verdict& v) {
  const DenseGroup& D = ctx.G();
  const json& w = v.witness;
  auto tuples_ok = [&](auto&& pred) {
    for (const auto& e : w.at("tuples"))
      if (!pred(tuple_from_json(ctx, e.at("tuple")), element_from_json(D, e.at("x")))) return false;
    return true;
  };
  const std::string& c = v.check;
  if (c == "conjecture_a") {
    if (v.status == Status::counterexample) return !gamma(ctx, tuple_from_json(ctx, w.at("tuple"))).witness;
    return tuples_ok([&](const DsTuple& t, Index x) { return gamma(ctx, t).joint.test(x); });
  }
  if (c == "conjecture_b" || c == "metanilpotent_sync") {
    if (v.status == Status::skipped) return run_context_check(ctx, c).at(0).status == Status::skipped;
    if (v.status == Status::counterexample) return run_context_check(ctx, c).at(0).status == v.status;
    SubgroupHandle F = c == "metanilpotent_sync" ? fitting_subgroup(D) : whole_group(D);
    return tuples_ok([&](const DsTuple& t, Index x) { return F.contains(x) && core_hits(ctx, t, x); });
  }
  if (c == "union_normalizers") {
    auto one = [&](const json& e) {
      DsTuple t = tuple_from_json(ctx, e.at("tuple"));
      Index x = element_from_json(D, e.at("x"));
      return outside_normalizers(ctx, t, x) && (!small_core_index(ctx) || core_hits(ctx, t, x));
    };
    if (v.status == Status::counterexample) {
      Verdict again = check_union_normalizers(ctx, tuple_from_json(ctx, w.at("tuple")));
      return again.status == Status::counterexample;
    }
    if (w.contains("tuples")) {
      for (const auto& e : w.at("tuples"))
        if (!one(e)) return false;
      return true;
    }
    return one(w);
  }
  if (c == "star" || c == "ito" || c == "brodkey") {
    for (const auto& [key, g] : w.items()) {
      std::uint64_t p = std::stoull(key);
      const auto& S = ctx.system(p);
      if (meet_with_conjugate(S.representative, element_from_json(D, g)) != S.p_core) return false;
    }
    auto again = run_context_check(ctx, c);
    return again.at(0).status == v.status && again.at(0).sizes == v.sizes;
  }
  if (c == "bialostocki" || c == "zenkov" || c == "mann_fitting" || c == "maximal_nilpotent_core" ||
      c == "coprime_nilpotent" || c == "conjecture_c") {
    if (v.status != Status::verified) {
      auto again = run_context_check(ctx, c);
      return again.at(0).status == v.status;
    }
    auto F = fitting_subgroup(D);
    for (const auto& e : w.at("subgroups")) {
      auto H = subgroup_from_json(D, e.at("subgroup"));
      if (!target_holds(target_of(c), H, meet_with_conjugate(H, element_from_json(D, e.at("x"))), F))
        return false;
    }
    return true;
  }
  if (c == "semidirect_centralizer") {
    auto again = check_semidirect_centralizer(D, subgroup_from_json(D, w.at("V")), subgroup_from_json(D, w.at("K")));
    return again.status == v.status;
  }
  if (c == "lemsyn") {
    auto ref = [&](const char* k) {
      return SylowRef{w.at(k).at("p").get<std::uint64_t>(), w.at(k).at("sylow").get<std::size_t>()};
    };
    auto again = check_lemsyn(ctx, ref("P1"), ref("P2"), ref("Q1"), ref("Q2"));
    return again.status == v.status && again.sizes == v.sizes;
  }
  if (c == "bfs") {
    std::vector<SubgroupHandle> cover;
    for (const auto& m : w.at("cover")) cover.push_back(subgroup_from_json(D, m));
    auto again = check_bfs(D, cover, w.at("p").get<std::uint64_t>());
    return again.status == v.status && again.sizes == v.sizes;
  }
  auto again = run_context_check(ctx, c);
  for (const auto& a : again)
    if (a.check == c) return a.status == v.status && a.sizes == v.sizes;
  return false;
}

std::vector<Verdict> run_context_check(const DsContext& ctx, const std::string& name) {
  if (name == "baer") return {check_baer(ctx)};
  if (name == "conjecture_a") return {check_conjecture_A(ctx)};
  if (name == "conjecture_b") return {check_conjecture_B(ctx)};
  if (name == "star") return {star_verdict(ctx)};
  if (name == "union_normalizers") return {check_union_theorem(ctx)};
  if (name == "all_normalizer_union") return {all_normalizer_union_verdict(ctx)};
  if (name == "two_prime_transitivity") {
    if (ctx.G().primes().size() > 2) return {skipped(name, "more than two primes divide the order")};
    return {check_two_prime_transitivity(ctx)};
  }
  if (name == "metanilpotent_sync") return {check_metanilpotent_sync(ctx)};
  if (name == "fitting_mod_hypercenter") return {check_fitting_mod_hypercenter(ctx)};
  if (name == "metanilpotent_fitting_prime") return {check_metanilpotent_fitting_prime(ctx)};
  auto suite = check_odd_order_suite(ctx);
  if (name == "odd_order") return suite;
  for (auto& v : suite)
    if (v.check == name) return {std::move(v)};
  throw Error(Errc::invalid_argument, "unknown check '" + name + "'");
}

}  // namespace sylsync
