#include "sylsync/sym_mc.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "sylsync/arith.hpp"
#include "sylsync/error.hpp"
#include "sylsync/rng.hpp"
#include "sylsync/sylow.hpp"

namespace sylsync {

namespace {

constexpr std::uint64_t kBlock = 256;

std::vector<Point> full_base(std::size_t n) {
  std::vector<Point> b(n);
  std::iota(b.begin(), b.end(), Point{0});
  return b;
}

std::uint64_t stream_id(Family f, std::size_t n, std::uint64_t p, std::uint64_t block) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(f) + 1);
  h = mix64(h ^ n);
  h = mix64(h ^ p);
  return mix64(h ^ block);
}

// Depth-first search for a non-identity x in P whose base images survive
// sifting through Q. t is the partial product of P's transversal elements,
// w the accumulated inverse of Q's transversal elements.
bool find_common(const BsgsGroup& P, const BsgsGroup& Q, std::size_t depth, const Permutation& t,
                 const Permutation& w, bool moved) {
  const auto& pl = P.levels();
  if (depth == pl.size()) return moved;
  const auto& lp = pl[depth];
  const auto& lq = Q.levels()[depth];
  for (std::size_t k = 0; k < lp.orbit.size(); ++k) {
    Permutation t2 = k == 0 ? t : compose(lp.reps[k], t);
    Point beta = w[t2[lp.base_point]];
    std::int32_t pos = lq.orbit_pos[beta];
    if (pos < 0) continue;
    Permutation w2 = pos == 0 ? w : compose(w, lq.rep_inverses[static_cast<std::size_t>(pos)]);
    if (find_common(P, Q, depth + 1, t2, w2, moved || k != 0)) return true;
  }
  return false;
}

void check_limit(const BigInt& order, std::uint64_t limit) {
  if (order > limit)
    throw Error(Errc::sylow_too_large, "Sylow order " + order.str() + " exceeds limit " + std::to_string(limit));
}

McEstimate finish(McEstimate e) {
  e.estimate = e.trials ? static_cast<double>(e.hits) / static_cast<double>(e.trials) : 0.0;
  if (!e.exhaustive && e.trials)
    e.std_error = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(e.trials));
  return e;
}

}  // namespace

std::string to_string(Family f) { return f == Family::sym ? "sym" : "alt"; }

Family family_from_string(const std::string& s) {
  if (s == "sym") return Family::sym;
  if (s == "alt") return Family::alt;
  throw Error(Errc::invalid_argument, "family must be sym or alt");
}

double limit_constant(Family f) {
  return f == Family::sym ? 1 - std::exp(-0.5) : 1 - 1.5 * std::exp(-0.5);
}

IntersectionTester::IntersectionTester(const BsgsGroup& P, std::uint64_t limit) {
  check_limit(P.order(), limit);
  auto base = full_base(P.degree());
  P_ = BsgsGroup::build(P.strong_generators(), base, P.order());
}

bool IntersectionTester::trivial(const Permutation& g) const {
  if (g.degree() != P_.degree()) throw Error(Errc::degree_mismatch, "degree mismatch");
  if (P_.order() == 1) return true;
  GenSet conj{P_.degree(), {}};
  for (const auto& s : P_.strong_generators().gens) conj.gens.push_back(conjugate(s, g));
  auto base = full_base(P_.degree());
  BsgsGroup Q = BsgsGroup::build(conj, base, P_.order());
  Permutation id = Permutation::identity(P_.degree());
  return !find_common(P_, Q, 0, id, id, false);
}

bool trivial_intersection_test(const BsgsGroup& P, const Permutation& g, std::uint64_t limit) {
  return IntersectionTester(P, limit).trivial(g);
}

GenSet family_generators(Family f, std::size_t n) {
  std::vector<Permutation> gens;
  if (f == Family::sym) {
    if (n >= 2) gens.push_back(Permutation::from_cycle_list(n, {{0, 1}}));
    if (n >= 3) {
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), std::size_t{0});
      gens.push_back(Permutation::from_cycle_list(n, {all}));
    }
  } else {
    for (std::size_t k = 2; k < n; ++k) gens.push_back(Permutation::from_cycle_list(n, {{0, 1, k}}));
  }
  return {std::max<std::size_t>(n, 1), std::move(gens)};
}

GenSet family_sylow(Family f, std::size_t n, std::uint64_t p) {
  if (f == Family::alt && n >= 3) return alt_sylow(n, p);
  if (f == Family::alt && p == 2) return {std::max<std::size_t>(n, 1), {}};
  return sym_sylow(n, p);
}

nlohmann::json to_json(const McEstimate& e) {
  nlohmann::json limit = nullptr;
  if (e.p == 2) limit = limit_constant(e.family);
  return {{"family", to_string(e.family)},
          {"n", e.n},
          {"p", e.p},
          {"trials", e.trials},
          {"hits", e.hits},
          {"estimate", e.estimate},
          {"stderr", e.std_error},
          {"seed", e.seed},
          {"sylow_order", e.sylow_order.str()},
          {"limit_constant_for_context", limit},
          {"exhaustive", e.exhaustive}};
}

McEstimate mc_intersection_prob(Family f, std::size_t n, std::uint64_t p, std::uint64_t trials,
                                std::uint64_t seed, unsigned jobs, std::uint64_t limit) {
  if (!is_prime(p) || p > n) throw Error(Errc::invalid_argument, "need a prime p <= n");
  BsgsGroup G = BsgsGroup::build(family_generators(f, n));
  BsgsGroup P = BsgsGroup::build(family_sylow(f, n, p));
  IntersectionTester tester(P, limit);

  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  std::atomic<std::uint64_t> next{0}, hits{0};
  auto work = [&] {
    for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) {
      RngStream rng(seed, stream_id(f, n, p, b));
      std::uint64_t end = std::min(trials, (b + 1) * kBlock), local = 0;
      for (std::uint64_t t = b * kBlock; t < end; ++t)
        if (!tester.trivial(G.random_element(rng))) ++local;
      hits += local;
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  McEstimate e;
  e.family = f;
  e.n = n;
  e.p = p;
  e.trials = trials;
  e.hits = hits;
  e.seed = seed;
  e.sylow_order = P.order();
  return finish(e);
}

McEstimate exact_intersection_prob(Family f, std::size_t n, std::uint64_t p, std::uint64_t limit) {
  if (!is_prime(p) || p > n) throw Error(Errc::invalid_argument, "need a prime p <= n");
  BsgsGroup G = BsgsGroup::build(family_generators(f, n));
  BsgsGroup P = BsgsGroup::build(family_sylow(f, n, p));
  IntersectionTester tester(P, limit);
  McEstimate e;
  e.family = f;
  e.n = n;
  e.p = p;
  e.exhaustive = true;
  e.sylow_order = P.order();
  G.for_each_element([&](const Permutation& g) {
    ++e.trials;
    if (!tester.trivial(g)) ++e.hits;
    return true;
  });
  return finish(e);
}

nlohmann::json to_json(const UnionBoundReport& r) {
  nlohmann::json est = nlohmann::json::array(), gaps = nlohmann::json::array();
  for (const auto& e : r.estimates) est.push_back(to_json(e));
  for (const auto& [p, why] : r.gaps) gaps.push_back({{"p", p}, {"reason", why}});
  return {{"family", to_string(r.family)}, {"n", r.n},     {"estimates", est},
          {"gaps", gaps},                  {"sum", r.sum}, {"prime_count", r.prime_count}};
}

UnionBoundReport union_bound_report(Family f, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                                    const std::vector<std::uint64_t>& primes, unsigned jobs,
                                    std::uint64_t limit) {
  UnionBoundReport r;
  r.family = f;
  r.n = n;
  r.prime_count = primes_up_to(n).size();
  for (std::uint64_t p : primes.empty() ? primes_up_to(n) : primes) {
    try {
      r.estimates.push_back(mc_intersection_prob(f, n, p, trials, seed, jobs, limit));
      r.sum += r.estimates.back().estimate;
    } catch (const Error& e) {
      if (e.code() != Errc::sylow_too_large) throw;
      r.gaps.emplace_back(p, e.what());
    }
  }
  return r;
}

nlohmann::json to_json(const SyncWitness& w) {
  nlohmann::json x = nullptr;
  if (w.x) {
    x = nlohmann::json::array();
    for (Point v : w.x->images()) x.push_back(v);
  }
  return {{"family", to_string(w.family)}, {"n", w.n}, {"primes", w.primes}, {"x", x}, {"samples", w.samples}};
}

SyncWitness sync_search(Family f, std::size_t n, const std::vector<std::uint64_t>& primes,
                        std::uint64_t budget, std::uint64_t seed, std::uint64_t limit) {
  SyncWitness w;
  w.family = f;
  w.n = n;
  w.primes = primes;
  if (primes.empty()) {
    w.x = Permutation::identity(std::max<std::size_t>(n, 1));
    return w;
  }
  BsgsGroup G = BsgsGroup::build(family_generators(f, n));
  std::vector<IntersectionTester> testers;
  for (std::uint64_t p : primes) testers.emplace_back(BsgsGroup::build(family_sylow(f, n, p)), limit);
  RngStream rng(seed, stream_id(f, n, 0, 0));
  while (w.samples < budget) {
    Permutation x = G.random_element(rng);
    ++w.samples;
    bool ok = true;
    for (const auto& t : testers)
      if (!t.trivial(x)) {
        ok = false;
        break;
      }
    if (ok) {
      w.x = std::move(x);
      break;
    }
  }
  return w;
}

bool verify_sync_witness(const SyncWitness& w, std::uint64_t limit) {
  if (!w.x) return false;
  BsgsGroup G = BsgsGroup::build(family_generators(w.family, w.n));
  if (!G.contains(*w.x)) return false;
  for (std::uint64_t p : w.primes)
    if (!trivial_intersection_test(BsgsGroup::build(family_sylow(w.family, w.n, p)), *w.x, limit)) return false;
  return true;
}

}  // namespace sylsync
