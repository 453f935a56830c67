// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "sylsync/arith.hpp"
#include "sylsync/corpus.hpp"
#include "sylsync/gallery.hpp"
#include "sylsync/invariants.hpp"
#include "sylsync/suite.hpp"
#include "sylsync/sym_mc.hpp"

using namespace sylsync;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(s < budget_s, "runtime above " + std::to_string(budget_s) + " s");
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " " << id << " " << name << " (" << std::fixed
            << std::setprecision(2) << s << " s) " << out.detail.str() << std::endl;
}

// Records of one suite's own check (gallery facts reuse check names).
std::vector<const ReportRecord*> select(const std::vector<ReportRecord>& rs, const std::string& check) {
  std::vector<const ReportRecord*> out;
  for (const auto& r : rs)
    if (r.check == check && r.suite == check) out.push_back(&r);
  return out;
}

struct CorpusGroup {
  std::string name;
  std::shared_ptr<const DsContext> ctx;
};

}  // namespace

int main() {
  CorpusConfig config = config_from_json(json::object());
  config.seed = 20240601;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<CorpusGroup> groups;
  for (const auto& e : config.groups)
    groups.push_back({e.name, std::make_shared<const DsContext>(build_context(build_dense(e.spec, config.caps),
                                                                             config.caps, config.seed))});

  std::vector<ReportRecord> records;

  criterion(1, "baer_cross_oracle", 300, [&](Outcome& o) {
    CorpusConfig c = config;
    c.suites = {"baer"};
    auto rs = run_suite(c);
    std::size_t small = 0, large = 0;
    for (const auto* r : select(rs, "baer")) {
      o.require(r->status == "verified", r->group_name + " " + r->reason);
      const json& s = r->sizes;
      bool three = s["hypercenter"] == s["normalizer_intersection"] && s["hypercenter"] == s["kernel"];
      o.require(three, r->group_name + " disagrees");
      if (s.contains("maximal_nilpotent_intersection")) {
        o.require(s["maximal_nilpotent_intersection"] == s["hypercenter"], r->group_name + " maximal nilpotent");
        ++small;
      } else {
        ++large;
      }
    }
    o.require(small + large == config.groups.size(), "one record per group");
    o.detail << small << " groups with four-way equality, " << large << " with three-way";
  });

  criterion(2, "two_prime_transitivity", 120, [&](Outcome& o) {
    std::size_t n = 0;
    bool s4 = false, s4s3 = false;
    for (const auto& g : groups) {
      if (g.ctx->G().primes().size() > 2) continue;
      auto orb = ds_orbits(*g.ctx);
      o.require(orb.sizes.size() == 1, g.name + " has " + std::to_string(orb.sizes.size()) + " orbits");
      o.require(check_two_prime_transitivity(*g.ctx).status == Status::verified, g.name + " verdict");
      s4 = s4 || g.name == "S4";
      s4s3 = s4s3 || g.name == "S4xS3";
      ++n;
    }
    o.require(s4 && s4s3, "Sym(4) and Sym(4)xSym(3) present");
    o.detail << n << " groups of order p^a q^b, each a single orbit";
  });

  criterion(3, "union_theorem", 120, [&](Outcome& o) {
    std::size_t tuples = 0;
    for (const auto& g : groups) {
      const DsContext& ctx = *g.ctx;
      auto sample = representative_tuples(ctx);
      o.require(sample.exhaustive, g.name + " tuples sampled");
      for (const auto& t : sample.tuples) {
        Verdict v = check_union_normalizers(ctx, t);
        o.require(v.witness.contains("x"), g.name + " no witness");
        if (!v.witness.contains("x")) continue;
        Index x = element_from_json(ctx.G(), v.witness["x"]);
        for (std::size_t i = 0; i < t.size(); ++i)
          o.require(!ctx.system(ctx.rho[i]).normalizer_of(t[i]).contains(x), g.name + " witness normalizes");
        ++tuples;
      }
    }
    const auto& s4 = *std::find_if(groups.begin(), groups.end(), [](const auto& g) { return g.name == "S4"; })->ctx;
    Mask cover(s4.G().order());
    std::size_t normalizers = 0;
    for (std::uint64_t p : {2, 3}) {
      const auto& S = s4.system(p);
      for (std::size_t j = 0; j < S.count(); ++j, ++normalizers) cover |= S.normalizer_of(j).mask();
    }
    o.require(cover.all() && all_normalizer_union(s4), "Sym(4) normalizers cover");
    o.detail << tuples << " representative tuples with witnesses; Sym(4): " << normalizers
             << " normalizers cover all 24 elements";
  });

  criterion(4, "corollary_core_intersection", 120, [&](Outcome& o) {
    std::size_t n = 0;
    for (const auto& g : groups) {
      const DsContext& ctx = *g.ctx;
      bool hyp = true;
      for (std::uint64_t p : ctx.rho) hyp = hyp && ctx.system(p).representative.order() <= p * ctx.system(p).p_core.order();
      if (!hyp || ctx.rho.empty()) continue;
      ++n;
      for (const auto& t : representative_tuples(ctx).tuples) {
        Verdict v = check_union_normalizers(ctx, t);
        o.require(v.status == Status::verified, g.name + " verdict");
        Index x = element_from_json(ctx.G(), v.witness["x"]);
        for (std::size_t i = 0; i < t.size(); ++i) {
          const auto& S = ctx.system(ctx.rho[i]);
          o.require(intersect(S.conjugates[t[i]], conjugate(S.conjugates[t[i]], x)) == S.p_core,
                    g.name + " misses the core");
        }
      }
    }
    o.require(n > 0, "some group meets the hypothesis");
    o.detail << n << " groups with every |P : O_p(G)| <= p";
  });

  criterion(5, "conjectures_a_b", 600, [&](Outcome& o) {
    records = run_suite(config);
    std::size_t counter = 0, odd = 0;
    for (const auto& r : records) {
      counter += r.status == "counterexample" || r.status == "error";
      o.require(r.status != "counterexample" && r.status != "error", r.group_name + " " + r.check + " " + r.reason);
    }
    bool vd8 = false;
    for (const auto* r : select(records, "star")) {
      if (r->group_name == "v_rtimes_d8") vd8 = r->sizes["star_2"] == false && r->sizes["star"] == false;
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.name == r->group_name; });
      if (it->ctx->G().order() % 2 == 1) {
        o.require(r->sizes["star"] == true, r->group_name + " odd order without (*)");
        ++odd;
      }
    }
    o.require(vd8, "V:D8 has (*)_2 false");
    o.require(select(records, "conjecture_a").size() == config.groups.size(), "conjecture_a on every group");
    o.detail << records.size() << " records, " << counter << " counterexamples; " << odd
             << " odd-order groups with (*); V:D8 (*)_2 = false";
  });

  criterion(6, "metanilpotent_sync", 60, [&](Outcome& o) {
    std::size_t n = 0;
    for (const auto& e : build_gallery()) {
      if (e.family != "metanilpotent_odd") continue;
      DsContext ctx = build_context(build_dense(e.spec), {}, config.seed);
      Verdict v = check_metanilpotent_sync(ctx);
      o.require(v.status == Status::verified, e.name + " " + v.reason);
      auto F = fitting_subgroup(ctx.G());
      for (const auto& entry : v.witness["tuples"])
        o.require(F.contains(element_from_json(ctx.G(), entry["x"])), e.name + " witness outside F");
      o.require(replay(ctx, v), e.name + " replay");
      ++n;
    }
    o.require(n == 4, "four gallery groups");
    o.detail << n << " groups verified with x in F(G)";
  });

  criterion(7, "gamma_ratio_sym3_powers", 60, [&](Outcome& o) {
    for (std::size_t n = 1; n <= 3; ++n) {
      DsContext ctx = build_context(build_dense(gallery_entry("sym3_power_" + std::to_string(n)).spec));
      o.require(ctx.rho == std::vector<std::uint64_t>{2}, "rho = {2}");
      auto g = gamma(ctx, DsTuple(1, 0));
      std::uint64_t two = 1ULL << n, three = 1;
      for (std::size_t i = 0; i < n; ++i) three *= 3;
      o.require(g.sizes.at(2) * three == two * ctx.G().order(), "ratio (2/3)^" + std::to_string(n));
      o.detail << "n=" << n << ": " << g.sizes.at(2) << "/" << ctx.G().order() << "; ";
    }
  });

  criterion(8, "subgroup_suite", 600, [&](Outcome& o) {
    std::map<std::string, std::size_t> verified;
    for (const auto& r : records) {
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.name == r.group_name; });
      const DenseGroup& D = it->ctx->G();
      if (r.suite == "odd_order" && D.order() <= config.caps.enumeration_cap) {
        bool needs_odd = r.check != "zenkov" && r.check != "brodkey";
        if (r.check == "zenkov" || (needs_odd && D.order() % 2 == 1)) {
          o.require(r.status == "verified", r.group_name + " " + r.check);
          ++verified[r.check];
        }
      }
      if (r.suite == "semidirect_centralizer" && r.status == "verified") ++verified["semidirect_centralizer"];
    }
    for (const auto& e : build_gallery()) {
      if (e.splits.empty()) continue;
      std::size_t ok = 0;
      for (const auto* r : select(records, "semidirect_centralizer"))
        ok += r->group_name == e.name && r->status == "verified";
      o.require(ok == e.splits.size(), e.name + " decomposition verified");
    }
    for (const char* c : {"zenkov", "bialostocki", "mann_fitting", "maximal_nilpotent_core", "coprime_nilpotent"})
      o.require(verified[c] > 0, std::string(c) + " ran");
    for (const auto& [k, v] : verified) o.detail << k << "=" << v << " ";
  });

  criterion(9, "monte_carlo_vs_exact", 120, [&](Outcome& o) {
    std::size_t pairs = 0;
    for (std::size_t n = 2; n <= 7; ++n)
      for (std::uint64_t p : primes_up_to(n)) {
        auto exact = exact_intersection_prob(Family::sym, n, p);
        auto mc = mc_intersection_prob(Family::sym, n, p, 10000, config.seed);
        double tol = 3 * mc.std_error;
        o.require(std::abs(mc.estimate - exact.estimate) <= tol + 1e-12,
                  "n=" + std::to_string(n) + " p=" + std::to_string(p));
        ++pairs;
      }
    auto s5 = exact_intersection_prob(Family::sym, 5, 5);
    auto s4 = exact_intersection_prob(Family::sym, 4, 2);
    o.require(s5.hits * 6 == s5.trials, "Sym(5), p=5 is 1/6");
    o.require(s4.hits == s4.trials, "Sym(4), p=2 is 1");
    o.detail << pairs << " (n, p) pairs within 3 stderr; Sym(5)/5 = " << s5.hits << "/" << s5.trials
             << "; Sym(4)/2 = " << s4.hits << "/" << s4.trials;
  });

  criterion(10, "desk_scale_sylow_intersections", 600, [&](Outcome& o) {
    auto two = mc_intersection_prob(Family::sym, 16, 2, 10000, config.seed, config.jobs);
    o.require(two.estimate <= 0.99, "Sym(16), p=2 estimate <= 0.99");
    o.detail << "Sym(16) p=2: " << two.estimate << "; p=3:";
    std::vector<McEstimate> grid;
    for (std::size_t n : {9, 12, 15, 18, 21}) grid.push_back(mc_intersection_prob(Family::sym, n, 3, 10000, config.seed, config.jobs));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      o.detail << " n=" << grid[i].n << ":" << grid[i].estimate;
      if (i > 0) {
        double se = std::hypot(grid[i].std_error, grid[i - 1].std_error);
        o.require(grid[i].estimate <= grid[i - 1].estimate + 2 * se, "non-increasing at n=" + std::to_string(grid[i].n));
      }
      o.require(grid[i].n * grid[i].estimate <= 1.5 * 9 * grid[0].estimate, "n*estimate bound");
    }
    o.detail << "; limit constants " << limit_constant(Family::sym) << "/" << limit_constant(Family::alt)
             << " (reported only)";
  });

  criterion(11, "sync_search_sym16", 300, [&](Outcome& o) {
    std::vector<std::uint64_t> odd;
    for (std::uint64_t p : primes_up_to(16))
      if (p != 2) odd.push_back(p);
    auto w = sync_search(Family::sym, 16, odd, 10000, config.seed);
    o.require(w.x.has_value(), "witness found");
    o.require(w.x && verify_sync_witness(w), "witness verifies");
    o.detail << "primes " << json(odd).dump() << ", " << w.samples << " samples";
  });

  criterion(12, "wreath_core_example", 60, [&](Outcome& o) {
    const auto& e = gallery_entry("wreath_core");
    auto D = build_dense(e.spec);
    std::vector<Index> gens;
    for (const auto& g : e.marked_subgroup) gens.push_back(D->index_of(g));
    auto H = subgroup_closure(*D, gens);
    std::size_t min_pair = H.order();
    bool triple = false;
    for (Index x = 0; x < D->order(); ++x) {
      auto Hx = conjugate(H, x);
      auto pair = intersect(H, Hx);
      if (Hx != H) min_pair = std::min(min_pair, pair.order());
      for (Index y = 0; y < D->order() && !triple; y += 1) triple = intersect(pair, conjugate(H, y)).is_trivial();
    }
    o.require(D->order() == 81 && H.order() == 9, "orders");
    o.require(core(H).is_trivial(), "H core-free");
    o.require(min_pair >= 3, "pairs meet in order >= 3");
    o.require(triple, "trivial triple intersection");
    o.detail << "|H|=9, least pairwise intersection " << min_pair << ", trivial triple found";
  });

  criterion(13, "determinism_and_replay", 600, [&](Outcome& o) {
    CorpusConfig a = config, b = config;
    a.jobs = 1;
    b.jobs = std::max(2u, config.jobs);
    auto ra = run_suite(a, RunOptions{false});
    auto rb = run_suite(b, RunOptions{false});
    std::ostringstream sa, sb;
    write_records(sa, ra);
    write_records(sb, rb);
    o.require(sa.str() == sb.str(), "byte-identical reports");
    o.require(normalized_lines(ra) == normalized_lines(records), "timed run matches");
    std::istringstream in(sa.str());
    auto back = read_records(in);
    std::size_t ok = 0;
    for (const auto& r : back) {
      bool good = replay_record(r, config.caps);
      o.require(good, "replay " + r.group_name + " " + r.check);
      ok += good;
    }
    o.detail << ok << "/" << back.size() << " records replayed; jobs 1 vs " << b.jobs << " identical";
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
