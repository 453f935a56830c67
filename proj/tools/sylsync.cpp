// Command-line front end: suites over a corpus, Monte Carlo estimates,
// good-element sets, DS orbits, the gallery, spec validation and replay.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylsync/arith.hpp"
#include "sylsync/corpus.hpp"
#include "sylsync/error.hpp"
#include "sylsync/suite.hpp"
#include "sylsync/sym_mc.hpp"

namespace {

using nlohmann::json;
using namespace sylsync;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SpecInput {
  std::string text;
  std::string file;

  void attach(CLI::App* app) {
    auto* t = app->add_option("--spec", text, "group spec as JSON text");
    auto* f = app->add_option("--spec-file", file, "file holding a group spec");
    t->excludes(f);
  }
  GroupSpec get() const {
    if (!file.empty()) return parse_spec(read_file(file));
    if (text.empty()) throw std::runtime_error("a group spec is required (--spec or --spec-file)");
    return parse_spec(text);
  }
};

json orbits_json(const DsContext& ctx) {
  auto orb = ds_orbits(ctx);
  json reps = json::array();
  for (std::size_t i = 0; i < orb.representatives.size(); ++i)
    reps.push_back({{"tuple", tuple_to_json(ctx, orb.representatives[i])}, {"size", orb.sizes[i]}});
  return {{"order", ctx.G().order()},
          {"rho", ctx.rho},
          {"tuple_space_size", ctx.tuple_space_size},
          {"orbits", reps},
          {"kernel_order", orb.kernel.order()}};
}

json gamma_json(const DsContext& ctx, const DsTuple& t) {
  auto g = gamma(ctx, t);
  json sizes = json::object();
  for (const auto& [p, s] : g.sizes) sizes[std::to_string(p)] = s;
  json out{{"tuple", tuple_to_json(ctx, t)}, {"sizes", sizes}, {"joint_size", g.joint_size},
           {"order", ctx.G().order()}};
  out["witness"] = g.witness ? element_to_json(ctx.G(), *g.witness) : json(nullptr);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow synchronization checks for small permutation groups"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "run suites over a corpus and write JSON-lines records");
  std::string corpus_path, out_path;
  std::vector<std::string> suites;
  std::optional<std::uint64_t> seed_opt;
  std::optional<unsigned> jobs_opt;
  std::optional<std::size_t> max_order_opt;
  bool no_timing = false;
  check->add_option("--corpus", corpus_path, "corpus config (JSON); default corpus when absent");
  check->add_option("--suite", suites, "suites to run (repeat or comma-separate)")->delimiter(',');
  check->add_option("--seed", seed_opt, "master seed");
  check->add_option("--jobs", jobs_opt, "worker threads");
  check->add_option("--max-order", max_order_opt, "skip groups above this order");
  check->add_option("--out", out_path, "output file (stdout when absent)");
  check->add_flag("--no-timing", no_timing, "write elapsed_ms as 0");

  // mc
  auto* mc = app.add_subcommand("mc", "estimate Pr(P ∩ P^g != 1) in Sym(n) or Alt(n)");
  std::string family = "sym";
  std::size_t n = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t trials = 10000, seed = 0, budget = 10000;
  unsigned jobs = 1;
  bool exact = false;
  for (auto* sub : {mc}) {
    sub->add_option("--family", family, "sym or alt")->check(CLI::IsMember({"sym", "alt"}));
    sub->add_option("--n", n, "degree")->required();
    sub->add_option("--p", primes, "primes (all primes <= n when absent)")->delimiter(',');
    sub->add_option("--trials", trials, "samples per prime");
    sub->add_option("--seed", seed, "seed");
    sub->add_option("--jobs", jobs, "worker threads");
  }
  mc->add_flag("--exact", exact, "enumerate the whole group instead of sampling");

  // sync
  auto* sync = app.add_subcommand("sync", "search for x meeting every listed Sylow subgroup trivially");
  sync->add_option("--family", family, "sym or alt")->check(CLI::IsMember({"sym", "alt"}));
  sync->add_option("--n", n, "degree")->required();
  sync->add_option("--p", primes, "primes (odd primes <= n when absent)")->delimiter(',');
  sync->add_option("--trials", budget, "sample budget");
  sync->add_option("--seed", seed, "seed");

  // gamma
  auto* gam = app.add_subcommand("gamma", "good-element sets of DS tuples");
  SpecInput gamma_spec;
  gamma_spec.attach(gam);
  std::string tuple_text;
  gam->add_option("--tuple", tuple_text, "tuple as JSON [{\"p\":2,\"sylow\":0},...]; orbit representatives when absent");
  gam->add_option("--seed", seed, "seed for sampled tuples");

  // orbits
  auto* orb = app.add_subcommand("orbits", "orbits of the conjugation action on Sylow tuples");
  SpecInput orbits_spec;
  orbits_spec.attach(orb);

  // gallery
  auto* gal = app.add_subcommand("gallery", "list, print or evaluate gallery entries");
  std::string name;
  bool emit_spec = false, evaluate = false;
  gal->add_option("--name", name, "entry name");
  gal->add_flag("--emit-spec", emit_spec, "print the entry's group spec");
  gal->add_flag("--check", evaluate, "evaluate the entry's recorded facts");

  // spec validate
  auto* spec_cmd = app.add_subcommand("spec", "group spec utilities");
  spec_cmd->require_subcommand(1);
  auto* validate_cmd = spec_cmd->add_subcommand("validate", "parse, build and summarise a spec");
  SpecInput validate_spec;
  validate_spec.attach(validate_cmd);
  std::string validate_file;
  validate_cmd->add_option("file", validate_file, "file holding a group spec");

  // replay
  auto* rep = app.add_subcommand("replay", "re-verify every record of a report");
  std::string in_path;
  rep->add_option("--in", in_path, "JSON-lines report")->required();
  rep->add_option("--corpus", corpus_path, "corpus config whose caps the report used");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      CorpusConfig config = corpus_path.empty() ? config_from_json(json::object()) : parse_config(read_file(corpus_path));
      if (!suites.empty()) config.suites = suites;
      if (seed_opt) config.seed = *seed_opt;
      if (jobs_opt) config.jobs = *jobs_opt;
      if (max_order_opt) config.max_order = *max_order_opt;
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
      }
      std::ostream& out = out_path.empty() ? std::cout : file;
      std::map<std::string, std::size_t> counts;
      int code = run_suite(config,
                           [&](const ReportRecord& r) {
                             out << record_to_json(r).dump() << '\n';
                             ++counts[r.status];
                           },
                           RunOptions{!no_timing});
      out.flush();
      if (!out) throw std::runtime_error("write failed");
      json summary = counts;
      std::cerr << summary.dump() << '\n';
      return code;
    }

    if (*mc) {
      Family f = family_from_string(family);
      if (primes.empty()) {
        if (exact) {
          json arr = json::array();
          for (std::uint64_t p : primes_up_to(n)) arr.push_back(to_json(exact_intersection_prob(f, n, p)));
          std::cout << arr.dump(2) << '\n';
        } else {
          std::cout << to_json(union_bound_report(f, n, trials, seed, {}, jobs)).dump(2) << '\n';
        }
        return 0;
      }
      json arr = json::array();
      for (std::uint64_t p : primes)
        arr.push_back(to_json(exact ? exact_intersection_prob(f, n, p) : mc_intersection_prob(f, n, p, trials, seed, jobs)));
      std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      return 0;
    }

    if (*sync) {
      if (primes.empty())
        for (std::uint64_t p : primes_up_to(n))
          if (p != 2) primes.push_back(p);
      auto w = sync_search(family_from_string(family), n, primes, budget, seed);
      json out = to_json(w);
      out["verified"] = w.x ? verify_sync_witness(w) : false;
      std::cout << out.dump(2) << '\n';
      return w.x ? 0 : 2;
    }

    if (*gam) {
      DsContext ctx = build_context(build_dense(gamma_spec.get()), {}, seed);
      json arr = json::array();
      if (!tuple_text.empty()) {
        arr.push_back(gamma_json(ctx, tuple_from_json(ctx, json::parse(tuple_text))));
      } else {
        for (const auto& t : representative_tuples(ctx).tuples) arr.push_back(gamma_json(ctx, t));
      }
      std::cout << arr.dump(2) << '\n';
      return 0;
    }

    if (*orb) {
      DsContext ctx = build_context(build_dense(orbits_spec.get()));
      std::cout << orbits_json(ctx).dump(2) << '\n';
      return 0;
    }

    if (*gal) {
      if (name.empty()) {
        json arr = json::array();
        for (const auto& e : build_gallery())
          arr.push_back({{"name", e.name}, {"family", e.family}, {"summary", e.summary}});
        std::cout << arr.dump(2) << '\n';
        return 0;
      }
      const GalleryEntry& e = gallery_entry(name);
      if (emit_spec) {
        std::cout << spec_to_json(e.spec).dump() << '\n';
        return 0;
      }
      json facts = json::array();
      for (const auto& f : e.expected) facts.push_back({{"check", f.check}, {"status", f.status}, {"values", f.values}});
      json out{{"name", e.name}, {"family", e.family}, {"summary", e.summary}, {"spec", spec_to_json(e.spec)},
               {"facts", facts}};
      int code = 0;
      if (evaluate) {
        json results = json::array();
        for (const auto& v : evaluate_gallery(e)) {
          results.push_back({{"check", v.check}, {"status", to_string(v.status)}, {"sizes", v.sizes}});
          if (v.status == Status::counterexample) code = 2;
        }
        out["results"] = results;
      }
      std::cout << out.dump(2) << '\n';
      return code;
    }

    if (*validate_cmd) {
      GroupSpec spec = !validate_file.empty() ? parse_spec(read_file(validate_file)) : validate_spec.get();
      auto gens = build_generators(spec);
      auto order = BsgsGroup::build(gens).order();
      std::cout << json{{"valid", true},
                        {"hash", spec_hash(spec)},
                        {"degree", gens.degree},
                        {"order", order.str()},
                        {"spec", spec_to_json(spec)}}
                       .dump(2)
                << '\n';
      return 0;
    }

    if (*rep) {
      Caps caps = corpus_path.empty() ? Caps{} : parse_config(read_file(corpus_path)).caps;
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot read '" + in_path + "'");
      auto records = read_records(in);
      std::size_t ok = 0;
      json failed = json::array();
      for (const auto& r : records) {
        if (replay_record(r, caps)) {
          ++ok;
        } else {
          failed.push_back({{"check", r.check}, {"group", r.group_name}, {"suite", r.suite}});
        }
      }
      std::cout << json{{"records", records.size()}, {"replayed", ok}, {"failed", failed}}.dump(2) << '\n';
      return failed.empty() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
