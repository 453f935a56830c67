#include "sylsync/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <boost/rational.hpp>

#include "sylsync/error.hpp"
#include "sylsync/invariants.hpp"
#include "sylsync/rng.hpp"

namespace sylsync {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Verdict make(const std::string& check, Status s = Status::verified) {
  Verdict v;
  v.check = check;
  v.status = s;
  return v;
}

SubgroupHandle closure_of(const DenseGroup& D, const std::vector<Permutation>& gens) {
  std::vector<Index> idx;
  for (const auto& g : gens) idx.push_back(D.index_of(g));
  return subgroup_closure(D, idx);
}

std::vector<SemidirectSplit> splits_for(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::gallery) return gallery_entry(spec.name).splits;
  if (spec.kind == GroupSpec::Kind::semidirect) return {semidirect_split(spec)};
  return {};
}

// Facts computed here rather than by a named check.
std::optional<std::pair<std::string, json>> structural_fact(const GalleryEntry& entry, const DsContext& ctx,
                                                            const std::string& check) {
  const DenseGroup& D = ctx.G();
  if (check == "order") return {{"verified", {{"order", D.order()}}}};
  if (check == "invariants") {
    auto inv = invariants(D);
    return {{"verified",
             {{"odd_order", inv.odd_order},
              {"nilpotent", inv.is_nilpotent},
              {"metanilpotent", inv.is_metanilpotent},
              {"fitting_order", inv.fitting.order()}}}};
  }
  if (check == "ds_orbits") {
    auto orb = ds_orbits(ctx);
    auto sizes = orb.sizes;
    std::sort(sizes.begin(), sizes.end());
    return {{"verified", {{"rho", ctx.rho}, {"tuple_space_size", ctx.tuple_space_size}, {"orbit_sizes", sizes}}}};
  }
  if (check == "gamma_ratio_2") {
    if (ctx.rho.empty() || ctx.rho.front() != 2) return {{"skipped", json::object()}};
    auto g = gamma(ctx, DsTuple(ctx.rho.size(), 0));
    boost::rational<std::uint64_t> r(g.sizes.at(2), D.order());
    std::string text = std::to_string(r.numerator());
    if (r.denominator() != 1) text += "/" + std::to_string(r.denominator());
    return {{"verified", {{"ratio", text}, {"good", g.sizes.at(2)}}}};
  }
  if (check == "same_complement_normalizers") {
    // Sylow subgroups for the two primes of rho whose normalizers coincide,
    // so N(P) N(Q) is a proper subset of G.
    if (ctx.rho.size() != 2) return {{"skipped", json::object()}};
    const auto& A = ctx.system(ctx.rho[0]);
    const auto& B = ctx.system(ctx.rho[1]);
    std::optional<std::size_t> order;
    bool every = true;
    for (std::size_t j = 0; j < A.count(); ++j) {
      auto NA = A.normalizer_of(j);
      bool found = false;
      for (std::size_t k = 0; k < B.count() && !found; ++k) found = B.normalizer_of(k) == NA;
      if (found && !order) order = NA.order();
      every = every && found;
    }
    if (!every || !order) return {{"counterexample", {{"every_sylow_matched", every}}}};
    return {{"verified", {{"normalizer_order", *order}, {"product_size", *order}}}};
  }
  if (check == "wreath_core") {
    if (entry.marked_subgroup.empty()) return {{"skipped", json::object()}};
    auto H = closure_of(D, entry.marked_subgroup);
    std::vector<SubgroupHandle> conj;
    for (Index x = 0; x < D.order(); ++x) {
      auto C = conjugate(H, x);
      if (std::find(conj.begin(), conj.end(), C) == conj.end()) conj.push_back(std::move(C));
    }
    std::size_t min_pair = H.order();
    bool triple = false;
    for (std::size_t a = 0; a < conj.size(); ++a)
      for (std::size_t b = a + 1; b < conj.size(); ++b) {
        auto AB = intersect(conj[a], conj[b]);
        min_pair = std::min(min_pair, AB.order());
        for (std::size_t c = b + 1; c < conj.size() && !triple; ++c) triple = intersect(AB, conj[c]).is_trivial();
      }
    return {{"verified",
             {{"h_order", H.order()},
              {"core_order", core(H).order()},
              {"conjugates", conj.size()},
              {"min_pair_order", min_pair},
              {"trivial_triple", triple}}}};
  }
  return std::nullopt;
}

ReportRecord to_record(const std::string& suite, const std::string& name, const GroupSpec& spec,
                       const std::string& hash, std::uint64_t seed, const Verdict& v) {
  ReportRecord r;
  r.suite = suite;
  r.check = v.check;
  r.group_name = name;
  r.spec_hash = hash;
  r.spec = spec;
  r.status = to_string(v.status);
  r.witness = v.witness;
  r.sizes = v.sizes;
  r.reason = v.reason;
  r.seed = seed;
  return r;
}

ReportRecord error_record(const std::string& suite, const std::string& check, const std::string& name,
                          const GroupSpec& spec, const std::string& hash, std::uint64_t seed,
                          const std::string& what) {
  ReportRecord r;
  r.suite = suite;
  r.check = check;
  r.group_name = name;
  r.spec_hash = hash;
  r.spec = spec;
  r.status = "error";
  r.reason = what;
  r.seed = seed;
  return r;
}

// Built group shared by the tasks of one corpus entry.
struct GroupState {
  std::once_flag once;
  std::shared_ptr<const DsContext> ctx;
  std::optional<ReportRecord> build_record;  // set when the group is skipped or failed to build
  std::atomic<std::size_t> remaining{0};
};

void prepare(GroupState& st, const CorpusEntry& entry, const std::string& hash, const CorpusConfig& config) {
  ReportRecord r;
  r.suite = "build";
  r.check = "build";
  r.group_name = entry.name;
  r.spec_hash = hash;
  r.spec = entry.spec;
  r.seed = config.seed;
  try {
    auto order = BsgsGroup::build(build_generators(entry.spec)).order();
    r.sizes = {{"order", order.str()}};
    if (order > config.max_order || order > config.caps.dense_cap) {
      r.status = "skipped";
      r.reason = order > config.max_order ? "order exceeds max_order" : "order exceeds dense_cap";
      st.build_record = std::move(r);
      return;
    }
    auto D = build_dense(entry.spec, config.caps);
    st.ctx = std::make_shared<const DsContext>(build_context(D, config.caps, config.seed));
  } catch (const std::exception& e) {
    r.status = "error";
    r.reason = e.what();
    st.build_record = std::move(r);
  }
}

}  // namespace

json record_to_json(const ReportRecord& r) {
  return {{"suite", r.suite},
          {"check", r.check},
          {"group_id", {{"hash", r.spec_hash}, {"name", r.group_name}}},
          {"spec", spec_to_json(r.spec)},
          {"status", r.status},
          {"witness", r.witness},
          {"sizes", r.sizes},
          {"reason", r.reason},
          {"elapsed_ms", r.elapsed_ms},
          {"seed", r.seed}};
}

ReportRecord record_from_json(const json& j) {
  ReportRecord r;
  try {
    r.suite = j.at("suite").get<std::string>();
    r.check = j.at("check").get<std::string>();
    r.spec_hash = j.at("group_id").at("hash").get<std::string>();
    r.group_name = j.at("group_id").at("name").get<std::string>();
    r.spec = spec_from_json(j.at("spec"));
    r.status = j.at("status").get<std::string>();
    r.witness = j.at("witness");
    r.sizes = j.at("sizes");
    r.reason = j.value("reason", std::string{});
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    r.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(Errc::validation_error, std::string("malformed record: ") + e.what());
  }
  if (spec_hash(r.spec) != r.spec_hash) throw Error(Errc::validation_error, "record hash does not match its spec");
  return r;
}

int exit_code(const std::vector<ReportRecord>& records) {
  bool error = false;
  for (const auto& r : records) {
    if (r.status == "counterexample") return 2;
    error = error || r.status == "error";
  }
  return error ? 1 : 0;
}

std::uint64_t task_seed(std::uint64_t master_seed, const std::string& spec_hash, const std::string& suite) {
  return mix64(mix64(master_seed ^ fnv1a(spec_hash)) ^ fnv1a(suite));
}

Verdict evaluate_fact(const GalleryEntry& entry, const DsContext& ctx, const ExpectedFact& fact) {
  std::string status;
  json actual;
  if (auto s = structural_fact(entry, ctx, fact.check)) {
    std::tie(status, actual) = *s;
  } else if (fact.check == "semidirect_centralizer") {
    status = "verified";
    actual = json::array();
    for (const auto& sp : entry.splits) {
      auto v = check_semidirect_centralizer(ctx.G(), closure_of(ctx.G(), sp.normal), closure_of(ctx.G(), sp.complement));
      if (v.status != Status::verified) status = to_string(v.status);
      actual.push_back(v.sizes);
    }
    actual = {{"splits", actual}};
  } else {
    auto verdicts = run_context_check(ctx, fact.check);
    auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const Verdict& v) { return v.check == fact.check; });
    if (it == verdicts.end()) throw Error(Errc::invalid_argument, "no verdict for '" + fact.check + "'");
    status = to_string(it->status);
    actual = it->sizes;
  }
  bool match = status == fact.status;
  for (const auto& [key, value] : fact.values.items()) match = match && actual.contains(key) && actual.at(key) == value;
  Verdict v = make(fact.check, match ? Status::verified : Status::counterexample);
  v.sizes = {{"expected_status", fact.status}, {"expected", fact.values}, {"status", status}, {"actual", actual}};
  if (!match) v.reason = "gallery fact does not hold";
  return v;
}

std::vector<Verdict> evaluate_gallery(const GalleryEntry& entry, const Caps& caps, std::uint64_t seed) {
  DsContext ctx = build_context(build_dense(entry.spec, caps), caps, seed);
  std::vector<Verdict> out;
  for (const auto& f : entry.expected) out.push_back(evaluate_fact(entry, ctx, f));
  return out;
}

std::vector<Verdict> run_group_suite(const GroupSpec& spec, const DsContext& ctx, const std::string& suite) {
  if (suite == "gallery") {
    if (spec.kind != GroupSpec::Kind::gallery) return {};
    const auto& entry = gallery_entry(spec.name);
    std::vector<Verdict> out;
    for (const auto& f : entry.expected) out.push_back(evaluate_fact(entry, ctx, f));
    return out;
  }
  if (suite == "semidirect_centralizer") {
    auto splits = splits_for(spec);
    if (splits.empty()) {
      Verdict v = make(suite, Status::skipped);
      v.reason = "no semidirect decomposition recorded";
      return {v};
    }
    std::vector<Verdict> out;
    for (const auto& sp : splits)
      out.push_back(check_semidirect_centralizer(ctx.G(), closure_of(ctx.G(), sp.normal),
                                                 closure_of(ctx.G(), sp.complement)));
    return out;
  }
  return run_context_check(ctx, suite);
}

int run_suite(const CorpusConfig& config, const std::function<void(const ReportRecord&)>& sink,
              const RunOptions& options) {
  validate(config);
  const std::vector<std::string>& suites = config.suites.empty() ? default_suites() : config.suites;
  const std::size_t groups = config.groups.size();
  const std::size_t tasks = groups * suites.size();

  std::vector<std::string> hashes;
  for (const auto& g : config.groups) hashes.push_back(spec_hash(g.spec));
  std::vector<GroupState> states(groups);
  for (auto& st : states) st.remaining = suites.size();

  std::vector<std::vector<ReportRecord>> results(tasks);
  std::vector<char> ready(tasks, 0);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto run_task = [&](std::size_t t) {
    const std::size_t gi = t / suites.size(), si = t % suites.size();
    const auto& entry = config.groups[gi];
    const std::string& suite = suites[si];
    GroupState& st = states[gi];
    std::call_once(st.once, [&] { prepare(st, entry, hashes[gi], config); });
    std::vector<ReportRecord> out;
    if (st.build_record) {
      if (si == 0) out.push_back(*st.build_record);
    } else {
      const std::uint64_t seed = task_seed(config.seed, hashes[gi], suite);
      auto start = std::chrono::steady_clock::now();
      try {
        DsContext ctx = *st.ctx;
        ctx.seed = seed;
        for (const auto& v : run_group_suite(entry.spec, ctx, suite))
          out.push_back(to_record(suite, entry.name, entry.spec, hashes[gi], seed, v));
      } catch (const std::exception& e) {
        out.push_back(error_record(suite, suite, entry.name, entry.spec, hashes[gi], seed, e.what()));
      }
      std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      for (auto& r : out) r.elapsed_ms = options.timing ? ms.count() : 0.0;
    }
    if (--st.remaining == 0) st.ctx.reset();
    std::lock_guard lock(mu);
    results[t] = std::move(out);
    ready[t] = 1;
    cv.notify_all();
  };

  std::vector<std::jthread> workers;
  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t t; !stop && (t = next++) < tasks;) run_task(t);
    });

  bool error = false, counterexample = false;
  try {
    for (std::size_t t = 0; t < tasks; ++t) {
      std::vector<ReportRecord> batch;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return ready[t] != 0; });
        batch = std::move(results[t]);
      }
      for (const auto& r : batch) {
        counterexample = counterexample || r.status == "counterexample";
        error = error || r.status == "error";
        sink(r);
      }
    }
  } catch (...) {
    stop = true;
    throw;
  }
  return counterexample ? 2 : error ? 1 : 0;
}

std::vector<ReportRecord> run_suite(const CorpusConfig& config, const RunOptions& options) {
  std::vector<ReportRecord> out;
  run_suite(config, [&](const ReportRecord& r) { out.push_back(r); }, options);
  return out;
}

bool replay_record(const ReportRecord& r, const Caps& caps) {
  if (spec_hash(r.spec) != r.spec_hash) return false;
  if (r.suite == "build") {
    auto order = BsgsGroup::build(build_generators(r.spec)).order();
    return r.sizes.value("order", std::string{}) == order.str();
  }
  DsContext ctx = build_context(build_dense(r.spec, caps), caps, r.seed);
  if (r.status == "error" || r.status == "skipped" || r.suite == "gallery") {
    // Recompute and compare.
    std::vector<Verdict> again;
    try {
      again = run_group_suite(r.spec, ctx, r.suite);
    } catch (const std::exception& e) {
      return r.status == "error" && r.reason == e.what();
    }
    for (const auto& v : again)
      if (v.check == r.check && to_string(v.status) == r.status && v.sizes == r.sizes) return true;
    return false;
  }
  Verdict v;
  v.check = r.check;
  v.status = status_from_string(r.status);
  v.witness = r.witness;
  v.sizes = r.sizes;
  v.reason = r.reason;
  return replay(ctx, v);
}

void write_records(std::ostream& out, const std::vector<ReportRecord>& records) {
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

std::vector<ReportRecord> read_records(std::istream& in) {
  std::vector<ReportRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(Errc::parse_error, "line " + std::to_string(n) + ", byte " + std::to_string(e.byte) + ": " + e.what());
    }
    out.push_back(record_from_json(j));
  }
  return out;
}

std::vector<std::string> normalized_lines(const std::vector<ReportRecord>& records) {
  std::vector<std::string> lines;
  for (const auto& r : records) {
    json j = record_to_json(r);
    j.erase("elapsed_ms");
    lines.push_back(j.dump());
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace sylsync
