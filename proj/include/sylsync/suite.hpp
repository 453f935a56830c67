#pragma once
// Suite runner: fans (group, suite) tasks out to a worker pool and hands
// the records to a single writer in a fixed order, so the output depends
// only on the config and the seed.

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylsync/corpus.hpp"
#include "sylsync/ds_action.hpp"
#include "sylsync/gallery.hpp"

namespace sylsync {

/// One line of a report. `status` is verified, counterexample, skipped or
/// error (an internal failure).
struct ReportRecord {
  std::string suite;
  std::string check;
  std::string group_name;
  std::string spec_hash;
  GroupSpec spec;
  std::string status;
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json sizes = nlohmann::json::object();
  std::string reason;
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
};

/// Stable field names: suite, check, group_id {hash, name}, spec, status,
/// witness, sizes, reason, elapsed_ms, seed.
nlohmann::json record_to_json(const ReportRecord& r);
ReportRecord record_from_json(const nlohmann::json& j);

struct RunOptions {
  /// When false, elapsed_ms is written as 0 so reports compare byte for byte.
  bool timing = true;
};

/// 0 when every record is verified or skipped, 2 when a counterexample was
/// found, otherwise 1 when an internal error was recorded.
int exit_code(const std::vector<ReportRecord>& records);

/// Runs every suite of the config (all known suites when none are listed)
/// on every group. Records reach `sink` ordered by group, then suite, then
/// check. Returns the exit code.
int run_suite(const CorpusConfig& config, const std::function<void(const ReportRecord&)>& sink,
              const RunOptions& options = {});
std::vector<ReportRecord> run_suite(const CorpusConfig& config, const RunOptions& options = {});

/// Seed of one (group, suite) task, keyed by the master seed, the group's
/// spec hash and the suite name. Recorded so that replay can rebuild the
/// same context.
std::uint64_t task_seed(std::uint64_t master_seed, const std::string& spec_hash, const std::string& suite);

/// The verdicts of one suite on one group.
std::vector<Verdict> run_group_suite(const GroupSpec& spec, const DsContext& ctx, const std::string& suite);

/// Compares a gallery entry's recorded facts with fresh computations.
std::vector<Verdict> evaluate_gallery(const GalleryEntry& entry, const Caps& caps = {},
                                      std::uint64_t seed = 0);
Verdict evaluate_fact(const GalleryEntry& entry, const DsContext& ctx, const ExpectedFact& fact);

/// Rebuilds the group from the record's spec and re-verifies the witness
/// (or recomputes and compares, for records without an element witness).
bool replay_record(const ReportRecord& r, const Caps& caps = {});

/// JSON lines, one record per line.
void write_records(std::ostream& out, const std::vector<ReportRecord>& records);
std::vector<ReportRecord> read_records(std::istream& in);

/// Record lines with elapsed_ms removed, sorted: the form in which two runs
/// are compared.
std::vector<std::string> normalized_lines(const std::vector<ReportRecord>& records);

}  // namespace sylsync
