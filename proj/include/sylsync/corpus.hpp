#pragma once
// Corpus configuration: which groups to examine, with which caps, suites,
// seed and parallelism.
//
// JSON form:
//   {"groups": "default" | [{"name": "...", "spec": spec} | spec, ...],
//    "caps": {"dense_cap": ..., "enumeration_cap": ..., "tuple_space_bound": ...,
//             "sampled_tuples": ..., "sylow_enumeration_limit": ..., "mc_trials": ...},
//    "suites": ["baer", ...], "seed": 0, "jobs": 1, "max_order": 2000}
// Every key is optional; missing groups mean the default corpus.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sylsync/caps.hpp"
#include "sylsync/group_spec.hpp"

namespace sylsync {

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
};

struct CorpusConfig {
  std::vector<CorpusEntry> groups;
  Caps caps;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t max_order = 2000;
};

/// Suite names accepted by run_suite, in run order.
const std::vector<std::string>& known_suites();
/// Suites run when none are named.
const std::vector<std::string>& default_suites();

/// Small groups of order at most 2000: symmetric, alternating, dihedral and
/// cyclic groups, products, wreath and semidirect products, matrix groups
/// and every gallery entry.
std::vector<CorpusEntry> default_corpus();

nlohmann::json caps_to_json(const Caps& caps);
Caps caps_from_json(const nlohmann::json& j);

/// Throws Errc::parse_error or Errc::validation_error (bad caps, unknown
/// suites, malformed groups).
CorpusConfig config_from_json(const nlohmann::json& j);
CorpusConfig parse_config(std::string_view text);
nlohmann::json config_to_json(const CorpusConfig& config);

/// Throws Errc::validation_error when a cap is zero or a suite is unknown.
void validate(const CorpusConfig& config);

}  // namespace sylsync
