#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sylsync/group_spec.hpp"

namespace sylsync {

/// A claim about a gallery group: the named check must end with `status`
/// and report the listed numeric values.
struct ExpectedFact {
  std::string check;
  std::string status;
  nlohmann::json values = nlohmann::json::object();
};

/// Generators, in the built group's points, of a decomposition V⋊K.
struct SemidirectSplit {
  std::vector<Permutation> normal;
  std::vector<Permutation> complement;
};

struct GalleryEntry {
  std::string name;
  std::string family;
  std::string summary;
  GroupSpec spec;
  std::vector<ExpectedFact> expected;
  std::vector<SemidirectSplit> splits;
  /// Extra subgroup singled out by the construction (wreath_core's H).
  std::vector<Permutation> marked_subgroup;
};

/// Generators of the two factors of a semidirect spec, as realised by
/// build_generators.
SemidirectSplit semidirect_split(const GroupSpec& spec);

std::vector<GalleryEntry> build_gallery();

/// Throws Errc::validation_error for unknown names.
const GalleryEntry& gallery_entry(const std::string& name);

}  // namespace sylsync
