#include "sylsync/corpus.hpp"

#include <algorithm>
#include <array>

#include "sylsync/error.hpp"
#include "sylsync/gallery.hpp"

namespace sylsync {

namespace {

using nlohmann::json;

int mod(int a, int q) { return ((a % q) + q) % q; }

// Linear map v -> M v on F_q^2, point (a, b) numbered q*a + b.
Permutation linear(int q, std::array<std::array<int, 2>, 2> M) {
  std::vector<Point> images(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      images[static_cast<std::size_t>(q * a + b)] =
          static_cast<Point>(q * mod(M[0][0] * a + M[0][1] * b, q) + mod(M[1][0] * a + M[1][1] * b, q));
  return Permutation(std::move(images));
}

// Moebius map x -> (a x + b) / (c x + d) on the projective line over F_q,
// with infinity numbered q.
Permutation moebius(int q, int a, int b, int c, int d) {
  auto inverse = [q](int x) {
    for (int y = 1; y < q; ++y)
      if (mod(x * y, q) == 1) return y;
    throw Error(Errc::validation_error, "no inverse");
  };
  std::vector<Point> images(static_cast<std::size_t>(q + 1));
  for (int x = 0; x <= q; ++x) {
    int num = x == q ? a : mod(a * x + b, q);
    int den = x == q ? c : mod(c * x + d, q);
    images[static_cast<std::size_t>(x)] = static_cast<Point>(den == 0 ? q : mod(num * inverse(den), q));
  }
  return Permutation(std::move(images));
}

// x -> a x + b on Z_q.
Permutation affine_line(int q, int a, int b) {
  std::vector<Point> images(static_cast<std::size_t>(q));
  for (int x = 0; x < q; ++x) images[static_cast<std::size_t>(x)] = static_cast<Point>(mod(a * x + b, q));
  return Permutation(std::move(images));
}

// C_q ⋊ C_k, the actor's generator sending the normal generator to its e-th power.
GroupSpec cyclic_by_cyclic(int q, int k, int e) {
  return GroupSpec::semidirect(GroupSpec::cyclic(static_cast<std::size_t>(q)),
                               GroupSpec::cyclic(static_cast<std::size_t>(k)), {{affine_line(q, 1, e)}});
}

std::uint64_t positive(const json& j, const char* key, std::uint64_t fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw Error(Errc::validation_error, std::string("'") + key + "' must be a positive integer");
  return v.get<std::uint64_t>();
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{
      "baer",
      "two_prime_transitivity",
      "union_normalizers",
      "all_normalizer_union",
      "star",
      "conjecture_a",
      "conjecture_b",
      "metanilpotent_sync",
      "odd_order",
      "fitting_mod_hypercenter",
      "metanilpotent_fitting_prime",
      "semidirect_centralizer",
      "gallery",
  };
  return names;
}

const std::vector<std::string>& default_suites() { return known_suites(); }

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, GroupSpec spec) { out.push_back({std::move(name), std::move(spec)}); };
  using S = GroupSpec;

  for (std::size_t m : {1, 2, 6, 8, 12, 30}) add("C" + std::to_string(m), S::cyclic(m));
  for (std::size_t m : {3, 4, 5, 6}) add("S" + std::to_string(m), S::symmetric(m));
  for (std::size_t m : {4, 5, 6}) add("A" + std::to_string(m), S::alternating(m));
  for (std::size_t m : {4, 5, 6, 8}) add("D" + std::to_string(2 * m), S::dihedral(m));

  add("Q8", S::generators(8, {Permutation::from_cycles(8, "(0 1 2 3)(4 5 6 7)"),
                              Permutation::from_cycles(8, "(0 4 2 6)(1 7 3 5)")}));
  add("C2^3", S::direct({S::cyclic(2), S::cyclic(2), S::cyclic(2)}));
  add("C2xS3", S::direct({S::cyclic(2), S::symmetric(3)}));
  add("S4xS3", S::direct({S::symmetric(4), S::symmetric(3)}));
  add("S4xS4", S::direct({S::symmetric(4), S::symmetric(4)}));
  add("A5xC3", S::direct({S::alternating(5), S::cyclic(3)}));
  add("D8xS3", S::direct({S::dihedral(4), S::symmetric(3)}));
  add("A4xC3", S::direct({S::alternating(4), S::cyclic(3)}));
  add("S3wrC2", S::wreath(S::symmetric(3), 2));
  add("S4wrC2", S::wreath(S::symmetric(4), 2));
  add("AGL(1,5)", S::generators(5, {affine_line(5, 1, 1), affine_line(5, 2, 0)}));
  add("SL(2,3)", S::generators(9, {linear(3, {{{1, 1}, {0, 1}}}), linear(3, {{{0, 1}, {-1, 0}}})}));
  add("GL(2,3)", S::generators(9, {linear(3, {{{1, 1}, {0, 1}}}), linear(3, {{{0, 1}, {-1, 0}}}),
                                    linear(3, {{{-1, 0}, {0, 1}}})}));
  add("PSL(2,7)", S::generators(8, {moebius(7, 1, 1, 0, 1), moebius(7, 2, 0, 0, 1), moebius(7, 0, 6, 1, 0)}));
  add("C11:C5", cyclic_by_cyclic(11, 5, 3));
  add("C19:C9", cyclic_by_cyclic(19, 9, 4));

  for (const auto& e : build_gallery()) add(e.name, S::gallery(e.name));
  return out;
}

json caps_to_json(const Caps& caps) {
  return {{"dense_cap", caps.dense_cap},
          {"enumeration_cap", caps.enumeration_cap},
          {"tuple_space_bound", caps.tuple_space_bound},
          {"sampled_tuples", caps.sampled_tuples},
          {"sylow_enumeration_limit", caps.sylow_enumeration_limit},
          {"mc_trials", caps.mc_trials}};
}

Caps caps_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::validation_error, "caps must be an object");
  for (const auto& [key, value] : j.items())
    if (!caps_to_json(Caps{}).contains(key)) throw Error(Errc::validation_error, "unknown cap '" + key + "'");
  Caps c;
  c.dense_cap = positive(j, "dense_cap", c.dense_cap);
  c.enumeration_cap = positive(j, "enumeration_cap", c.enumeration_cap);
  c.tuple_space_bound = positive(j, "tuple_space_bound", c.tuple_space_bound);
  c.sampled_tuples = positive(j, "sampled_tuples", c.sampled_tuples);
  c.sylow_enumeration_limit = positive(j, "sylow_enumeration_limit", c.sylow_enumeration_limit);
  c.mc_trials = positive(j, "mc_trials", c.mc_trials);
  return c;
}

void validate(const CorpusConfig& config) {
  const json caps = caps_to_json(config.caps);
  for (const auto& [key, value] : caps.items())
    if (value.get<std::uint64_t>() == 0) throw Error(Errc::validation_error, "cap '" + key + "' must be positive");
  if (config.jobs == 0) throw Error(Errc::validation_error, "jobs must be positive");
  if (config.max_order == 0) throw Error(Errc::validation_error, "max_order must be positive");
  for (const auto& s : config.suites)
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
      throw Error(Errc::validation_error, "unknown suite '" + s + "'");
}

CorpusConfig config_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::validation_error, "corpus config must be an object");
  static const std::vector<std::string> keys{"groups", "caps", "suites", "seed", "jobs", "max_order"};
  for (const auto& [key, value] : j.items())
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw Error(Errc::validation_error, "unknown config key '" + key + "'");

  CorpusConfig c;
  if (!j.contains("groups") || j.at("groups") == "default") {
    c.groups = default_corpus();
  } else {
    const json& groups = j.at("groups");
    if (!groups.is_array()) throw Error(Errc::validation_error, "'groups' must be an array or \"default\"");
    for (const auto& g : groups) {
      if (g.is_object() && g.contains("spec")) {
        c.groups.push_back({g.value("name", std::string{}), spec_from_json(g.at("spec"))});
      } else {
        c.groups.push_back({std::string{}, spec_from_json(g)});
      }
      if (c.groups.back().name.empty()) c.groups.back().name = spec_to_json(c.groups.back().spec).dump();
    }
  }
  if (j.contains("caps")) c.caps = caps_from_json(j.at("caps"));
  if (j.contains("suites")) {
    if (!j.at("suites").is_array()) throw Error(Errc::validation_error, "'suites' must be an array");
    for (const auto& s : j.at("suites")) {
      if (!s.is_string()) throw Error(Errc::validation_error, "suite names must be strings");
      c.suites.push_back(s.get<std::string>());
    }
  }
  c.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 0;
  c.jobs = static_cast<unsigned>(positive(j, "jobs", 1));
  c.max_order = positive(j, "max_order", c.max_order);
  validate(c);
  return c;
}

CorpusConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    return config_from_json(j);
  } catch (const json::exception& e) {
    throw Error(Errc::validation_error, e.what());
  }
}

json config_to_json(const CorpusConfig& config) {
  json groups = json::array();
  for (const auto& g : config.groups) groups.push_back({{"name", g.name}, {"spec", spec_to_json(g.spec)}});
  return {{"groups", groups},
          {"caps", caps_to_json(config.caps)},
          {"suites", config.suites},
          {"seed", config.seed},
          {"jobs", config.jobs},
          {"max_order", config.max_order}};
}

}  // namespace sylsync
