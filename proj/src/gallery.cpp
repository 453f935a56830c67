#include "sylsync/gallery.hpp"

#include <array>

#include "sylsync/error.hpp"

namespace sylsync {

namespace {

using nlohmann::json;
using Mat2 = std::array<std::array<int, 2>, 2>;

int mod(int a, int q) { return ((a % q) + q) % q; }

// x -> M x + t on the points of F_q^2, point (a, b) numbered q*a + b.
Permutation affine(int q, const Mat2& M, std::array<int, 2> t) {
  std::vector<Point> images(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      int a2 = mod(M[0][0] * a + M[0][1] * b + t[0], q);
      int b2 = mod(M[1][0] * a + M[1][1] * b + t[1], q);
      images[static_cast<std::size_t>(q * a + b)] = static_cast<Point>(q * a2 + b2);
    }
  return Permutation(std::move(images));
}

// x -> a x + b on Z_q.
Permutation affine_line(int q, int a, int b) {
  std::vector<Point> images(static_cast<std::size_t>(q));
  for (int x = 0; x < q; ++x) images[static_cast<std::size_t>(x)] = static_cast<Point>(mod(a * x + b, q));
  return Permutation(std::move(images));
}

// Semidirect C_q ⋊ C_k where the actor's generator raises the normal
// generator to the power `e`.
GroupSpec cyclic_by_cyclic(int q, int k, int e) {
  return GroupSpec::semidirect(GroupSpec::cyclic(static_cast<std::size_t>(q)),
                               GroupSpec::cyclic(static_cast<std::size_t>(k)),
                               {{affine_line(q, 1, e)}});
}

ExpectedFact fact(std::string check, std::string status, json values = json::object()) {
  return {std::move(check), std::move(status), std::move(values)};
}

GalleryEntry v_rtimes_d8() {
  const Mat2 rot{{{0, 1}, {-1, 0}}}, refl{{{1, 0}, {0, -1}}}, id{{{1, 0}, {0, 1}}};
  std::vector<Permutation> translations{affine(3, id, {1, 0}), affine(3, id, {0, 1})};
  std::vector<Permutation> linear{affine(3, rot, {0, 0}), affine(3, refl, {0, 0})};
  std::vector<Permutation> gens = translations;
  gens.insert(gens.end(), linear.begin(), linear.end());
  GalleryEntry e;
  e.name = "v_rtimes_d8";
  e.family = "v_rtimes_d8";
  e.summary = "F_3^2 extended by a dihedral group of order 8 in GL_2(3), on 9 points";
  e.spec = GroupSpec::generators(9, gens);
  e.expected = {
      fact("order", "verified", {{"order", 72}}),
      fact("star", "verified", {{"star_2", false}, {"o_2_order", 1}, {"min_intersection_order_2", 2}}),
      fact("conjecture_b", "skipped"),
      fact("conjecture_a", "verified"),
      fact("semidirect_centralizer", "verified"),
  };
  e.splits = {{translations, linear}};
  return e;
}

GalleryEntry sym4_cover() {
  GalleryEntry e;
  e.name = "sym4_cover";
  e.family = "sym4_cover";
  e.summary = "Sym(4), the union of its seven Sylow normalizers";
  e.spec = GroupSpec::symmetric(4);
  e.expected = {
      fact("order", "verified", {{"order", 24}}),
      fact("all_normalizer_union", "verified", {{"covers", true}, {"normalizers", 7}}),
      fact("union_normalizers", "verified"),
      fact("two_prime_transitivity", "verified", {{"orbit_sizes", {12}}}),
      fact("semidirect_centralizer", "verified"),
  };
  e.splits = {{{Permutation::from_cycles(4, "(0 1)(2 3)"), Permutation::from_cycles(4, "(0 2)(1 3)")},
               {Permutation::from_cycles(4, "(0 1)"), Permutation::from_cycles(4, "(0 1 2)")}}};
  return e;
}

GalleryEntry agl17() {
  std::vector<Permutation> v{affine_line(7, 1, 1)}, k{affine_line(7, 3, 0)};
  GalleryEntry e;
  e.name = "agl17";
  e.family = "agl17";
  e.summary = "AGL(1,7) = C7⋊C6, x -> x+1 and x -> 3x";
  e.spec = GroupSpec::generators(7, {v[0], k[0]});
  e.expected = {
      fact("order", "verified", {{"order", 42}}),
      fact("ds_orbits", "verified", {{"rho", {2, 3}}, {"tuple_space_size", 49}, {"orbit_sizes", {7, 42}}}),
      fact("same_complement_normalizers", "verified", {{"normalizer_order", 6}}),
      fact("conjecture_a", "verified"),
      fact("semidirect_centralizer", "verified"),
  };
  e.splits = {{v, k}};
  return e;
}

GalleryEntry sym3_power(std::size_t n) {
  static const char* ratios[] = {"1", "2/3", "4/9", "8/27"};
  GalleryEntry e;
  e.name = "sym3_power_" + std::to_string(n);
  e.family = "sym3_power";
  e.summary = "Sym(3)^" + std::to_string(n);
  if (n == 1) {
    e.spec = GroupSpec::symmetric(3);
  } else {
    e.spec = GroupSpec::direct(std::vector<GroupSpec>(n, GroupSpec::symmetric(3)));
  }
  e.expected = {
      fact("gamma_ratio_2", "verified", {{"ratio", ratios[n]}}),
      fact("conjecture_a", "verified"),
  };
  return e;
}

GalleryEntry wreath_core() {
  GalleryEntry e;
  e.name = "wreath_core";
  e.family = "wreath_core";
  e.summary = "C3 wr C3 with the core-free subgroup C3^2 inside the base";
  e.spec = GroupSpec::wreath(GroupSpec::cyclic(3), 3);
  e.marked_subgroup = {Permutation::from_cycles(9, "(0 1 2)"), Permutation::from_cycles(9, "(3 4 5)")};
  e.expected = {
      fact("order", "verified", {{"order", 81}}),
      fact("wreath_core", "verified",
           {{"h_order", 9}, {"core_order", 1}, {"min_pair_order", 3}, {"trivial_triple", true}}),
  };
  return e;
}

GalleryEntry metanilpotent(std::string name, std::string summary, GroupSpec spec,
                           std::size_t order, std::size_t fitting_order) {
  GalleryEntry e;
  e.name = std::move(name);
  e.family = "metanilpotent_odd";
  e.summary = std::move(summary);
  e.spec = std::move(spec);
  e.expected = {
      fact("order", "verified", {{"order", order}}),
      fact("invariants", "verified",
           {{"odd_order", true}, {"metanilpotent", true}, {"fitting_order", fitting_order}}),
      fact("metanilpotent_sync", "verified"),
      fact("star", "verified", {{"star", true}}),
  };
  if (e.spec.kind == GroupSpec::Kind::semidirect) {
    e.splits = {semidirect_split(e.spec)};
    e.expected.push_back(fact("semidirect_centralizer", "verified"));
  }
  return e;
}

// (C5 x C5) ⋊ C3 with the companion matrix of x^2 + x + 1, which has order 3
// and no nonzero fixed vector over F_5.
GroupSpec c5sq_by_c3() {
  const int q = 5;
  const Mat2 M{{{0, -1}, {1, -1}}};
  auto apply = [&](std::array<int, 2> v) {
    return std::array<int, 2>{mod(M[0][0] * v[0] + M[0][1] * v[1], q),
                              mod(M[1][0] * v[0] + M[1][1] * v[1], q)};
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if ((a || b) && apply({a, b}) == std::array<int, 2>{a, b})
        throw Error(Errc::validation_error, "C3 action on C5^2 has a fixed point");
  std::array<int, 2> v{1, 2};
  if (apply(apply(apply(v))) != v || apply(v) == v)
    throw Error(Errc::validation_error, "C3 action on C5^2 is not of order 3");
  // Column j of M is the image of basis vector j, written on the two blocks
  // of the direct product.
  auto on_blocks = [&](int x, int y) {
    std::vector<Point> images(10);
    for (int i = 0; i < q; ++i) {
      images[static_cast<std::size_t>(i)] = static_cast<Point>(mod(i + x, q));
      images[static_cast<std::size_t>(q + i)] = static_cast<Point>(q + mod(i + y, q));
    }
    return Permutation(std::move(images));
  };
  GroupSpec normal = GroupSpec::direct({GroupSpec::cyclic(5), GroupSpec::cyclic(5)});
  return GroupSpec::semidirect(std::move(normal), GroupSpec::cyclic(3),
                               {{on_blocks(M[0][0], M[1][0]), on_blocks(M[0][1], M[1][1])}});
}

std::vector<GalleryEntry> make_gallery() {
  std::vector<GalleryEntry> out;
  out.push_back(v_rtimes_d8());
  out.push_back(sym4_cover());
  out.push_back(agl17());
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(sym3_power(n));
  out.push_back(wreath_core());
  out.push_back(metanilpotent("c7_by_c3", "C7⋊C3, x -> 2x", cyclic_by_cyclic(7, 3, 2), 21, 7));
  out.push_back(metanilpotent("c7_by_c3_times_c5", "(C7⋊C3) x C5",
                              GroupSpec::direct({cyclic_by_cyclic(7, 3, 2), GroupSpec::cyclic(5)}),
                              105, 35));
  out.push_back(metanilpotent("c13_by_c3", "C13⋊C3, x -> 3x", cyclic_by_cyclic(13, 3, 3), 39, 13));
  out.push_back(metanilpotent("c5sq_by_c3", "(C5 x C5)⋊C3, fixed-point-free", c5sq_by_c3(), 75, 25));
  return out;
}

}  // namespace

// build_generators emits the normal factor's generators first.
SemidirectSplit semidirect_split(const GroupSpec& spec) {
  GenSet g = build_generators(spec);
  std::size_t k = build_generators(spec.children.at(0)).gens.size();
  SemidirectSplit s;
  s.normal.assign(g.gens.begin(), g.gens.begin() + static_cast<std::ptrdiff_t>(k));
  s.complement.assign(g.gens.begin() + static_cast<std::ptrdiff_t>(k), g.gens.end());
  return s;
}

std::vector<GalleryEntry> build_gallery() { return make_gallery(); }

const GalleryEntry& gallery_entry(const std::string& name) {
  static const std::vector<GalleryEntry> entries = make_gallery();
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw Error(Errc::validation_error, "unknown gallery entry '" + name + "'");
}

}  // namespace sylsync
