#include "doctest.h"
#include "fixtures.hpp"
#include "sylsync/arith.hpp"
#include "sylsync/bsgs.hpp"
#include "sylsync/error.hpp"
#include "sylsync/invariants.hpp"
#include "sylsync/rng.hpp"
#include "sylsync/subgroups.hpp"
#include "sylsync/sylow.hpp"

using namespace sylsync;
using fixture::cyc;
using fixture::generated;
using fixture::to_set;

namespace {

const char* kSmallGroups[] = {
    R"({"symmetric": 3})",
    R"({"symmetric": 4})",
    R"({"alternating": 4})",
    R"({"dihedral": 4})",
    R"({"dihedral": 6})",
    R"({"direct": [{"cyclic": 2}, {"symmetric": 3}]})",
    R"({"gallery": "agl17"})",
    R"({"gallery": "c7_by_c3"})",
    R"({"wreath": {"base": {"cyclic": 2}, "top_cycle": 2}})",
};

}  // namespace

TEST_CASE("materialize respects the cap") {
  CHECK(fixture::dense(R"j({"generators": {"degree": 3, "gens": ["(0 1 2)"]}})j")->order() == 3);
  CHECK(fixture::dense(R"({"symmetric": 4})")->order() == 24);
  CHECK(fixture::dense(R"({"alternating": 7})")->order() == 2520);
  try {
    fixture::dense(R"({"alternating": 8})");
    FAIL("expected OrderExceedsCap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_exceeds_cap);
  }
}

TEST_CASE("element table is canonical and closed") {
  for (const char* text : kSmallGroups) {
    CAPTURE(text);
    auto D = fixture::dense(text);
    auto spec = parse_spec(text);
    GenSet gens = build_generators(spec);
    oracle::ElementSet brute = oracle::closure(gens.degree, gens.gens);
    REQUIRE(D->order() == brute.size());
    CHECK(D->element(DenseGroup::identity_index).is_identity());
    Index i = 0;
    for (const auto& g : brute) {
      CHECK(D->element(i) == g);  // lexicographic order
      ++i;
    }
    for (Index a = 0; a < D->order(); a += 3)
      for (Index b = 0; b < D->order(); b += 5) {
        CHECK(D->element(D->mul(a, b)) == D->element(a) * D->element(b));
        CHECK(D->mul(a, D->inv(a)) == DenseGroup::identity_index);
      }
    CHECK(BsgsGroup::build(gens).order() == D->order());
  }
}

TEST_CASE("dense and BSGS orders agree on element lists") {
  for (const char* text : kSmallGroups) {
    auto D = fixture::dense(text);
    GenSet all{D->degree(), {}};
    for (Index i = 0; i < D->order(); ++i) all.gens.push_back(D->element(i));
    CHECK(BsgsGroup::build(all).order() == D->order());
  }
}

TEST_CASE("subgroup closure") {
  auto D = fixture::dense(R"({"symmetric": 4})");
  CHECK(subgroup_closure(*D, std::span<const Index>{}).order() == 1);
  CHECK(generated(*D, {"(0 1 2 3)"}).order() == 4);
  CHECK(generated(*D, {"(0 1)", "(2 3)"}).order() == 4);
  CHECK(is_closed(generated(*D, {"(0 1)", "(1 2 3)"})));
}

TEST_CASE("normalizer, centralizer and core against brute force") {
  auto S4 = fixture::dense(R"({"symmetric": 4})");
  auto S3 = fixture::dense(R"({"symmetric": 3})");
  CHECK(normalizer(generated(*S4, {"(0 1 2 3)"})).order() == 8);
  CHECK(normalizer(generated(*S3, {"(0 1)"})).order() == 2);
  auto V4 = generated(*S4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  CHECK(normalizer(V4).is_whole());

  auto D8 = generated(*S4, {"(0 1 2 3)", "(0 2)"});
  CHECK(core(D8).order() == 4);
  CHECK(core(D8) == V4);
  CHECK(core(V4) == V4);
  CHECK(core(generated(*S3, {"(0 1)"})).order() == 1);

  CHECK(center(*S3).order() == 1);
  auto [c, z] = centralizer_and_center(*S4, D8);
  CHECK(z.order() == 1);
  CHECK(centralizer(whole_group(*S4)) == center(*S4));
  auto D8dense = fixture::dense(R"j({"generators": {"degree": 4, "gens": ["(0 1 2 3)", "(0 2)"]}})j");
  CHECK(center(*D8dense).order() == 2);

  for (const char* text : kSmallGroups) {
    CAPTURE(text);
    auto D = fixture::dense(text);
    auto G = fixture::all_elements(*D);
    auto subs = enumerate_subgroups(*D);
    for (std::size_t k = 0; k < subs.size(); k += 2) {
      auto H = to_set(subs[k]);
      CHECK(to_set(normalizer(subs[k])) == oracle::normalizer(G, H));
      CHECK(to_set(centralizer(subs[k])) == oracle::centralizer(G, H));
      CHECK(to_set(core(subs[k])) == oracle::core(G, H));
    }
  }
}

TEST_CASE("core is the largest normal subgroup inside H") {
  for (const char* text : kSmallGroups) {
    auto D = fixture::dense(text);
    auto subs = enumerate_subgroups(*D);
    std::vector<SubgroupHandle> normals;
    for (const auto& H : subs)
      if (is_normal(H)) normals.push_back(H);
    for (const auto& H : subs) {
      auto C = core(H);
      CHECK(is_normal(C));
      CHECK(C.is_subgroup_of(H));
      for (const auto& N : normals)
        if (N.is_subgroup_of(H)) CHECK(N.is_subgroup_of(C));
    }
  }
}

TEST_CASE("quotients") {
  auto S4 = fixture::dense(R"({"symmetric": 4})");
  auto V4 = generated(*S4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  auto q = quotient(*S4, V4);
  CHECK(q.quotient->order() == 6);
  CHECK_FALSE(is_abelian(whole_group(*q.quotient)));
  CHECK(quotient(*S4, trivial_subgroup(*S4)).quotient->order() == 24);
  CHECK(quotient(*S4, whole_group(*S4)).quotient->order() == 1);
  for (Index a = 0; a < 24; ++a)
    for (Index b = 0; b < 24; ++b)
      CHECK(q.projection[S4->mul(a, b)] == q.quotient->mul(q.projection[a], q.projection[b]));
  try {
    quotient(*S4, generated(*S4, {"(0 1)"}));
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_normal);
  }
}

TEST_CASE("invariants on small groups") {
  auto C2S3 = fixture::dense(R"({"direct": [{"cyclic": 2}, {"symmetric": 3}]})");
  auto inv = invariants(*C2S3);
  CHECK(inv.hypercenter.order() == 2);
  CHECK(inv.center.order() == 2);

  auto S3 = invariants(*fixture::dense(R"({"symmetric": 3})"));
  CHECK(S3.fitting.order() == 3);
  CHECK(S3.is_metanilpotent);
  auto S4 = invariants(*fixture::dense(R"({"symmetric": 4})"));
  CHECK(S4.fitting.order() == 4);
  CHECK_FALSE(S4.is_metanilpotent);
  CHECK_FALSE(S4.odd_order);

  auto D8 = invariants(*fixture::dense(R"({"dihedral": 4})"));
  CHECK(D8.is_nilpotent);
  CHECK(D8.hypercenter.is_whole());
  CHECK(D8.fitting.is_whole());

  for (const char* text : kSmallGroups) {
    auto D = fixture::dense(text);
    auto g = invariants(*D);
    CHECK(g.center.is_subgroup_of(g.hypercenter));
    CHECK(g.hypercenter.is_subgroup_of(g.fitting));
    SubgroupHandle prod = trivial_subgroup(*D);
    for (const auto& [p, O] : g.p_cores) prod = join(prod, O);
    CHECK(prod == g.fitting);
    CHECK(g.is_nilpotent == g.fitting.is_whole());
  }
}

TEST_CASE("pi-cores") {
  auto S4 = fixture::dense(R"({"symmetric": 4})");
  CHECK(pi_core(*S4, {2, 3}).is_whole());
  CHECK(pi_core(*S4, {2}).order() == 4);
  CHECK(pi_core(*S4, {3}).order() == 1);
  CHECK(pi_core(*S4, {5}).order() == 1);
  for (const char* text : kSmallGroups) {
    auto D = fixture::dense(text);
    auto subs = enumerate_subgroups(*D);
    for (std::uint64_t p : D->primes()) {
      auto O = pi_core(*D, {p});
      SubgroupHandle expected = trivial_subgroup(*D);
      for (const auto& H : subs)
        if (is_normal(H) && is_pi_number(H.order(), {p})) expected = join(expected, H);
      CHECK(O == expected);
    }
  }
}

TEST_CASE("hypercenter equals the upper central series limit") {
  // Upper central series by quotients, as an independent route.
  for (const char* text : kSmallGroups) {
    auto D = fixture::dense(text);
    SubgroupHandle Z = trivial_subgroup(*D);
    while (true) {
      auto q = quotient(*D, Z);
      auto next = q.preimage(center(*q.quotient));
      if (next == Z) break;
      Z = next;
    }
    CHECK(hypercenter(*D) == Z);
  }
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(enumerate_subgroups(*fixture::dense(R"({"symmetric": 3})")).size() == 6);
  CHECK(enumerate_subgroups(*fixture::dense(R"({"symmetric": 4})")).size() == 30);
  CHECK(enumerate_subgroups(*fixture::dense(R"({"cyclic": 7})")).size() == 2);
  for (const char* text : kSmallGroups) {
    CAPTURE(text);
    auto D = fixture::dense(text);
    auto spec = parse_spec(text);
    GenSet gens = build_generators(spec);
    auto brute = oracle::all_subgroups(gens.degree, fixture::all_elements(*D));
    auto subs = enumerate_subgroups(*D);
    REQUIRE(subs.size() == brute.size());
    std::set<oracle::ElementSet> mine;
    for (const auto& H : subs) mine.insert(to_set(H));
    CHECK(mine == std::set<oracle::ElementSet>(brute.begin(), brute.end()));
  }
  try {
    enumerate_subgroups(*fixture::dense(R"({"symmetric": 6})"));
    FAIL("expected OrderExceedsCap");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_exceeds_cap);
  }
}

TEST_CASE("subgroup filters") {
  auto D = fixture::dense(R"({"symmetric": 4})");
  auto subs = enumerate_subgroups(*D);
  auto abelian = abelian_subgroups(subs);
  for (const auto& H : abelian) CHECK(is_abelian(H));
  // trivial, 9 of order 2, 4 of order 3, 3 cyclic of order 4, 4 Klein fours
  CHECK(abelian.size() == 21);
  auto maxnil = maximal_nilpotent_subgroups(subs);
  // three D8 and four C3 (each C3 is maximal nilpotent in Sym(4))
  CHECK(maxnil.size() == 7);
  CHECK(hall_subgroups(subs, {2}).size() == 3);
  CHECK(hall_subgroups(subs, {3}).size() == 4);
}

TEST_CASE("Lemma on right cosets and product sizes") {
  RngStream rng(7, 0);
  for (const char* text : kSmallGroups) {
    auto D = fixture::dense(text);
    auto subs = enumerate_subgroups(*D);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& H = subs[rng.below(subs.size())];
      const auto& K = subs[rng.below(subs.size())];
      std::set<std::vector<Index>> cosets_meeting_K;
      for (Index k : K.elements()) {
        auto c = right_coset(H, k);
        std::sort(c.begin(), c.end());
        cosets_meeting_K.insert(c);
      }
      CHECK(product_size(H, K) == H.order() * cosets_meeting_K.size());
      auto HK = intersect(H, K);
      for (Index g = 0; g < D->order(); ++g) {
        std::vector<Index> meet;
        for (Index x : right_coset(K, g))
          if (H.contains(x)) meet.push_back(x);
        if (meet.empty()) continue;
        auto c = right_coset(HK, meet.front());
        std::sort(c.begin(), c.end());
        CHECK(c == meet);
      }
    }
  }
}
