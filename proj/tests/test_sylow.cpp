#include "doctest.h"
#include "fixtures.hpp"
#include "sylsync/arith.hpp"
#include "sylsync/bsgs.hpp"
#include "sylsync/subgroups.hpp"
#include "sylsync/sylow.hpp"

using namespace sylsync;
using fixture::to_set;

namespace {

const char* kGroups[] = {
    R"({"symmetric": 3})",
    R"({"symmetric": 4})",
    R"({"alternating": 4})",
    R"({"alternating": 5})",
    R"({"dihedral": 6})",
    R"({"direct": [{"symmetric": 3}, {"symmetric": 3}]})",
    R"({"gallery": "agl17"})",
    R"({"gallery": "v_rtimes_d8"})",
    R"({"gallery": "c7_by_c3"})",
};

BigInt legendre_part(std::size_t n, std::uint64_t p, bool halve) {
  BigInt order = factorial(n);
  if (halve) order /= 2;
  BigInt part = 1;
  while (order % p == 0) {
    order /= p;
    part *= p;
  }
  return part;
}

}  // namespace

TEST_CASE("Sylow systems match the brute-force subgroup lattice") {
  for (const char* text : kGroups) {
    CAPTURE(text);
    auto D = fixture::dense(text);
    GenSet gens = build_generators(parse_spec(text));
    auto G = fixture::all_elements(*D);
    auto lattice = oracle::all_subgroups(gens.degree, G);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      CAPTURE(p);
      auto S = sylow_dense(*D, p);
      auto brute = oracle::sylow_subgroups(lattice, D->order(), p);
      REQUIRE(S.count() == brute.size());
      std::set<oracle::ElementSet> mine;
      for (const auto& P : S.conjugates) mine.insert(to_set(P));
      CHECK(mine == std::set<oracle::ElementSet>(brute.begin(), brute.end()));
      CHECK(S.representative.order() == p_part(D->order(), p));
      CHECK(S.count() % p == 1 % p);
      CHECK(D->order() % S.count() == 0);
      CHECK(S.count() * S.normalizer.order() == D->order());
      CHECK(S.is_normal == (S.count() == 1));
      oracle::ElementSet meet = G;
      for (const auto& P : brute) meet = oracle::intersection(meet, P);
      CHECK(to_set(S.p_core) == meet);
      CHECK(S.p_core == core(S.representative));
      for (Index g = 0; g < D->order(); ++g) {
        std::size_t j = S.conjugate_of[g];
        CHECK(conjugate(S.representative, g) == S.conjugates[j]);
        for (std::size_t i = 0; i < S.count(); i += 2)
          CHECK(conjugate(S.conjugates[i], g) == S.conjugates[S.act(i, g)]);
      }
      for (std::size_t j = 0; j < S.count(); ++j)
        CHECK(S.normalizer_of(j) == normalizer(S.conjugates[j]));
    }
  }
}

TEST_CASE("Sylow examples") {
  auto S4 = fixture::dense(R"({"symmetric": 4})");
  auto s2 = sylow_dense(*S4, 2);
  CHECK(s2.representative.order() == 8);
  CHECK(s2.count() == 3);
  CHECK(s2.p_core.order() == 4);
  auto s3 = sylow_dense(*S4, 3);
  CHECK(s3.representative.order() == 3);
  CHECK(s3.count() == 4);
  CHECK(s3.p_core.order() == 1);
  auto s5 = sylow_dense(*S4, 5);
  CHECK(s5.representative.is_trivial());
  CHECK(s5.count() == 1);
}

TEST_CASE("O_p of Sym(n) is trivial for n from 5 to 8") {
  Caps caps;
  caps.dense_cap = 40320;
  for (std::size_t n = 5; n <= 8; ++n) {
    auto D = build_dense(GroupSpec::symmetric(n), caps);
    for (std::uint64_t p : D->primes()) CHECK(sylow_dense(*D, p).p_core.is_trivial());
  }
}

TEST_CASE("sym_sylow and alt_sylow orders follow Legendre") {
  CHECK(BsgsGroup::build(sym_sylow(4, 2)).order() == 8);
  CHECK(BsgsGroup::build(sym_sylow(9, 3)).order() == 81);
  CHECK(BsgsGroup::build(sym_sylow(6, 2)).order() == 16);
  CHECK(BsgsGroup::build(alt_sylow(5, 2)).order() == 4);
  CHECK(BsgsGroup::build(alt_sylow(6, 2)).order() == 8);
  auto a93 = alt_sylow(9, 3);
  CHECK(BsgsGroup::build(a93).order() == 81);
  for (const auto& g : a93.gens) CHECK(g.is_even());

  for (std::size_t n = 1; n <= 40; ++n)
    for (std::uint64_t p : primes_up_to(37)) {
      CAPTURE(n);
      CAPTURE(p);
      GenSet s = sym_sylow(n, p);
      CHECK(BsgsGroup::build(s).order() == legendre_part(n, p, false));
      if (n >= 3) {
        GenSet a = alt_sylow(n, p);
        for (const auto& g : a.gens) CHECK(g.is_even());
        CHECK(BsgsGroup::build(a).order() == legendre_part(n, p, true));
      }
    }
}

TEST_CASE("sym_sylow is a Sylow subgroup of the full symmetric group") {
  Caps caps;
  caps.dense_cap = 5040;
  for (std::size_t n = 3; n <= 7; ++n) {
    auto D = build_dense(GroupSpec::symmetric(n), caps);
    for (std::uint64_t p : D->primes()) {
      GenSet s = sym_sylow(n, p);
      std::vector<Index> seeds;
      for (const auto& g : s.gens) seeds.push_back(D->index_of(g));
      CHECK(subgroup_closure(*D, seeds).order() == p_part(D->order(), p));
    }
  }
}

TEST_CASE("both even-part routes agree") {
  for (std::size_t n = 3; n <= 24; ++n) {
    CAPTURE(n);
    GenSet s = sym_sylow(n, 2);
    auto a = BsgsGroup::build(even_part_by_enumeration(s));
    auto b = BsgsGroup::build(even_part_by_schreier(s));
    CHECK(a.order() == b.order());
    for (const auto& g : a.strong_generators().gens) CHECK(b.contains(g));
  }
}

TEST_CASE("intersection profiles") {
  auto S4 = fixture::dense(R"({"symmetric": 4})");
  auto prof = intersection_profile(*S4, sylow_dense(*S4, 2));
  CHECK(prof.distinct_intersections.size() == 2);
  CHECK(prof.minimal_set.size() == 1);
  CHECK(prof.min_order == 4);

  auto S3 = fixture::dense(R"({"symmetric": 3})");
  auto p3 = intersection_profile(*S3, sylow_dense(*S3, 2));
  CHECK(p3.min_order == 1);
  auto n3 = intersection_profile(*S3, sylow_dense(*S3, 3));
  CHECK(n3.distinct_intersections.size() == 1);
  CHECK(n3.min_order == 3);

  for (const char* text : kGroups) {
    auto D = fixture::dense(text);
    auto G = fixture::all_elements(*D);
    for (std::uint64_t p : D->primes()) {
      auto S = sylow_dense(*D, p);
      auto prof = intersection_profile(*D, S);
      // brute force over all conjugators
      auto P = to_set(S.representative);
      std::set<oracle::ElementSet> all;
      for (const auto& g : G) all.insert(oracle::intersection(P, oracle::conjugate_set(P, g)));
      std::set<oracle::ElementSet> mine;
      for (const auto& I : prof.distinct_intersections) {
        mine.insert(to_set(I));
        CHECK(S.p_core.is_subgroup_of(I));
      }
      CHECK(mine == all);
      std::set<oracle::ElementSet> minimal;
      for (const auto& A : all) {
        bool is_min = true;
        for (const auto& B : all)
          if (B != A && oracle::subset(B, A)) is_min = false;
        if (is_min) minimal.insert(A);
      }
      std::set<oracle::ElementSet> mine_min;
      for (const auto& I : prof.minimal_set) mine_min.insert(to_set(I));
      CHECK(mine_min == minimal);
      bool core_present = all.count(to_set(S.p_core)) > 0;
      CHECK(core_present == (prof.min_order == S.p_core.order()));
    }
  }
}

TEST_CASE("P ∩ P^g depends only on the coset N(P)g") {
  for (const char* text : kGroups) {
    auto D = fixture::dense(text);
    for (std::uint64_t p : D->primes()) {
      auto S = sylow_dense(*D, p);
      for (Index g = 0; g < D->order(); g += 3)
        for (Index h : S.normalizer.elements()) {
          auto a = intersect(S.representative, conjugate(S.representative, D->mul(h, g)));
          auto b = intersect(S.representative, conjugate(S.representative, g));
          CHECK(a == b);
        }
    }
  }
}
