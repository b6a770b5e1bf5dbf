#include <doctest.h>

#include "stabreg/oracles.hpp"
#include "stabreg/params.hpp"
#include "stabreg/stability.hpp"
#include "stabreg/subgroup.hpp"
#include "support.hpp"

using namespace stabreg;
using testing::interval;
using testing::set_of;

TEST_CASE("neighborhoods") {
  const Group z12 = Group::cyclic(12);
  const GSet a = span(z12, {3}).members();
  CHECK(a.translate(0) == a);
  CHECK(neighborhood(a, 1, 1).members() == std::vector<Rank>{2, 5, 8, 11});
  for (Rank x = 0; x < 12; ++x) CHECK(neighborhood(a, 0, x) == neighborhood(a, 1, x).complement());
}

TEST_CASE("order property search") {
  const Group z16 = Group::cyclic(16);
  const GSet a = interval(z16, 0, 8);
  OrderWitness w{8, {}, {}};
  for (Rank i = 0; i < 8; ++i) {
    w.a.push_back(z16.neg(i));
    w.b.push_back(i);
  }
  CHECK(verify_order_witness(a, w));
  const auto r8 = find_order_property(a, 8);
  REQUIRE(r8.status == SearchStatus::Found);
  CHECK(verify_order_witness(a, *r8.witness));
  CHECK(find_order_property(a, 9).status == SearchStatus::NotFound);

  const Group z5 = Group::cyclic(5);
  const GSet b = set_of(z5, {0, 1});
  CHECK(verify_order_witness(b, OrderWitness{2, {0, 4}, {0, 1}}));
  CHECK(!verify_order_witness(b, OrderWitness{2, {0, 0}, {0, 1}}));
  CHECK(!verify_order_witness(b, OrderWitness{2, {0, 4}, {0}}));
  CHECK(find_order_property(b, 2).status == SearchStatus::Found);
  CHECK(is_k_stable(b, 2) == Verdict::False);
  CHECK(is_k_stable(b, 3) == Verdict::True);

  for (const GSet& s : {GSet(z16), GSet::full(z16)})
    for (int k = 2; k <= 5; ++k) {
      CHECK(find_order_property(s, k).status == SearchStatus::NotFound);
      CHECK(is_k_stable(s, k) == Verdict::True);
    }
  CHECK_THROWS_AS(find_order_property(a, 1), Error);
  CHECK(find_order_property(a, 8, 3).status == SearchStatus::BudgetExhausted);
  CHECK(is_k_stable(a, 8, 3) == Verdict::Unknown);
}

TEST_CASE("subgroups are 2-stable") {
  for (const auto& m : std::vector<std::vector<int>>{{12}, {4, 4}, {2, 6}}) {
    const Group g(m);
    for (const auto& h : enumerate_subgroups(g)) CHECK(is_k_stable(h.members(), 2) == Verdict::True);
  }
}

TEST_CASE("stability index") {
  const Group z12 = Group::cyclic(12);
  CHECK(stability_index(span(z12, {3}).members(), 5).index == 2);
  CHECK(stability_index(GSet::full(z12), 5).index == 2);
  const auto r = stability_index(set_of(Group::cyclic(5), {0, 1}), 5);
  CHECK(r.index == 3);
  REQUIRE(r.lower_witnesses.size() == 1);
  CHECK(r.lower_witnesses[0].k == 2);
  const auto capped = stability_index(interval(Group::cyclic(16), 0, 8), 5);
  CHECK(!capped.index);
  CHECK(capped.above_cap);
  CHECK(capped.lower_witnesses.size() == 4);
  CHECK_THROWS_AS(stability_index(GSet(z12), 1), Error);
}

TEST_CASE("VC dimension") {
  const Group z12 = Group::cyclic(12);
  CHECK(vc_dimension(span(z12, {3}).members(), 10).value == 1);
  CHECK(vc_dimension(GSet(z12), 10).value == 0);
  CHECK(vc_dimension(interval(Group::cyclic(16), 0, 8), 10).value == 2);
  const auto capped = vc_dimension(interval(Group::cyclic(16), 0, 8), 1);
  CHECK(capped.above_cap);
}

TEST_CASE("tree bound") {
  CHECK(tree_bound(GSet(Group::cyclic(6)), 5).value == 1);
  CHECK(tree_bound(set_of(Group::cyclic(4), {0, 2}), 5).value == 2);
  const Group z12 = Group::cyclic(12);
  CHECK(tree_bound(span(z12, {3}).members(), 5).value == 2);

  const GSet a = interval(Group::cyclic(16), 0, 8);
  const auto capped = tree_bound(a, 4);
  CHECK(capped.above_cap);
  CHECK(capped.witness.d == 4);
  CHECK(verify_tree_witness(a, capped.witness));
  const auto exact = tree_bound(a, tree_exact_cap(a.group()));
  CHECK(exact.value == 5);
  CHECK(verify_tree_witness(a, exact.witness));
  CHECK(tree_exact_cap(Group::cyclic(16)) == 5);
  CHECK(tree_exact_cap(Group::cyclic(15)) == 4);

  // Height-1 tree: a_1 + b ∈ A, a_0 + b ∉ A.
  const Group z5 = Group::cyclic(5);
  const GSet b = set_of(z5, {0, 1});
  TreeWitness t{1, {{"1", 0}, {"0", 2}}, {{"", 1}}};
  CHECK(verify_tree_witness(b, t));
  t.a["0"] = 4;
  CHECK(!verify_tree_witness(b, t));
  CHECK(!verify_tree_witness(b, TreeWitness{1, {{"1", 0}}, {{"", 1}}}));
}

TEST_CASE("exhaustive agreement with the brute-force order oracle") {
  for (int n = 1; n <= 8; ++n) {
    const Group g = Group::cyclic(n);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      const GSet a = GSet::from_predicate(g, [&](Rank r) { return (mask >> r) & 1U; });
      for (int k = 2; k <= 4; ++k) {
        const auto fast = find_order_property(a, k);
        const auto brute = oracle::brute_order_search(a, k);
        REQUIRE(brute.verdict != oracle::OrderVerdict::Capped);
        REQUIRE((fast.status == SearchStatus::Found) == (brute.verdict == oracle::OrderVerdict::Found));
        if (fast.witness) REQUIRE(verify_order_witness(a, *fast.witness));
        if (brute.witness) REQUIRE(verify_order_witness(a, *brute.witness));
      }
    }
  }
}

TEST_CASE("region oracle agrees with the enumeration oracle") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 150; ++i) {
    const Group g = testing::random_group(rng, 12);
    const GSet a = testing::random_set(g, rng, 0.5);
    for (int k = 2; k <= 4; ++k) {
      const auto brute = oracle::brute_order_search(a, k);
      const auto region = oracle::region_order_search(a, k);
      REQUIRE(brute.verdict != oracle::OrderVerdict::Capped);
      REQUIRE(region.verdict == brute.verdict);
      if (region.witness) REQUIRE(verify_order_witness(a, *region.witness));
    }
  }
}

TEST_CASE("index relations on random small instances") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 120; ++t) {
    const Group g = testing::random_group(rng, 20);
    const GSet a = testing::random_set(g, rng, 0.4);
    const auto idx = stability_index(a, 8);
    REQUIRE(idx.index);
    const int k = *idx.index;
    for (const auto& w : idx.lower_witnesses) REQUIRE(verify_order_witness(a, w));
    const auto vc = vc_dimension(a, 8);
    REQUIRE(vc.value);
    CHECK(*vc.value <= k - 1);
    const auto tb = tree_bound(a, tree_exact_cap(g));
    REQUIRE(tb.value);
    CHECK(*tb.value <= tree_height_cap(k));
    CHECK(verify_tree_witness(a, tb.witness));
    const Rank x = static_cast<Rank>(rng() % g.order());
    const auto shifted = stability_index(a.translate(x), 9);
    REQUIRE(shifted.index);
    CHECK(*shifted.index <= k + 1);
    const GSet b = testing::random_set(g, rng, 0.5);
    const auto ib = stability_index(b, 8);
    const auto iab = stability_index(a & b, 8);
    if (ib.index && iab.index) CHECK(BigInt(*iab.index) <= h(k, *ib.index));
  }
}

TEST_CASE("restriction to a subgroup does not raise the index") {
  for (int n : {6, 8, 9, 10}) {
    const Group g = Group::cyclic(n);
    for (std::uint32_t mask = 0; mask < (1U << n); mask += 3) {
      const GSet a = GSet::from_predicate(g, [&](Rank r) { return (mask >> r) & 1U; });
      const int k = *stability_index(a, 10).index;
      for (int d = 2; d < n; ++d) {
        if (n % d) continue;
        const Group h = Group::cyclic(n / d);
        const GSet ah = GSet::from_predicate(h, [&](Rank r) { return a.contains(static_cast<Rank>(r * d)); });
        REQUIRE(*stability_index(ah, 10).index <= k);
      }
    }
  }
}
