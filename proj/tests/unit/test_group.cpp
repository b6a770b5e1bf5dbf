#include <doctest.h>

#include <algorithm>
#include <complex>

#include "stabreg/oracles.hpp"
#include "stabreg/subgroup.hpp"
#include "support.hpp"

using namespace stabreg;

TEST_CASE("rank is row-major mixed radix") {
  const Group g({4, 3});
  CHECK(g.rank(Element{{0, 0}}) == 0);
  CHECK(g.rank(Element{{1, 2}}) == 5);
  for (std::size_t i = 0; i < g.order(); ++i) CHECK(g.rank(g.unrank(i)) == i);
  CHECK_THROWS_AS(g.unrank(12), Error);
  CHECK_THROWS_AS(g.rank(Element{{4, 0}}), Error);
  CHECK_THROWS_AS(g.rank(Element{{1}}), Error);
}

TEST_CASE("group law") {
  const Group z12 = Group::cyclic(12);
  CHECK(z12.add(Rank{7}, Rank{8}) == 3);
  const Group g({4, 3});
  CHECK(g.neg(Element{{1, 2}}) == Element{{3, 1}});
  for (Rank x = 0; x < g.order(); ++x) {
    CHECK(g.add(x, 0) == x);
    CHECK(g.add(x, g.neg(x)) == 0);
    CHECK(g.sub(x, x) == 0);
    CHECK(g.times(3, x) == g.add(g.add(x, x), x));
    CHECK(g.times(-1, x) == g.neg(x));
  }
}

TEST_CASE("group law is associative and commutative on small groups") {
  for (const auto& m : std::vector<std::vector<int>>{{1}, {7}, {12}, {2, 2}, {4, 3}, {3, 3, 2}, {10, 10}}) {
    const Group g(m);
    const auto n = static_cast<Rank>(g.order());
    for (Rank x = 0; x < n; ++x)
      for (Rank y = 0; y < n; ++y) {
        REQUIRE(g.add(x, y) == g.add(y, x));
        REQUIRE(g.rank(g.add(g.unrank(x), g.unrank(y))) == g.add(x, y));
        if (n <= 20)
          for (Rank z = 0; z < n; ++z) REQUIRE(g.add(g.add(x, y), z) == g.add(x, g.add(y, z)));
      }
  }
}

TEST_CASE("characters") {
  const Group z4 = Group::cyclic(4);
  CHECK(std::abs(z4.char_eval(0, 3) - std::complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(z4.char_eval(1, 1) - std::complex<double>(0, 1)) < 1e-12);
  const Group z6 = Group::cyclic(6);
  CHECK(std::abs(z6.char_eval(2, 3) - std::complex<double>(1, 0)) < 1e-12);
  CHECK(z6.phase(2, 3) == 0);

  const Group g({4, 6});
  CHECK(g.phase_modulus() == 12);
  for (Rank c = 0; c < g.order(); ++c)
    for (Rank x = 0; x < g.order(); ++x) {
      const auto v = g.char_eval(c, x);
      REQUIRE(std::abs(std::abs(v) - 1.0) < 1e-12);
      const Rank y = static_cast<Rank>((x * 7 + 5) % g.order());
      REQUIRE(std::abs(g.char_eval(c, g.add(x, y)) - v * g.char_eval(c, y)) < 1e-12);
      REQUIRE(std::abs(g.char_eval(g.character(c), g.unrank(x)) - v) < 1e-12);
    }
}

TEST_CASE("character orthogonality") {
  for (const auto& m : std::vector<std::vector<int>>{{512}, {16, 32}, {7, 9}, {2, 2, 2, 2, 2}}) {
    const Group g(m);
    for (Rank c = 1; c < g.order(); ++c) {
      std::complex<double> s = 0;
      for (Rank x = 0; x < g.order(); ++x) s += g.char_eval(c, x);
      REQUIRE(std::abs(s) <= 1e-9 * static_cast<double>(g.order()));
    }
  }
}

TEST_CASE("formatting") {
  CHECK(Group({4, 3}).to_string() == "Z4xZ3");
  CHECK(Group({4, 3}).format(Rank{5}) == "(1,2)");
  CHECK(Group::cyclic(9).format(Rank{5}) == "5");
  CHECK_THROWS_AS(Group({0}), Error);
  CHECK(Group({1}).order() == 1);
  CHECK_THROWS_AS(Group({1 << 11, 1 << 10}), Error);
}

TEST_CASE("span") {
  const Group z12 = Group::cyclic(12);
  const auto h = span(z12, {4});
  CHECK(h.members().members() == std::vector<Rank>{0, 4, 8});
  CHECK(h.index() == 4);
  CHECK(span(z12, {}).size() == 1);
  const Group v4({2, 2});
  CHECK(span(v4, {v4.rank(Element{{1, 0}}), v4.rank(Element{{0, 1}})}).size() == 4);
}

TEST_CASE("subgroup enumeration") {
  CHECK(enumerate_subgroups(Group::cyclic(12)).size() == 6);
  CHECK(enumerate_subgroups(Group({2, 2})).size() == 5);

  for (const auto& m : std::vector<std::vector<int>>{
           {1}, {8, 2}, {3, 1}, {12}, {2, 2}, {4, 4}, {2, 2, 2}, {6, 6}, {3, 3}, {16, 4}, {2, 4, 8}, {64}, {5, 5}, {2, 2, 2, 2}}) {
    const Group g(m);
    INFO(g.to_string());
    const auto subs = enumerate_subgroups(g);
    auto brute = oracle::brute_subgroups(g);
    std::vector<std::vector<Rank>> got;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      CHECK(is_subgroup(subs[i].members()));
      got.push_back(subs[i].members().members());
      if (i > 0) {
        const auto& p = subs[i - 1];
        const bool ordered = p.index() < subs[i].index() ||
                             (p.index() == subs[i].index() && GSet::bitmap_less(p.members(), subs[i].members()));
        CHECK(ordered);
      }
    }
    std::sort(got.begin(), got.end());
    std::sort(brute.begin(), brute.end());
    CHECK(got == brute);
  }
}

TEST_CASE("span is the least enumerated subgroup containing the set") {
  std::mt19937_64 rng(11);
  for (const auto& m : std::vector<std::vector<int>>{{8, 2}, {4, 4}, {6, 6}, {2, 2, 2}, {60}}) {
    const Group g(m);
    const auto subs = enumerate_subgroups(g);
    for (int trial = 0; trial < 20; ++trial) {
      const GSet s = testing::random_set(g, rng, 0.08);
      GSet meet = GSet::full(g);
      for (const auto& h : subs)
        if (s.subset_of(h.members())) meet &= h.members();
      CHECK(span(s).members() == meet);
    }
  }
}

TEST_CASE("cosets") {
  const Group z12 = Group::cyclic(12);
  const auto h = span(z12, {3});
  CHECK(cosets(h) == std::vector<Rank>{0, 1, 2});
  for (Rank x : h.members().members()) CHECK(quotient_class(h, x) == 0);
  CHECK(quotient_class(h, 10) == 1);
  CHECK(coset(h, 1).members() == std::vector<Rank>{1, 4, 7, 10});
  const Group g({4, 3});
  const auto h2 = span(g, {g.rank(Element{{2, 0}})});
  CHECK(cosets(h2).size() == 6);
  for (Rank x = 0; x < g.order(); ++x)
    CHECK(quotient_class(h2, x) == quotient_class(h2, g.add(x, g.rank(Element{{2, 0}}))));
}

TEST_CASE("annihilator") {
  const Group z12 = Group::cyclic(12);
  CHECK(annihilator(span(z12, {3})).members() == std::vector<Rank>{0, 4, 8});
  const Group g({4, 2});
  const auto h = span(g, {g.rank(Element{{1, 0}})});
  const auto ann = annihilator(h);
  CHECK(ann.size() == 2);
  CHECK(ann.contains(g.rank(Element{{0, 1}})));
}
