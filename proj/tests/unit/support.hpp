#pragma once

#include <random>
#include <vector>

#include "stabreg/gset.hpp"

namespace testing {

using stabreg::Group;
using stabreg::GSet;
using stabreg::Rank;

inline GSet set_of(const Group& g, std::initializer_list<Rank> ranks) {
  std::vector<Rank> v(ranks);
  return GSet::from_ranks(g, v);
}

inline GSet interval(const Group& g, Rank lo, Rank hi) {
  GSet s(g);
  for (Rank r = lo; r < hi; ++r) s.insert(r);
  return s;
}

inline GSet random_set(const Group& g, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution coin(p);
  return GSet::from_predicate(g, [&](Rank) { return coin(rng); });
}

/// Cyclic or two-factor group with order at most max_order.
inline Group random_group(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> kind(0, 2);
  if (kind(rng) == 0 || max_order < 4) {
    std::uniform_int_distribution<int> n(2, max_order);
    return Group::cyclic(n(rng));
  }
  std::uniform_int_distribution<int> n1(2, std::max(2, max_order / 2));
  const int a = n1(rng);
  std::uniform_int_distribution<int> n2(2, std::max(2, max_order / a));
  return Group({a, n2(rng)});
}

}  // namespace testing
