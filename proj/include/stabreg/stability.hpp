#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabreg/gset.hpp"

namespace stabreg {

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

enum class SearchStatus { Found, NotFound, BudgetExhausted };
enum class Verdict { True, False, Unknown };

const char* to_string(SearchStatus s);
const char* to_string(Verdict v);

/// a_i + b_j ∈ A iff i ≤ j, 0-based here.
struct OrderWitness {
  int k = 0;
  std::vector<Rank> a;
  std::vector<Rank> b;
};

/// Leaves keyed by strings in {0,1}^d, internal nodes by strings of length < d.
struct TreeWitness {
  int d = 0;
  std::map<std::string, Rank> a;
  std::map<std::string, Rank> b;
};

/// A - x when i = 1, (G \ A) - x when i = 0.
GSet neighborhood(const GSet& a, int i, Rank x);

struct OrderResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<OrderWitness> witness;
  std::uint64_t nodes = 0;
};

OrderResult find_order_property(const GSet& a, int k, std::uint64_t budget = kDefaultSearchBudget);
Verdict is_k_stable(const GSet& a, int k, std::uint64_t budget = kDefaultSearchBudget);

struct IndexResult {
  std::optional<int> index;  // empty when above cap or undecided
  bool above_cap = false;
  bool budget_exhausted = false;
  /// Witnesses of the k-order property for every k below the returned index.
  std::vector<OrderWitness> lower_witnesses;
  std::string diagnostic;
};

IndexResult stability_index(const GSet& a, int cap, std::uint64_t budget = kDefaultSearchBudget);

struct VcResult {
  std::optional<int> value;
  bool above_cap = false;
  bool budget_exhausted = false;
  std::vector<Rank> shattered;
};

VcResult vc_dimension(const GSet& a, int cap, std::uint64_t budget = kDefaultSearchBudget);

struct TreeResult {
  std::optional<int> value;
  bool above_cap = false;
  bool budget_exhausted = false;
  /// Tallest tree found: height value-1, or cap when above cap.
  TreeWitness witness;
};

TreeResult tree_bound(const GSet& a, int cap, std::uint64_t budget = kDefaultSearchBudget);
/// Cap above which a tree is impossible: 2^d distinct leaves must fit in G.
int tree_exact_cap(const Group& g);

bool verify_order_witness(const GSet& a, const OrderWitness& w);
bool verify_tree_witness(const GSet& a, const TreeWitness& t);

}  // namespace stabreg
