#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabreg/gset.hpp"
#include "stabreg/ratio.hpp"

namespace stabreg {

enum class TranslateClass : std::uint8_t { NearEmpty, NearFull, Both, Bad, Outside };

struct TranslateClassification {
  Ratio epsilon;
  std::size_t base_size = 0;
  /// Indexed by rank; translates outside the scanned domain are Outside.
  std::vector<TranslateClass> cls;
  std::vector<std::uint32_t> counts;  // |A ∩ (B + y)|
  std::size_t near_empty = 0, near_full = 0, both = 0, bad = 0;
  /// Set when some translate is both near-empty and near-full (needs ε ≥ 1/2).
  bool overlap_flag = false;
  std::optional<Rank> first_bad;
};

/// |A ∩ (B + y)| for every y; entries outside the domain are zero.
std::vector<std::uint32_t> translate_counts(const GSet& a, const GSet& b, const GSet* domain = nullptr);

/// y ranges over the domain (all of G by default).
TranslateClassification classify_translates(const GSet& a, const GSet& b, const Ratio& eps,
                                            const GSet* domain = nullptr);

struct GoodVerdict {
  bool good = false;
  std::optional<Rank> bad_witness;
};

GoodVerdict is_good(const GSet& a, const GSet& b, const Ratio& eps, const GSet* domain = nullptr);

/// {x : |(B + x) ∩ A| ≥ (1-ε)|B|}.
GSet full_translate_set(const GSet& a, const GSet& b, const Ratio& eps, const GSet* domain = nullptr);

struct ClosureCheck {
  bool holds = true;
  std::optional<Rank> violating;
  bool diagnostic = false;  // hypotheses failed; result is informational
  std::vector<std::string> warnings;
};

/// Checks I + <B'> ⊆ I, where I is the full translate set of B.
ClosureCheck check_I_closure(const GSet& a, const GSet& b, const GSet& b_inner, const Ratio& eps,
                             const GSet* domain = nullptr);

struct PeriodDefect {
  double defect = 0;
  double anchor = 0;  // μ_A * 1_{-A} at 0
};

/// max over x ∈ G, t ∈ T of |F(x+t) - F(x)| with F = μ_A * 1_{-A}.
PeriodDefect almost_period_defect(const GSet& a, const GSet& t);

}  // namespace stabreg
