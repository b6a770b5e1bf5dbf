#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "stabreg/bohr.hpp"
#include "stabreg/goodness.hpp"
#include "stabreg/ledger.hpp"
#include "stabreg/stability.hpp"
#include "stabreg/subgroup.hpp"

namespace stabreg {

struct EngineOptions {
  /// Stability index used to size the tree; computed (capped) when absent.
  std::optional<int> k_assumed;
  int k_cap = 5;
  /// Overrides tree_height_cap(k) + 1.
  std::optional<int> depth_cap;
  std::uint64_t budget_nodes = 4096;
  double budget_seconds = 0;  // 0 disables the wall-clock cap
  /// Largest number of spectral frequencies added per density step.
  int j_max = 3;
  /// Widths rho / 2^i for i = 1..width_steps are tried per density step.
  int width_steps = 6;
  Constants constants;
};

struct DensityResult {
  std::optional<BohrSet> bohr;
  Rank x = 0;
  /// Best |S ∩ (B' + x)| / |B'| seen, for diagnostics on failure.
  double best_density = 0;
  std::string diagnostic;
  int j = 0, i = 0;
};

/// Regular B' ⊆ B and x with |S ∩ (B' + x)| ≥ (1-η)|B'|, translates over B's ambient set.
DensityResult density_translate_search(const GSet& s, const BohrSet& b, const Ratio& eta,
                                       const EngineOptions& opt = {});

enum class OutcomeKind { Certificate, Instability, Inconclusive };
const char* to_string(OutcomeKind k);

struct GoodStructureCertificate {
  enum class Kind { Bohr, Subgroup } kind = Kind::Bohr;
  std::optional<BohrSet> bohr;
  std::optional<Subgroup> subgroup;
  Ratio epsilon;
  TranslateClassification classification;
  /// Tree node at which the structure was found.
  std::string node;
  /// The structure is {0}, which is good for every set.
  bool trivial = false;

  const GSet& members() const { return bohr ? bohr->members() : subgroup->members(); }
};

struct EngineOutcome {
  OutcomeKind kind = OutcomeKind::Inconclusive;
  std::optional<GoodStructureCertificate> certificate;
  std::optional<TreeWitness> witness;
  std::string reason;  // for Inconclusive
  std::vector<std::string> diagnostics;
  int k_assumed = 2;
  int depth_cap = 0;
  int depth_reached = 0;
  std::uint64_t nodes_expanded = 0;
  ParameterLedger ledger;
};

/// Bohr-set regularity search. ε is the goodness level of the certificate;
/// the tree runs its density steps at ε/2. With a domain, A is taken inside H.
EngineOutcome find_good_bohr(const GSet& a, const Ratio& eps, double r, const EngineOptions& opt = {},
                             const std::optional<Subgroup>& domain = std::nullopt);

struct SubgroupTranslate {
  std::optional<Subgroup> subgroup;
  Rank x = 0;
  std::string diagnostic;
};

/// H' ≤ H and x with |A ∩ (H' + x)| ≥ (1-ε)|H'|.
SubgroupTranslate dense_subgroup_translate(const GSet& a, const Subgroup& h, const Ratio& eps,
                                           const EngineOptions& opt = {});

enum class SubgroupMode { Enumerate, Constructive };

EngineOutcome find_good_subgroup(const GSet& a, const Ratio& mu, SubgroupMode mode,
                                 const EngineOptions& opt = {});

struct Decomposition {
  Subgroup h;
  std::vector<Rank> j;  // coset representatives
  double defect = 0;
  EngineOutcome outcome;
};

std::optional<Decomposition> decompose(const GSet& a, const Ratio& eps, SubgroupMode mode = SubgroupMode::Enumerate,
                                       const EngineOptions& opt = {});

/// Stability index used to size the tree when none is given.
int resolve_k(const GSet& a, const EngineOptions& opt);

}  // namespace stabreg
