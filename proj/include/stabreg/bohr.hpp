#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabreg/gset.hpp"
#include "stabreg/subgroup.hpp"

namespace stabreg {

/// max over γ ∈ K of |γ(x) - 1|.
double radius(const Group& g, Rank x, const std::vector<Rank>& freq);

/// Sorted distinct radii over a domain with cumulative counts.
///
/// Radii are grouped by the exact integer phase q = min(p, L - p), which
/// determines 2 sin(π q / L); two values are equal iff their q agree.
class RadiusProfile {
 public:
  RadiusProfile(const Group& g, const std::vector<Rank>& freq, const GSet& domain);

  std::size_t distinct() const { return values_.size(); }
  double value(std::size_t i) const { return values_[i]; }
  /// Number of domain points with radius ≤ value(i).
  std::size_t count_le(std::size_t i) const { return cum_[i]; }
  /// Number of domain points with radius < value(i).
  std::size_t count_lt(std::size_t i) const { return i == 0 ? 0 : cum_[i - 1]; }
  /// Membership rule for width rho applied to value(i).
  bool within(std::size_t i, double rho) const;
  /// N(rho) under the membership rule.
  std::size_t count_within(double rho) const;
  std::size_t total() const { return cum_.empty() ? 0 : cum_.back(); }

 private:
  std::vector<std::uint64_t> q_;
  std::vector<double> values_;
  std::vector<std::size_t> cum_;
  std::uint64_t lcm_;
};

/// x ∈ B(K, rho) iff 4 sin^2(π q/L) ≤ rho^2 + 1e-12 for every γ ∈ K.
bool bohr_member(const Group& g, Rank x, const std::vector<Rank>& freq, double rho);

class BohrSet {
 public:
  /// B(K, rho), optionally intersected with a subgroup used as the ambient group.
  BohrSet(const Group& g, std::vector<Rank> freq, double rho, std::optional<Subgroup> domain = std::nullopt);

  const Group& group() const { return members_.group(); }
  const std::vector<Rank>& freq() const { return freq_; }
  std::size_t rank() const { return freq_.size(); }
  double width() const { return rho_; }
  const GSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const std::optional<Subgroup>& domain() const { return domain_; }
  /// The ambient set: the domain subgroup or all of G.
  GSet ambient() const;

  /// Cached exact regularity verdict.
  bool regular() const;

  BohrSet with_width(double rho) const { return BohrSet(group(), freq_, rho, domain_); }

 private:
  std::vector<Rank> freq_;
  double rho_;
  std::optional<Subgroup> domain_;
  GSet members_;
  mutable std::optional<bool> regular_;
};

struct SizeBound {
  bool holds = false;
  double ratio = 0;          // |B| / ((rho/2π)^|K| |G|)
  double literal_ratio = 0;  // |B| / (rho^|K| |G|), reported only
};

SizeBound size_bound_check(const BohrSet& b);

struct RegularityReport {
  bool regular = true;
  std::string failure;  // first failing condition, empty when regular
};

RegularityReport regularity_report(const BohrSet& b);
bool is_regular(const BohrSet& b);

struct WidthSearch {
  std::optional<double> width;
  std::vector<double> candidates;
  std::vector<std::string> failures;
};

/// Least regular width among the candidates in [rho, 2 rho].
WidthSearch find_regular_width(const Group& g, const std::vector<Rank>& freq, double rho,
                               const std::optional<Subgroup>& domain = std::nullopt);

struct SubBohrResult;
SubBohrResult sub_bohr(const BohrSet& b, double eps);

/// B' ≺_ε B; only sub_bohr creates one.
class SubBohrPair {
 public:
  const BohrSet& outer() const { return outer_; }
  const BohrSet& inner() const { return inner_; }
  double epsilon() const { return eps_; }
  double sigma() const { return inner_.width(); }

 private:
  friend SubBohrResult sub_bohr(const BohrSet& b, double eps);
  SubBohrPair(BohrSet outer, BohrSet inner, double eps)
      : outer_(std::move(outer)), inner_(std::move(inner)), eps_(eps) {}

  BohrSet outer_;
  BohrSet inner_;
  double eps_;
};

struct SubBohrResult {
  std::optional<SubBohrPair> pair;
  std::vector<double> candidates;
  std::string diagnostic;
};

/// Largest regular sigma in [ε rho / 400|K|, ε rho / 200|K|]; K = ∅ gives B itself.
SubBohrResult sub_bohr(const BohrSet& b, double eps);

/// B+ = B(K, rho + sigma).
BohrSet closure(const SubBohrPair& p);
/// |B+ \ (B + B')| / |B|.
double closure_defect(const SubBohrPair& p);
GSet sumset(const GSet& a, const GSet& b);

Subgroup bohr_span(const BohrSet& b);

}  // namespace stabreg
