#pragma once

#include <vector>

#include "stabreg/gset.hpp"

namespace stabreg {

class Subgroup {
 public:
  /// Trivial subgroup {0}.
  explicit Subgroup(const Group& g);
  static Subgroup whole(const Group& g);

  const Group& group() const { return members_.group(); }
  const GSet& members() const { return members_; }
  const std::vector<Rank>& generators() const { return gens_; }
  std::size_t size() const { return members_.size(); }
  std::size_t index() const { return group().order() / members_.size(); }
  bool contains(Rank r) const { return members_.contains(r); }

  /// Smallest subgroup containing *this and s.
  Subgroup extend(Rank s) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  GSet members_;
  std::vector<Rank> gens_;
};

Subgroup span(const Group& g, const std::vector<Rank>& s);
Subgroup span(const GSet& s);

/// Full scan: contains zero, closed under addition and negation.
bool is_subgroup(const GSet& s);

/// All subgroups ordered by index, ties by bitmap order.
std::vector<Subgroup> enumerate_subgroups(const Group& g, std::size_t cap = 4096);

/// Minimum-rank representative of each coset, ascending.
std::vector<Rank> cosets(const Subgroup& h);
Rank quotient_class(const Subgroup& h, Rank x);
GSet coset(const Subgroup& h, Rank x);

/// Elements of G whose phase vanishes on every member of H.
GSet annihilator(const Subgroup& h);

}  // namespace stabreg
