#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabreg/params.hpp"
#include "stabreg/ratio.hpp"

namespace stabreg {

/// Placeholder values for the unquantified constants. None are certified.
struct Constants {
  std::optional<double> D;  // derived from k when absent
  double F = 0.25;
  double C1 = 1.0;
  double C2 = 0.25;
  double M = 1.0;
  double Ck = 1.0;
};

struct ParameterLedger {
  int k = 2;
  Ratio epsilon;
  double r = 1.0;
  long long m = 1;  // ceil(1/epsilon)
  long long depth_cap = 0;
  Constants constants;
  Magnitude D;
  std::vector<std::pair<int, Magnitude>> ell;  // t = -1 .. depth_cap
  Magnitude rank_target;
  Magnitude width_target;
  Magnitude index_target;

  std::optional<std::size_t> achieved_rank;
  std::optional<double> achieved_width;
  std::optional<std::size_t> achieved_index;
};

ParameterLedger theoretical_bounds(int k, const Ratio& eps, double r, const Constants& c);

}  // namespace stabreg
