#pragma once

// Brute-force reference implementations. They rely only on Group arithmetic
// and plain containers, never on the modules they are used to check.

#include <optional>
#include <vector>

#include "stabreg/bohr.hpp"
#include "stabreg/fourier.hpp"
#include "stabreg/gset.hpp"
#include "stabreg/ratio.hpp"
#include "stabreg/stability.hpp"

namespace stabreg::oracle {

/// O(|G|^2) transform; |G| ≤ 4096.
Spectrum naive_dft(const DenseFunction& f);
/// Direct double sum E_y f(y) g(x-y).
DenseFunction naive_convolve(const DenseFunction& f, const DenseFunction& g);

enum class OrderVerdict { Found, NotFound, Capped };

struct OrderOracle {
  OrderVerdict verdict = OrderVerdict::NotFound;
  std::optional<OrderWitness> witness;
};

/// Enumerates a_1 = 0, a_2..a_k and checks each b_j on its own.
OrderOracle brute_order_search(const GSet& a, int k, double work_cap = 2e8);

/// Second exact oracle for sizes beyond the enumeration cap: fixes b_1 = 0,
/// extends b_2..b_k and keeps, per i, the set of admissible a_i, abandoning a
/// prefix once one of them is empty.
OrderOracle region_order_search(const GSet& a, int k);

/// Evaluates the regularity definition at `gridpoints` values of ε.
/// false means the grid refutes regularity.
bool grid_regularity(const BohrSet& b, int gridpoints = 10000);

/// Every subgroup, as sorted member lists; |G| ≤ 64.
std::vector<std::vector<Rank>> brute_subgroups(const Group& g);

struct Recount {
  std::size_t near_empty = 0, near_full = 0, both = 0, bad = 0;
  std::optional<Rank> first_bad;
};

Recount recount_goodness(const GSet& a, const GSet& b, const Ratio& eps);

/// max_{x, t ∈ T} | |A∩(A+x+t)| - |A∩(A+x)| | / |A|.
double brute_period_defect(const GSet& a, const GSet& t);

}  // namespace stabreg::oracle
