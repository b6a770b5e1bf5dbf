#include "stabreg/ledger.hpp"

#include <cmath>

#include "stabreg/group.hpp"

namespace stabreg {

namespace {

Magnitude default_d(int k, long long d, const Constants& c) {
  const Magnitude f = f_iter(k, static_cast<int>(std::min<long long>(d + 2, 1000)));
  const double lin = 6.0 * static_cast<double>(d + 2) * std::pow(6.0, static_cast<double>(d + 2)) + 1;
  const double small = std::max({c.C1, 1.0 / c.C2, lin});
  if (!f.finite()) {
    return Magnitude::symbolic("max{C1, 1/C2, " + f.str() + ", " + Magnitude::real(lin).str() + "}");
  }
  return f.log10() >= std::log10(small) ? f : Magnitude::real(small);
}

}  // namespace

ParameterLedger theoretical_bounds(int k, const Ratio& eps, double r, const Constants& c) {
  if (eps.num() == 0) throw Error("epsilon must be positive");
  if (!(r > 0 && r <= 1)) throw Error("r must lie in (0, 1]");
  ParameterLedger L;
  L.k = k;
  L.epsilon = eps;
  L.r = r;
  L.constants = c;
  L.m = (eps.den() + eps.num() - 1) / eps.num();
  L.depth_cap = tree_height_cap(k);
  L.D = c.D ? Magnitude::real(*c.D) : default_d(k, L.depth_cap, c);
  const auto dm = static_cast<double>(L.m);
  for (long long t = -1; t <= L.depth_cap; ++t) L.ell.emplace_back(static_cast<int>(t), ell(static_cast<int>(t), L.D, dm, r));

  const double mu = eps.value();
  const double lb = log_bullet(1.0 / r);
  if (L.D.finite() && L.D.kind() != Magnitude::Kind::Log10) {
    const double D = L.D.to_double();
    // (D log_•(1/r) / μF)^D and r (Fμ / D log_•(1/r))^D
    const double lg = D * std::log10(D * lb / (mu * c.F));
    L.rank_target = Magnitude::from_log10(lg);
    L.width_target = Magnitude::real(r * std::pow(10.0, -lg));
  } else {
    L.rank_target = Magnitude::symbolic("(D*log(1/r)+1)/(mu*F))^D with D = " + L.D.str());
    L.width_target = Magnitude::symbolic("r*(F*mu/(D*(log(1/r)+1)))^D with D = " + L.D.str());
  }
  // exp(μ^-M)
  L.index_target = Magnitude::from_log10(std::pow(mu, -c.M) / std::log(10.0));
  return L;
}

}  // namespace stabreg
