#include "stabreg/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace stabreg {

namespace {

constexpr double kTol = 1e-12;

std::uint64_t max_q(const Group& g, Rank x, const std::vector<Rank>& freq) {
  const std::uint64_t L = g.phase_modulus();
  std::uint64_t best = 0;
  for (Rank chi : freq) {
    const std::uint64_t p = g.phase(chi, x);
    best = std::max(best, std::min(p, L - p));
  }
  return best;
}

double q_radius(std::uint64_t q, std::uint64_t L) {
  return 2.0 * std::sin(std::numbers::pi * static_cast<double>(q) / static_cast<double>(L));
}

bool q_within(std::uint64_t q, std::uint64_t L, double rho) {
  const double s = std::sin(std::numbers::pi * static_cast<double>(q) / static_cast<double>(L));
  return 4.0 * s * s <= rho * rho + kTol;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

double radius(const Group& g, Rank x, const std::vector<Rank>& freq) {
  return q_radius(max_q(g, x, freq), g.phase_modulus());
}

bool bohr_member(const Group& g, Rank x, const std::vector<Rank>& freq, double rho) {
  return q_within(max_q(g, x, freq), g.phase_modulus(), rho);
}

RadiusProfile::RadiusProfile(const Group& g, const std::vector<Rank>& freq, const GSet& domain)
    : lcm_(g.phase_modulus()) {
  std::map<std::uint64_t, std::size_t> counts;
  domain.for_each([&](Rank x) { ++counts[max_q(g, x, freq)]; });
  std::size_t run = 0;
  for (const auto& [q, c] : counts) {
    q_.push_back(q);
    values_.push_back(q_radius(q, lcm_));
    run += c;
    cum_.push_back(run);
  }
}

bool RadiusProfile::within(std::size_t i, double rho) const { return q_within(q_[i], lcm_, rho); }

std::size_t RadiusProfile::count_within(double rho) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < q_.size() && within(i, rho); ++i) n = cum_[i];
  return n;
}

BohrSet::BohrSet(const Group& g, std::vector<Rank> freq, double rho, std::optional<Subgroup> domain)
    : freq_(std::move(freq)), rho_(rho), domain_(std::move(domain)), members_(g) {
  if (!(rho > 0 && rho <= 2)) throw Error("Bohr width must lie in (0, 2]");
  for (Rank c : freq_)
    if (c >= g.order()) throw Error("character out of range");
  std::sort(freq_.begin(), freq_.end());
  freq_.erase(std::unique(freq_.begin(), freq_.end()), freq_.end());
  if (domain_ && !(domain_->group() == g)) throw Error("Bohr domain in a different group");
  const GSet amb = ambient();
  amb.for_each([&](Rank x) {
    if (bohr_member(g, x, freq_, rho_)) members_.insert(x);
  });
}

GSet BohrSet::ambient() const { return domain_ ? domain_->members() : GSet::full(group()); }

bool BohrSet::regular() const {
  if (!regular_) regular_ = regularity_report(*this).regular;
  return *regular_;
}

SizeBound size_bound_check(const BohrSet& b) {
  const double n = static_cast<double>(b.ambient().size());
  const double k = static_cast<double>(b.rank());
  const double target = std::pow(b.width() / (2 * std::numbers::pi), k) * n;
  SizeBound s;
  s.ratio = static_cast<double>(b.size()) / target;
  s.holds = static_cast<double>(b.size()) >= target * (1 - 1e-12);
  s.literal_ratio = static_cast<double>(b.size()) / (std::pow(b.width(), k) * n);
  return s;
}

RegularityReport regularity_report(const BohrSet& b) {
  RegularityReport rep;
  if (b.rank() == 0) return rep;
  const RadiusProfile prof(b.group(), b.freq(), b.ambient());
  const double rho = b.width();
  const double k100 = 100.0 * static_cast<double>(b.rank());
  const double eps_max = 1.0 / k100;
  const auto n = static_cast<double>(b.size());
  for (std::size_t i = 0; i < prof.distinct(); ++i) {
    const double v = prof.value(i);
    if (prof.within(i, rho)) {
      if (!(v > rho * (1 - eps_max))) continue;
      const double e = std::max(0.0, 1.0 - v / rho);
      const auto lower = static_cast<double>(prof.count_lt(i));
      if (lower < n * (1 - k100 * e)) {
        rep.regular = false;
        rep.failure = "lower: N-(" + fmt(v) + ")=" + std::to_string(prof.count_lt(i)) + " < " +
                      fmt(n * (1 - k100 * e)) + " at eps=" + fmt(e);
        return rep;
      }
    } else {
      if (!(v < rho * (1 + eps_max))) break;
      const double e = v / rho - 1.0;
      const auto upper = static_cast<double>(prof.count_le(i));
      if (upper > n * (1 + k100 * e)) {
        rep.regular = false;
        rep.failure = "upper: N(" + fmt(v) + ")=" + std::to_string(prof.count_le(i)) + " > " +
                      fmt(n * (1 + k100 * e)) + " at eps=" + fmt(e);
        return rep;
      }
    }
  }
  return rep;
}

bool is_regular(const BohrSet& b) { return b.regular(); }

namespace {

// Endpoints plus geometric means of adjacent profile values lying in [lo, hi].
std::vector<double> width_candidates(const RadiusProfile& prof, double lo, double hi) {
  std::vector<double> c{lo, hi};
  for (std::size_t i = 0; i + 1 < prof.distinct(); ++i) {
    const double a = prof.value(i), b = prof.value(i + 1);
    if (a <= 0) continue;
    const double m = std::sqrt(a * b);
    if (m > lo && m < hi) c.push_back(m);
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

WidthSearch find_regular_width(const Group& g, const std::vector<Rank>& freq, double rho,
                               const std::optional<Subgroup>& domain) {
  if (!(rho > 0 && rho <= 2)) throw Error("width must lie in (0, 2]");
  WidthSearch res;
  if (freq.empty()) {
    res.width = rho;
    res.candidates = {rho};
    return res;
  }
  const GSet amb = domain ? domain->members() : GSet::full(g);
  const RadiusProfile prof(g, freq, amb);
  res.candidates = width_candidates(prof, rho, std::min(2.0, 2 * rho));
  for (double w : res.candidates) {
    const BohrSet b(g, freq, w, domain);
    auto rep = regularity_report(b);
    if (rep.regular) {
      res.width = w;
      return res;
    }
    res.failures.push_back("rho=" + fmt(w) + ": " + rep.failure);
  }
  return res;
}

SubBohrResult sub_bohr(const BohrSet& b, double eps) {
  if (!(eps > 0 && eps < 1)) throw Error("sub_bohr needs eps in (0,1)");
  SubBohrResult res;
  if (b.rank() == 0) {
    res.pair = SubBohrPair(b, b, eps);
    return res;
  }
  if (!b.regular()) {
    res.diagnostic = "outer Bohr set is not regular";
    return res;
  }
  const double k = static_cast<double>(b.rank());
  const double lo = eps * b.width() / (400 * k), hi = eps * b.width() / (200 * k);
  const RadiusProfile prof(b.group(), b.freq(), b.ambient());
  res.candidates = width_candidates(prof, lo, hi);
  for (auto it = res.candidates.rbegin(); it != res.candidates.rend(); ++it) {
    BohrSet inner = b.with_width(*it);
    if (inner.regular()) {
      res.pair = SubBohrPair(b, std::move(inner), eps);
      return res;
    }
  }
  res.diagnostic = "no regular width in [" + fmt(lo) + ", " + fmt(hi) + "]";
  return res;
}

BohrSet closure(const SubBohrPair& p) {
  const BohrSet& b = p.outer();
  if (b.rank() == 0) return b;
  return b.with_width(std::min(2.0, b.width() + p.sigma()));
}

GSet sumset(const GSet& a, const GSet& b) {
  GSet out(a.group());
  const GSet& small = a.size() <= b.size() ? a : b;
  const GSet& big = a.size() <= b.size() ? b : a;
  small.for_each([&](Rank s) { out |= big.translate(s); });
  return out;
}

double closure_defect(const SubBohrPair& p) {
  const GSet plus = closure(p).members();
  const GSet sum = sumset(p.outer().members(), p.inner().members());
  return static_cast<double>((plus - sum).size()) / static_cast<double>(p.outer().size());
}

Subgroup bohr_span(const BohrSet& b) { return span(b.members()); }

}  // namespace stabreg
