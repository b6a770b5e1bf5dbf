#include "stabreg/goodness.hpp"

#include <cmath>

#include "stabreg/fourier.hpp"

namespace stabreg {

namespace {
constexpr std::size_t kDirectWork = std::size_t{1} << 26;
}  // namespace

std::vector<std::uint32_t> translate_counts(const GSet& a, const GSet& b, const GSet* domain) {
  const Group& g = a.group();
  const std::size_t n = g.order();
  std::vector<std::uint32_t> c(n, 0);
  if (b.size() * n <= kDirectWork || n <= 4096) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto yr = static_cast<Rank>(y);
      if (domain && !domain->contains(yr)) continue;
      c[y] = static_cast<std::uint32_t>(a.intersection_size(b.translate(yr)));
    }
    return c;
  }
  // |A ∩ (B+y)| = |G| (1_A * 1_{-B})(y).
  const auto conv = convolve(indicator(a), indicator(b.negate()));
  for (std::size_t y = 0; y < n; ++y) {
    if (domain && !domain->contains(static_cast<Rank>(y))) continue;
    c[y] = static_cast<std::uint32_t>(std::llround(conv.values[y].real() * static_cast<double>(n)));
  }
  return c;
}

TranslateClassification classify_translates(const GSet& a, const GSet& b, const Ratio& eps, const GSet* domain) {
  if (b.empty()) throw Error("classification against an empty set");
  TranslateClassification tc;
  tc.epsilon = eps;
  tc.base_size = b.size();
  tc.counts = translate_counts(a, b, domain);
  tc.cls.assign(tc.counts.size(), TranslateClass::Outside);
  const std::size_t nb = b.size();
  for (std::size_t y = 0; y < tc.counts.size(); ++y) {
    if (domain && !domain->contains(static_cast<Rank>(y))) continue;
    const std::size_t c = tc.counts[y];
    const bool empty = eps.count_le(c, nb);
    const bool full = eps.count_le(nb - c, nb);
    if (empty && full) {
      tc.cls[y] = TranslateClass::Both;
      ++tc.both;
      tc.overlap_flag = true;
    } else if (empty) {
      tc.cls[y] = TranslateClass::NearEmpty;
      ++tc.near_empty;
    } else if (full) {
      tc.cls[y] = TranslateClass::NearFull;
      ++tc.near_full;
    } else {
      tc.cls[y] = TranslateClass::Bad;
      ++tc.bad;
      if (!tc.first_bad) tc.first_bad = static_cast<Rank>(y);
    }
  }
  return tc;
}

GoodVerdict is_good(const GSet& a, const GSet& b, const Ratio& eps, const GSet* domain) {
  const auto tc = classify_translates(a, b, eps, domain);
  return {tc.bad == 0, tc.first_bad};
}

GSet full_translate_set(const GSet& a, const GSet& b, const Ratio& eps, const GSet* domain) {
  if (b.empty()) throw Error("full translate set of an empty set");
  const auto c = translate_counts(a, b, domain);
  GSet out(a.group());
  for (std::size_t y = 0; y < c.size(); ++y) {
    if (domain && !domain->contains(static_cast<Rank>(y))) continue;
    if (eps.count_ge_complement(c[y], b.size())) out.insert(static_cast<Rank>(y));
  }
  return out;
}

ClosureCheck check_I_closure(const GSet& a, const GSet& b, const GSet& b_inner, const Ratio& eps, const GSet* domain) {
  ClosureCheck res;
  if (!(eps < Ratio(1, 3))) {
    res.diagnostic = true;
    res.warnings.push_back("epsilon is not below 1/3");
  }
  if (!is_good(a, b, eps, domain).good) {
    res.diagnostic = true;
    res.warnings.push_back("B is not epsilon-good for A");
  }
  const GSet I = full_translate_set(a, b, eps, domain);
  const Group& g = a.group();
  // I + B' ⊆ I already forces I + <B'> ⊆ I.
  I.for_each([&](Rank x) {
    if (!res.holds) return;
    b_inner.for_each([&](Rank s) {
      if (res.holds && !I.contains(g.add(x, s))) {
        res.holds = false;
        res.violating = x;
      }
    });
  });
  return res;
}

PeriodDefect almost_period_defect(const GSet& a, const GSet& t) {
  if (a.empty()) throw Error("almost-period defect of an empty set");
  const auto f = convolve(char_measure(a), indicator(a.negate()));
  PeriodDefect pd;
  pd.anchor = f.values[0].real();
  if (std::abs(pd.anchor - 1.0) > 1e-9) throw Error("convolution anchor differs from 1");
  const Group& g = a.group();
  t.for_each([&](Rank s) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto xr = static_cast<Rank>(x);
      pd.defect = std::max(pd.defect, std::abs(f.values[g.add(xr, s)] - f.values[xr]));
    }
  });
  return pd;
}

}  // namespace stabreg
