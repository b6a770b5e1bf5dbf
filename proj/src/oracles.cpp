#include "stabreg/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace stabreg::oracle {

namespace {

std::vector<char> bits(const GSet& s) {
  std::vector<char> v(s.universe(), 0);
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = s.contains(static_cast<Rank>(r)) ? 1 : 0;
  return v;
}

cplx character_value(const Group& g, const Element& chi, const Element& x) {
  double turns = 0;
  for (int i = 0; i < g.factors(); ++i) {
    const auto n = g.moduli()[static_cast<std::size_t>(i)];
    turns += static_cast<double>((static_cast<long long>(chi.coords[i]) * x.coords[i]) % n) / n;
  }
  return std::polar(1.0, 2 * std::numbers::pi * turns);
}

}  // namespace

Spectrum naive_dft(const DenseFunction& f) {
  const Group& g = f.group;
  if (g.order() > 4096) throw Error("naive_dft cap is |G| <= 4096");
  Spectrum out(g);
  const std::size_t n = g.order();
  for (std::size_t c = 0; c < n; ++c) {
    const Element chi = g.unrank(c);
    cplx s = 0;
    for (std::size_t x = 0; x < n; ++x) s += f.values[x] * character_value(g, chi, g.unrank(x));
    out.coeffs[c] = s / static_cast<double>(n);
  }
  return out;
}

DenseFunction naive_convolve(const DenseFunction& f, const DenseFunction& h) {
  const Group& g = f.group;
  if (g.order() > 4096) throw Error("naive_convolve cap is |G| <= 4096");
  DenseFunction out(g);
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    cplx s = 0;
    for (std::size_t y = 0; y < n; ++y)
      s += f.values[y] * h.values[g.rank(g.add(g.unrank(x), g.neg(g.unrank(y))))];
    out.values[x] = s / static_cast<double>(n);
  }
  return out;
}

OrderOracle brute_order_search(const GSet& a, int k, double work_cap) {
  const Group& g = a.group();
  const std::size_t n = g.order();
  if (std::pow(static_cast<double>(n), k) * k * k > work_cap) return {OrderVerdict::Capped, std::nullopt};
  const auto in = bits(a);
  std::vector<Rank> as(static_cast<std::size_t>(k), 0);
  std::vector<Rank> bs(static_cast<std::size_t>(k), 0);
  // Odometer over a_2..a_k with a_1 fixed to 0.
  while (true) {
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      bool found = false;
      for (std::size_t y = 0; y < n && !found; ++y) {
        bool fits = true;
        for (int i = 0; i < k && fits; ++i)
          fits = (in[g.add(as[static_cast<std::size_t>(i)], static_cast<Rank>(y))] != 0) == (i <= j);
        if (fits) {
          found = true;
          bs[static_cast<std::size_t>(j)] = static_cast<Rank>(y);
        }
      }
      ok = found;
    }
    if (ok) return {OrderVerdict::Found, OrderWitness{k, as, bs}};
    int pos = k - 1;
    while (pos >= 1 && ++as[static_cast<std::size_t>(pos)] == n) as[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 1) break;
  }
  return {OrderVerdict::NotFound, std::nullopt};
}

namespace {

// Extends b_1..b_m by one more b. region[i] holds the admissible a_i:
// members of A - b_j for i <= j <= m and of the complement for j < i.
struct RegionSearch {
  const Group& g;
  const std::vector<char>& in;
  int k;
  std::vector<Rank> bs;

  std::vector<char> shifted(Rank b) const {
    std::vector<char> v(g.order());
    for (std::size_t x = 0; x < v.size(); ++x) v[x] = in[g.add(static_cast<Rank>(x), b)];
    return v;
  }

  std::optional<OrderWitness> extend(const std::vector<std::vector<char>>& region) {
    const int m = static_cast<int>(bs.size());
    if (m == k) {
      OrderWitness w{k, {}, bs};
      for (const auto& r : region) w.a.push_back(static_cast<Rank>(std::find(r.begin(), r.end(), 1) - r.begin()));
      return w;
    }
    for (std::size_t y = 0; y < g.order(); ++y) {
      const auto nb = shifted(static_cast<Rank>(y));
      std::vector<std::vector<char>> next = region;
      bool alive = true;
      for (int i = 0; i < m && alive; ++i) {
        bool any = false;
        for (std::size_t x = 0; x < nb.size(); ++x) {
          next[static_cast<std::size_t>(i)][x] &= nb[x];
          any = any || next[static_cast<std::size_t>(i)][x];
        }
        alive = any;
      }
      if (!alive) continue;
      // New row: inside A - y, outside every earlier A - b_j.
      std::vector<char> row = nb;
      for (Rank b : bs) {
        const auto old = shifted(b);
        for (std::size_t x = 0; x < row.size(); ++x) row[x] &= !old[x];
      }
      if (std::find(row.begin(), row.end(), 1) == row.end()) continue;
      next.push_back(row);
      bs.push_back(static_cast<Rank>(y));
      if (auto w = extend(next)) return w;
      bs.pop_back();
      if (m == 0) break;  // b_1 = 0 by translation
    }
    return std::nullopt;
  }
};

}  // namespace

OrderOracle region_order_search(const GSet& a, int k) {
  if (k < 2) throw Error("order oracle needs k >= 2");
  const auto in = bits(a);
  RegionSearch s{a.group(), in, k, {}};
  auto w = s.extend({});
  if (w) return {OrderVerdict::Found, w};
  return {OrderVerdict::NotFound, std::nullopt};
}

bool grid_regularity(const BohrSet& b, int gridpoints) {
  if (gridpoints < 1000) throw Error("grid oracle needs at least 1000 points");
  if (b.freq().empty()) return true;
  const Group& g = b.group();
  const GSet amb = b.ambient();
  // Squared radius of every ambient point, sorted.
  std::vector<double> r2;
  amb.for_each([&](Rank x) {
    const Element ex = g.unrank(x);
    double worst = 0;
    for (Rank c : b.freq()) worst = std::max(worst, std::norm(character_value(g, g.unrank(c), ex) - 1.0));
    r2.push_back(worst);
  });
  std::sort(r2.begin(), r2.end());
  auto count = [&](double w) {
    return static_cast<double>(std::upper_bound(r2.begin(), r2.end(), w * w + 1e-12) - r2.begin());
  };
  const double rho = b.width();
  const double k100 = 100.0 * static_cast<double>(b.freq().size());
  const double n = count(rho);
  for (int s = 1; s < gridpoints; ++s) {
    const double e = (static_cast<double>(s) / gridpoints) / k100;
    if (count(rho * (1 + e)) > n * (1 + k100 * e)) return false;
    if (count(rho * (1 - e)) < n * (1 - k100 * e)) return false;
  }
  return true;
}

namespace {

std::vector<char> close_set(const Group& g, std::vector<char> s) {
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Rank> members;
    for (std::size_t r = 0; r < s.size(); ++r)
      if (s[r]) members.push_back(static_cast<Rank>(r));
    for (Rank x : members)
      for (Rank y : members) {
        const Rank z = g.add(x, y);
        if (!s[z]) {
          s[z] = 1;
          grew = true;
        }
      }
  }
  return s;
}

}  // namespace

std::vector<std::vector<Rank>> brute_subgroups(const Group& g) {
  const std::size_t n = g.order();
  if (n > 64) throw Error("brute_subgroups cap is |G| <= 64");
  std::set<std::vector<char>> found;
  if (n <= 16) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<char> s(n, 0);
      s[0] = 1;
      for (std::size_t r = 0; r < n; ++r)
        if (mask >> r & 1U) s[r] = 1;
      found.insert(close_set(g, std::move(s)));
    }
  } else {
    // Depth-first over closed sets, adjoining one element at a time.
    std::vector<std::vector<char>> stack;
    std::vector<char> zero(n, 0);
    zero[0] = 1;
    stack.push_back(zero);
    found.insert(zero);
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      for (std::size_t x = 0; x < n; ++x) {
        if (cur[x]) continue;
        auto next = cur;
        next[x] = 1;
        next = close_set(g, std::move(next));
        if (found.insert(next).second) stack.push_back(next);
      }
    }
  }
  std::vector<std::vector<Rank>> out;
  for (const auto& s : found) {
    std::vector<Rank> m;
    for (std::size_t r = 0; r < n; ++r)
      if (s[r]) m.push_back(static_cast<Rank>(r));
    out.push_back(std::move(m));
  }
  return out;
}

Recount recount_goodness(const GSet& a, const GSet& b, const Ratio& eps) {
  const Group& g = a.group();
  const auto in = bits(a);
  std::vector<Element> bel;
  b.for_each([&](Rank r) { bel.push_back(g.unrank(r)); });
  const auto nb = static_cast<long long>(bel.size());
  Recount rc;
  for (std::size_t y = 0; y < g.order(); ++y) {
    const Element ey = g.unrank(y);
    long long c = 0;
    for (const auto& e : bel) c += in[g.rank(g.add(e, ey))];
    // c ≤ ε|B| and |B| - c ≤ ε|B|, cross-multiplied.
    const bool empty = c * eps.den() <= eps.num() * nb;
    const bool full = (nb - c) * eps.den() <= eps.num() * nb;
    if (empty && full) ++rc.both;
    else if (empty) ++rc.near_empty;
    else if (full) ++rc.near_full;
    else {
      ++rc.bad;
      if (!rc.first_bad) rc.first_bad = static_cast<Rank>(y);
    }
  }
  return rc;
}

double brute_period_defect(const GSet& a, const GSet& t) {
  const Group& g = a.group();
  const auto in = bits(a);
  const std::size_t n = g.order();
  std::vector<double> F(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    long long c = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (in[y] && in[g.sub(static_cast<Rank>(y), static_cast<Rank>(x))]) ++c;
    F[x] = static_cast<double>(c) / static_cast<double>(a.size());
  }
  double best = 0;
  t.for_each([&](Rank s) {
    for (std::size_t x = 0; x < n; ++x) best = std::max(best, std::abs(F[g.add(static_cast<Rank>(x), s)] - F[x]));
  });
  return best;
}

}  // namespace stabreg::oracle
