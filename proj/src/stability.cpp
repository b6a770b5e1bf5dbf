#include "stabreg/stability.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace stabreg {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not_found";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

GSet neighborhood(const GSet& a, int i, Rank x) {
  const Rank shift = a.group().neg(x);
  return i ? a.translate(shift) : a.complement().translate(shift);
}

namespace {

constexpr std::size_t kTableCap = 4096;

// N^i(x) for every x, either precomputed or built on demand.
class Neighborhoods {
 public:
  explicit Neighborhoods(const GSet& a) : a_(a), ac_(a.complement()) {
    if (a.universe() <= kTableCap) {
      for (std::size_t x = 0; x < a.universe(); ++x) {
        const Rank s = a.group().neg(static_cast<Rank>(x));
        n1_.push_back(a_.translate(s));
        n0_.push_back(n1_.back().complement());
      }
    }
  }

  GSet get(int i, Rank x) const {
    if (!n1_.empty()) return i ? n1_[x] : n0_[x];
    return (i ? a_ : ac_).translate(a_.group().neg(x));
  }

 private:
  GSet a_, ac_;
  std::vector<GSet> n1_, n0_;
};

struct OrderSearch {
  const GSet& a;
  const Neighborhoods& nb;
  int k;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Rank> as{}, bs{};

  // Chooses a_i given b_0..b_i; zero holds ⋂_{j<i} N^0(b_j).
  bool pick_a(int i, const GSet& zero) {
    GSet cand = zero & nb.get(1, bs[static_cast<std::size_t>(i)]);
    bool found = false;
    cand.for_each([&](Rank x) {
      if (found || exhausted) return;
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      as.push_back(x);
      if (i + 1 == k) {
        found = true;
        return;
      }
      GSet next_zero = zero & nb.get(0, bs[static_cast<std::size_t>(i)]);
      if (pick_b(i + 1, next_zero)) found = true;
      else as.pop_back();
    });
    return found;
  }

  // Chooses b_j with a_i + b_j ∈ A for all i < j.
  bool pick_b(int j, const GSet& zero) {
    GSet cand = GSet::full(a.group());
    for (Rank x : as) cand &= nb.get(1, x);
    bool found = false;
    cand.for_each([&](Rank y) {
      if (found || exhausted) return;
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      bs.push_back(y);
      if (pick_a(j, zero)) found = true;
      else bs.pop_back();
    });
    return found;
  }
};

}  // namespace

OrderResult find_order_property(const GSet& a, int k, std::uint64_t budget) {
  if (k < 2) throw Error("order property needs k >= 2");
  OrderResult res;
  if (a.empty() || a.size() == a.universe()) return res;
  Neighborhoods nb(a);
  OrderSearch s{.a = a, .nb = nb, .k = k, .budget = budget};
  s.bs.push_back(0);
  const bool found = s.pick_a(0, GSet::full(a.group()));
  res.nodes = s.nodes;
  if (found) {
    res.status = SearchStatus::Found;
    res.witness = OrderWitness{k, s.as, s.bs};
  } else if (s.exhausted) {
    res.status = SearchStatus::BudgetExhausted;
  }
  return res;
}

Verdict is_k_stable(const GSet& a, int k, std::uint64_t budget) {
  switch (find_order_property(a, k, budget).status) {
    case SearchStatus::Found: return Verdict::False;
    case SearchStatus::NotFound: return Verdict::True;
    default: return Verdict::Unknown;
  }
}

IndexResult stability_index(const GSet& a, int cap, std::uint64_t budget) {
  if (cap < 2) throw Error("stability index cap must be >= 2");
  IndexResult res;
  for (int k = 2; k <= cap; ++k) {
    auto r = find_order_property(a, k, budget);
    if (r.status == SearchStatus::NotFound) {
      res.index = k;
      return res;
    }
    if (r.status == SearchStatus::BudgetExhausted) {
      res.above_cap = true;
      res.budget_exhausted = true;
      res.diagnostic = "budget exhausted deciding " + std::to_string(k) + "-order property";
      return res;
    }
    res.lower_witnesses.push_back(*r.witness);
  }
  res.above_cap = true;
  res.diagnostic = "order property holds for every k <= " + std::to_string(cap);
  return res;
}

namespace {

struct VcSearch {
  const GSet& a;
  int cap;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Rank> best{}, cur{};
  std::vector<std::uint32_t> pattern{};  // per g: bit i set iff cur[i] ∈ g + A

  bool shattered(int d) const {
    std::vector<char> seen(std::size_t{1} << d, 0);
    std::size_t distinct = 0;
    for (auto p : pattern)
      if (!seen[p]) {
        seen[p] = 1;
        ++distinct;
      }
    return distinct == seen.size();
  }

  void dfs(Rank from) {
    if (cur.size() > best.size()) best = cur;
    if (static_cast<int>(cur.size()) >= cap + 1 || exhausted) return;
    const Group& g = a.group();
    const int d = static_cast<int>(cur.size()) + 1;
    if ((std::size_t{1} << d) > g.order()) return;
    for (std::size_t x = from; x < g.order(); ++x) {
      if (++nodes > budget) {
        exhausted = true;
        return;
      }
      const auto xr = static_cast<Rank>(x);
      const std::uint32_t bit = std::uint32_t{1} << (d - 1);
      for (std::size_t t = 0; t < g.order(); ++t)
        if (a.contains(g.sub(xr, static_cast<Rank>(t)))) pattern[t] |= bit;
      cur.push_back(xr);
      if (shattered(d)) dfs(xr + 1);
      cur.pop_back();
      for (auto& p : pattern) p &= ~bit;
      if (exhausted || static_cast<int>(best.size()) > cap) return;
      // Translation invariance: the first point can be 0.
      if (d == 1) return;
    }
  }
};

}  // namespace

VcResult vc_dimension(const GSet& a, int cap, std::uint64_t budget) {
  VcResult res;
  VcSearch s{.a = a, .cap = cap, .budget = budget};
  s.pattern.assign(a.universe(), 0);
  s.dfs(0);
  res.shattered = s.best;
  if (static_cast<int>(s.best.size()) > cap) {
    res.above_cap = true;
    res.shattered.resize(static_cast<std::size_t>(cap));
  } else if (s.exhausted) {
    res.budget_exhausted = true;
  } else {
    res.value = static_cast<int>(s.best.size());
  }
  return res;
}

int tree_exact_cap(const Group& g) { return std::bit_width(g.order()); }

namespace {

struct TreeSearch {
  const GSet& a;
  const Neighborhoods& nb;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::unordered_map<GSet, int, GSetHash>> memo{};  // depth -> S -> chosen b + 1, or 0

  // Returns the b realising a height-d tree over leaf set s, or -1.
  long exists(int d, const GSet& s) {
    if (d == 0) return s.empty() ? -1 : 0;
    if (s.size() < (std::size_t{1} << d)) return -1;
    if (static_cast<std::size_t>(d) >= memo.size()) memo.resize(static_cast<std::size_t>(d) + 1);
    auto it = memo[static_cast<std::size_t>(d)].find(s);
    if (it != memo[static_cast<std::size_t>(d)].end()) return it->second - 1;
    const std::size_t need = std::size_t{1} << (d - 1);
    const std::size_t n = s.universe();
    const std::size_t tries = (d == static_cast<int>(root_depth)) ? 1 : n;  // root b fixed to 0
    long found = -1;
    for (std::size_t b = 0; b < tries && found < 0; ++b) {
      if (++nodes > budget) {
        exhausted = true;
        return -1;
      }
      const auto br = static_cast<Rank>(b);
      GSet left = s & nb.get(0, br);
      if (left.size() < need) continue;
      GSet right = s & nb.get(1, br);
      if (right.size() < need) continue;
      if (exists(d - 1, left) >= 0 && exists(d - 1, right) >= 0) found = static_cast<long>(b);
      if (exhausted) return -1;
    }
    memo[static_cast<std::size_t>(d)].emplace(s, static_cast<int>(found + 1));
    return found;
  }

  void build(int d, const GSet& s, const std::string& path, TreeWitness& w) {
    if (d == 0) {
      w.a[path] = s.first();
      return;
    }
    const long b = exists(d, s);
    const auto br = static_cast<Rank>(b);
    w.b[path] = br;
    build(d - 1, s & nb.get(0, br), path + "0", w);
    build(d - 1, s & nb.get(1, br), path + "1", w);
  }

  int root_depth = -1;
};

}  // namespace

TreeResult tree_bound(const GSet& a, int cap, std::uint64_t budget) {
  if (cap < 1) throw Error("tree bound cap must be >= 1");
  TreeResult res;
  Neighborhoods nb(a);
  const GSet all = GSet::full(a.group());
  int best = 0;
  for (int d = 1; d <= cap; ++d) {
    TreeSearch s{.a = a, .nb = nb, .budget = budget};
    s.root_depth = d;
    const bool ok = s.exists(d, all) >= 0;
    if (s.exhausted) {
      res.budget_exhausted = true;
      break;
    }
    if (!ok) {
      res.value = d;
      break;
    }
    best = d;
  }
  if (!res.value && !res.budget_exhausted) res.above_cap = true;
  res.witness.d = best;
  if (best == 0) {
    res.witness.a[""] = 0;
  } else {
    TreeSearch s{.a = a, .nb = nb, .budget = ~std::uint64_t{0}};
    s.root_depth = best;
    s.build(best, all, "", res.witness);
  }
  return res;
}

bool verify_order_witness(const GSet& a, const OrderWitness& w) {
  if (w.k < 1 || w.a.size() != static_cast<std::size_t>(w.k) || w.b.size() != static_cast<std::size_t>(w.k))
    return false;
  const Group& g = a.group();
  for (Rank x : w.a)
    if (x >= g.order()) return false;
  for (Rank x : w.b)
    if (x >= g.order()) return false;
  for (int i = 0; i < w.k; ++i)
    for (int j = 0; j < w.k; ++j)
      if (a.contains(g.add(w.a[static_cast<std::size_t>(i)], w.b[static_cast<std::size_t>(j)])) != (i <= j))
        return false;
  return true;
}

bool verify_tree_witness(const GSet& a, const TreeWitness& t) {
  if (t.d < 0 || t.d > 24) return false;
  const std::size_t leaves = std::size_t{1} << t.d;
  if (t.a.size() != leaves || t.b.size() != leaves - 1) return false;
  const Group& g = a.group();
  for (const auto& [eta, x] : t.a) {
    if (static_cast<int>(eta.size()) != t.d || x >= g.order()) return false;
    if (eta.find_first_not_of("01") != std::string::npos) return false;
    for (int len = 0; len < t.d; ++len) {
      auto it = t.b.find(eta.substr(0, static_cast<std::size_t>(len)));
      if (it == t.b.end() || it->second >= g.order()) return false;
      const bool in = a.contains(g.add(x, it->second));
      if (in != (eta[static_cast<std::size_t>(len)] == '1')) return false;
    }
  }
  return true;
}

}  // namespace stabreg
