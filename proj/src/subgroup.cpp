#include "stabreg/subgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace stabreg {

Subgroup::Subgroup(const Group& g) : members_(g) { members_.insert(0); }

Subgroup Subgroup::whole(const Group& g) {
  Subgroup h(g);
  h.members_ = GSet::full(g);
  for (int i = 0; i < g.factors(); ++i) {
    std::vector<int> c(static_cast<std::size_t>(g.factors()), 0);
    c[static_cast<std::size_t>(i)] = 1;
    h.gens_.push_back(g.rank(Element{c}));
  }
  return h;
}

Subgroup Subgroup::extend(Rank s) const {
  if (members_.contains(s)) return *this;
  const Group& g = group();
  Subgroup out = *this;
  out.gens_.push_back(s);
  const auto base = members_.members();
  // Adjoin H + js for j = 1, 2, ... until js falls back into H.
  Rank js = s;
  while (!members_.contains(js)) {
    for (Rank h : base) out.members_.insert(g.add(h, js));
    js = g.add(js, s);
  }
  return out;
}

Subgroup span(const Group& g, const std::vector<Rank>& s) {
  Subgroup h(g);
  for (Rank x : s) h = h.extend(x);
  return h;
}

Subgroup span(const GSet& s) { return span(s.group(), s.members()); }

bool is_subgroup(const GSet& s) {
  const Group& g = s.group();
  if (!s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Rank a) {
    if (!ok) return;
    if (!s.contains(g.neg(a))) ok = false;
    s.for_each([&](Rank b) {
      if (ok && !s.contains(g.add(a, b))) ok = false;
    });
  });
  return ok;
}

namespace {

std::vector<Subgroup> enumerate_uncached(const Group& g) {
  constexpr std::size_t kMaxCount = 100000;
  std::vector<Subgroup> found{Subgroup(g)};
  std::unordered_set<GSet, GSetHash> seen{found[0].members()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup cur = found[i];
    for (Rank rep : cosets(cur)) {
      if (rep == 0) continue;
      Subgroup next = cur.extend(rep);
      if (seen.insert(next.members()).second) {
        found.push_back(std::move(next));
        if (found.size() > kMaxCount) throw Error("too many subgroups in " + g.to_string());
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return GSet::bitmap_less(a.members(), b.members());
  });
  return found;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const Group& g, std::size_t cap) {
  if (g.order() > cap) throw Error("subgroup enumeration cap exceeded for " + g.to_string());
  static std::mutex mu;
  static std::map<std::string, std::vector<Subgroup>> cache;
  const std::string key = g.to_string();
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto found = enumerate_uncached(g);
  std::lock_guard lock(mu);
  if (cache.size() >= 64) cache.clear();
  return cache.emplace(key, std::move(found)).first->second;
}

std::vector<Rank> cosets(const Subgroup& h) {
  const Group& g = h.group();
  GSet covered(g);
  std::vector<Rank> reps;
  const auto hm = h.members().members();
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto r = static_cast<Rank>(x);
    if (covered.contains(r)) continue;
    reps.push_back(r);
    for (Rank m : hm) covered.insert(g.add(r, m));
  }
  return reps;
}

Rank quotient_class(const Subgroup& h, Rank x) {
  const Group& g = h.group();
  Rank best = x;
  h.members().for_each([&](Rank m) { best = std::min(best, g.add(x, m)); });
  return best;
}

GSet coset(const Subgroup& h, Rank x) { return h.members().translate(x); }

GSet annihilator(const Subgroup& h) {
  const Group& g = h.group();
  return GSet::from_predicate(g, [&](Rank chi) {
    bool ok = true;
    for (Rank gen : h.generators())
      if (g.phase(chi, gen) != 0) ok = false;
    return ok;
  });
}

}  // namespace stabreg
