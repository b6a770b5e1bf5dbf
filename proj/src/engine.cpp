#include "stabreg/engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "stabreg/fourier.hpp"

namespace stabreg {

const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Certificate: return "certificate";
    case OutcomeKind::Instability: return "instability";
    case OutcomeKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

int resolve_k(const GSet& a, const EngineOptions& opt) {
  if (opt.k_assumed) return *opt.k_assumed;
  const auto idx = stability_index(a, std::max(2, opt.k_cap), 2'000'000);
  return idx.index ? *idx.index : std::max(2, opt.k_cap);
}

DensityResult density_translate_search(const GSet& s, const BohrSet& b, const Ratio& eta, const EngineOptions& opt) {
  DensityResult res;
  const GSet amb = b.ambient();
  const GSet sb = s & b.members();
  if (eta.count_lt(sb.size(), b.size())) {
    res.diagnostic = "precondition |S∩B| >= eta|B| fails";
    return res;
  }
  if (sb.size() == b.size() && b.regular()) {
    res.bohr = b;
    res.best_density = 1.0;
    return res;
  }
  if (sb.empty()) {
    res.diagnostic = "S does not meet B";
    return res;
  }

  // Large spectrum of μ_{S∩B}, strongest first.
  const auto spec_f = fourier_transform(char_measure(sb));
  std::vector<std::pair<double, Rank>> freqs;
  for (std::size_t c = 1; c < spec_f.coeffs.size(); ++c) {
    const double v = std::abs(spec_f.coeffs[c]);
    const auto cr = static_cast<Rank>(c);
    if (v < 0.5 - 1e-12 || std::binary_search(b.freq().begin(), b.freq().end(), cr)) continue;
    freqs.emplace_back(std::round(v * 1e9) / 1e9, cr);
  }
  std::sort(freqs.begin(), freqs.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });

  struct Cand {
    BohrSet bohr;
    int j, i;
  };
  std::vector<Cand> cands;
  auto add = [&](BohrSet&& cand, int j, int i) {
    if (!cand.members().subset_of(b.members())) throw Error("density search produced B' not inside B");
    for (const auto& c : cands)
      if (c.bohr.members() == cand.members()) return;
    cands.push_back({std::move(cand), j, i});
  };
  const int jm = std::min<int>(opt.j_max, static_cast<int>(freqs.size()));
  for (int j = 0; j <= jm; ++j) {
    std::vector<Rank> kj = b.freq();
    for (int t = 0; t < j; ++t) kj.push_back(freqs[static_cast<std::size_t>(t)].second);
    BohrSet same(b.group(), kj, b.width(), b.domain());
    if (same.regular()) add(std::move(same), j, 0);
    for (int i = 1; i <= opt.width_steps; ++i) {
      const double w0 = b.width() / std::ldexp(1.0, i);
      auto ws = find_regular_width(b.group(), kj, w0, b.domain());
      if (ws.width) add(BohrSet(b.group(), kj, *ws.width, b.domain()), j, i);
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.bohr.size() > y.bohr.size(); });

  for (auto& c : cands) {
    const auto counts = translate_counts(s, c.bohr.members(), &amb);
    const std::size_t n = c.bohr.size();
    for (std::size_t x = 0; x < counts.size(); ++x) {
      if (!amb.contains(static_cast<Rank>(x))) continue;
      res.best_density = std::max(res.best_density, static_cast<double>(counts[x]) / static_cast<double>(n));
      if (eta.count_ge_complement(counts[x], n)) {
        res.x = static_cast<Rank>(x);
        res.j = c.j;
        res.i = c.i;
        res.bohr = std::move(c.bohr);
        return res;
      }
    }
  }
  res.diagnostic = std::to_string(cands.size()) + " candidate Bohr sets, best density " + std::to_string(res.best_density);
  return res;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class S>
struct TreeNode {
  std::string path;
  S structure;
  GSet x_set;
};

// One step of the tree: a narrower structure and translate on which s is dense.
template <class S>
struct StepResult {
  std::optional<S> structure;
  Rank x = 0;
  std::string diagnostic;
};

template <class S, class Step, class Certify>
EngineOutcome run_tree(const GSet& a, const Ratio& eps, S root, const GSet& ambient, int depth_cap,
                       const EngineOptions& opt, Step step, Certify certify) {
  EngineOutcome out;
  out.depth_cap = depth_cap;
  const Group& g = a.group();
  const auto deadline = opt.budget_seconds > 0
                            ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                 std::chrono::duration<double>(opt.budget_seconds))
                            : Clock::time_point::max();
  std::map<std::string, Rank> xs{{"", 0}}, gs;
  std::map<std::string, GSet> leaves;
  std::deque<TreeNode<S>> queue;
  queue.push_back({"", std::move(root), ambient});
  bool failed = false;

  while (!queue.empty()) {
    TreeNode<S> node = std::move(queue.front());
    queue.pop_front();
    const int t = static_cast<int>(node.path.size());
    out.depth_reached = std::max(out.depth_reached, t);
    if (t == depth_cap) {
      leaves.emplace(node.path, std::move(node.x_set));
      continue;
    }
    if (++out.nodes_expanded > opt.budget_nodes || Clock::now() > deadline) {
      out.reason = out.nodes_expanded > opt.budget_nodes ? "budget_exhausted" : "time_exhausted";
      return out;
    }
    const GSet& bm = node.structure.members();
    auto cls = classify_translates(a, bm, eps, &ambient);
    if (cls.bad == 0) {
      out.kind = OutcomeKind::Certificate;
      out.certificate = certify(node.structure, std::move(cls), node.path);
      return out;
    }
    const Rank gb = *cls.first_bad;
    gs[node.path] = gb;
    for (int i = 0; i < 2; ++i) {
      const GSet s = neighborhood(a, i, gb) & node.x_set;
      auto r = step(s, node.structure);
      const std::string child = node.path + static_cast<char>('0' + i);
      if (!r.structure) {
        failed = true;
        out.diagnostics.push_back("node '" + node.path + "' branch " + std::to_string(i) + ": " + r.diagnostic);
        continue;
      }
      xs[child] = r.x;
      queue.push_back({child, std::move(*r.structure), s.translate(g.neg(r.x))});
    }
  }
  if (failed) {
    out.reason = "density_step_failed";
    return out;
  }

  TreeWitness w;
  w.d = depth_cap;
  for (const auto& [eta, xset] : leaves) {
    if (xset.empty()) {
      out.reason = "empty_leaf";
      return out;
    }
    Rank v = xset.first();
    for (std::size_t len = 1; len <= eta.size(); ++len) v = g.add(v, xs.at(eta.substr(0, len)));
    w.a[eta] = v;
  }
  for (const auto& [sigma, gv] : gs) {
    Rank v = gv;
    for (std::size_t len = 1; len <= sigma.size(); ++len) v = g.sub(v, xs.at(sigma.substr(0, len)));
    w.b[sigma] = v;
  }
  if (!verify_tree_witness(a, w)) {
    out.reason = "witness_failed_verification";
    return out;
  }
  out.kind = OutcomeKind::Instability;
  out.witness = std::move(w);
  return out;
}

int depth_for(int k, const EngineOptions& opt) {
  if (opt.depth_cap) return *opt.depth_cap;
  return static_cast<int>(std::min<long long>(tree_height_cap(k) + 1, 64));
}

}  // namespace

EngineOutcome find_good_bohr(const GSet& a, const Ratio& eps, double r, const EngineOptions& opt,
                             const std::optional<Subgroup>& domain) {
  if (eps.num() == 0 || !(eps < Ratio(1, 1))) throw Error("epsilon must lie in (0,1)");
  if (!(r > 0 && r <= 1)) throw Error("r must lie in (0,1]");
  const GSet ambient = domain ? domain->members() : GSet::full(a.group());
  if (!a.subset_of(ambient)) throw Error("set is not contained in the domain subgroup");
  const int k = resolve_k(a, opt);
  const int d = depth_for(k, opt);
  const Ratio mu = eps.half();

  auto step = [&](const GSet& s, const BohrSet& b) {
    StepResult<BohrSet> sr;
    auto dr = density_translate_search(s, b, mu, opt);
    if (dr.bohr) {
      sr.structure = std::move(dr.bohr);
      sr.x = dr.x;
    } else {
      sr.diagnostic = dr.diagnostic;
    }
    return sr;
  };
  auto certify = [&](const BohrSet& b, TranslateClassification cls, const std::string& path) {
    GoodStructureCertificate c;
    c.kind = GoodStructureCertificate::Kind::Bohr;
    c.bohr = b;
    c.epsilon = eps;
    c.classification = std::move(cls);
    c.node = path;
    c.trivial = b.size() == 1;
    return c;
  };
  auto out = run_tree(a, eps, BohrSet(a.group(), {}, r, domain), ambient, d, opt, step, certify);
  out.k_assumed = k;
  out.ledger = theoretical_bounds(k, eps, r, opt.constants);
  if (out.certificate) {
    out.ledger.achieved_rank = out.certificate->bohr->rank();
    out.ledger.achieved_width = out.certificate->bohr->width();
  }
  return out;
}

SubgroupTranslate dense_subgroup_translate(const GSet& a, const Subgroup& h, const Ratio& eps, const EngineOptions& opt) {
  SubgroupTranslate res;
  const GSet ah = a & h.members();
  if (eps.count_le(ah.size(), h.size())) {
    res.diagnostic = "precondition |A∩H| > eps|H| fails";
    return res;
  }
  if (ah.size() == h.size()) {
    res.subgroup = h;
    return res;
  }
  auto inner = find_good_bohr(ah, eps, 1.0, opt, h);
  if (inner.kind != OutcomeKind::Certificate) {
    res.diagnostic = std::string("inner Bohr search ") + to_string(inner.kind) +
                     (inner.reason.empty() ? "" : " (" + inner.reason + ")");
    return res;
  }
  const BohrSet& b = *inner.certificate->bohr;
  const GSet& hm = h.members();
  const GSet I = full_translate_set(ah, b.members(), eps, &hm);
  if (I.empty()) {
    res.diagnostic = "no almost-full translate of the good Bohr set";
    return res;
  }
  auto sb = sub_bohr(b, eps.value());
  if (!sb.pair) {
    res.diagnostic = "sub Bohr set: " + sb.diagnostic;
    return res;
  }
  const Subgroup hp = bohr_span(sb.pair->inner());
  const Group& g = a.group();
  const Rank z = I.first();
  std::optional<Rank> found;
  b.members().for_each([&](Rank u) {
    if (found) return;
    const Rank x = g.add(z, u);
    if (eps.count_ge_complement(a.intersection_size(coset(hp, x)), hp.size())) found = x;
  });
  if (!found) {
    res.diagnostic = "no translate of <B'> in z + B is almost full";
    return res;
  }
  res.subgroup = hp;
  res.x = *found;
  return res;
}

EngineOutcome find_good_subgroup(const GSet& a, const Ratio& mu, SubgroupMode mode, const EngineOptions& opt) {
  if (mu.num() == 0 || !(mu < Ratio(1, 1))) throw Error("mu must lie in (0,1)");
  const Group& g = a.group();
  auto certify = [&](const Subgroup& h, TranslateClassification cls, const std::string& path) {
    GoodStructureCertificate c;
    c.kind = GoodStructureCertificate::Kind::Subgroup;
    c.subgroup = h;
    c.epsilon = mu;
    c.classification = std::move(cls);
    c.node = path;
    c.trivial = h.size() == 1;
    return c;
  };
  EngineOutcome out;
  if (mode == SubgroupMode::Enumerate) {
    for (const auto& h : enumerate_subgroups(g)) {
      ++out.nodes_expanded;
      auto cls = classify_translates(a, h.members(), mu);
      if (cls.bad == 0) {
        out.kind = OutcomeKind::Certificate;
        out.certificate = certify(h, std::move(cls), "");
        break;
      }
    }
    out.k_assumed = opt.k_assumed.value_or(2);
  } else {
    const int k = resolve_k(a, opt);
    EngineOptions inner = opt;
    inner.k_assumed = k;
    const Ratio half = mu.half();
    auto step = [&](const GSet& s, const Subgroup& h) {
      StepResult<Subgroup> sr;
      auto r = dense_subgroup_translate(s, h, half, inner);
      if (r.subgroup) {
        sr.structure = std::move(r.subgroup);
        sr.x = r.x;
      } else {
        sr.diagnostic = r.diagnostic;
      }
      return sr;
    };
    out = run_tree(a, mu, Subgroup::whole(g), GSet::full(g), depth_for(k, opt), opt, step, certify);
    out.k_assumed = k;
  }
  out.ledger = theoretical_bounds(std::max(2, out.k_assumed), mu, 1.0, opt.constants);
  if (out.certificate) out.ledger.achieved_index = out.certificate->subgroup->index();
  return out;
}

std::optional<Decomposition> decompose(const GSet& a, const Ratio& eps, SubgroupMode mode, const EngineOptions& opt) {
  auto out = find_good_subgroup(a, eps, mode, opt);
  if (out.kind != OutcomeKind::Certificate) return std::nullopt;
  const Subgroup h = *out.certificate->subgroup;
  Decomposition dec{h, {}, 0, std::move(out)};
  GSet cover(a.group());
  for (Rank rep : cosets(h)) {
    const GSet c = coset(h, rep);
    if (eps.count_ge_complement(a.intersection_size(c), h.size())) {
      dec.j.push_back(rep);
      cover |= c;
    }
  }
  const std::size_t diff = (a - cover).size() + (cover - a).size();
  dec.defect = static_cast<double>(diff) / static_cast<double>(a.universe());
  if (eps.count_gt(diff, a.universe())) throw Error("decomposition defect exceeds epsilon for a good subgroup");
  return dec;
}

}  // namespace stabreg
