#include "stabreg/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "stabreg/cli/set_spec.hpp"
#include "stabreg/engine.hpp"
#include "stabreg/fourier.hpp"
#include "stabreg/oracles.hpp"
#include "stabreg/serialize.hpp"
#include "stabreg/stability.hpp"

namespace stabreg::cli {

namespace {

// Work above which verify refuses to recount goodness.
constexpr double kVerifyWorkCap = 5e8;

struct UsageError : Error {
  using Error::Error;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Constants load_constants(const RunConfig& cfg) {
  if (!cfg.constants_file) return {};
  std::ifstream in(*cfg.constants_file);
  if (!in) throw UsageError("cannot open constants file " + *cfg.constants_file);
  try {
    return constants_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad constants file: ") + e.what());
  }
}

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions opt;
  opt.k_assumed = cfg.k;
  opt.k_cap = cfg.k_cap;
  opt.depth_cap = cfg.depth_cap;
  opt.budget_nodes = cfg.budget_nodes;
  opt.budget_seconds = cfg.budget_seconds;
  opt.constants = load_constants(cfg);
  return opt;
}

Ratio run_epsilon(const RunConfig& cfg) {
  const bool sub = cfg.mode.rfind("subgroup", 0) == 0;
  return Ratio::parse(sub && cfg.mu ? *cfg.mu : cfg.epsilon);
}

json input_json(const RunConfig& cfg) {
  json j = {{"group", cfg.group}, {"set", cfg.set}, {"seed", cfg.seed}};
  return j;
}

EngineOutcome run_engine(const GSet& a, const Ratio& eps, const RunConfig& cfg, const EngineOptions& opt) {
  if (cfg.mode == "bohr") return find_good_bohr(a, eps, cfg.r, opt);
  if (cfg.mode == "subgroup") return find_good_subgroup(a, eps, SubgroupMode::Enumerate, opt);
  if (cfg.mode == "subgroup-constructive") return find_good_subgroup(a, eps, SubgroupMode::Constructive, opt);
  throw UsageError("unknown mode '" + cfg.mode + "'");
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
    if (!quote) {
      s += cells[i];
      continue;
    }
    s += '"';
    for (char c : cells[i]) s += c == '"' ? std::string("\"\"") : std::string(1, c);
    s += '"';
  }
  return s + "\n";
}

std::string structure_size(const EngineOutcome& o) {
  return o.certificate ? std::to_string(o.certificate->members().size()) : "";
}

std::string structure_param(const EngineOutcome& o) {
  if (!o.certificate) return "";
  if (o.certificate->bohr) return std::to_string(o.certificate->bohr->rank());
  return std::to_string(o.certificate->subgroup->index());
}

void add_timings(json& rep, const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
  if (!cfg.timings) return;
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep["timings"] = {{"totalMs", ms}};
}

}  // namespace

CommandResult cmd_analyze(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Group g = parse_group(cfg.group);
  const GSet a = parse_set(cfg.set, g, cfg.seed);
  json rep;
  rep["schemaVersion"] = kSchemaVersion;
  rep["command"] = "analyze";
  rep["input"] = input_json(cfg);
  rep["input"]["kCap"] = cfg.k_cap;
  rep["group"] = g.to_string();
  rep["setMembers"] = members_to_json(a);
  rep["size"] = a.size();
  rep["density"] = {{"exact", Ratio(static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(g.order())).str()},
                    {"value", static_cast<double>(a.size()) / static_cast<double>(g.order())}};

  const auto idx = stability_index(a, std::max(2, cfg.k_cap));
  json lw = json::array();
  for (const auto& w : idx.lower_witnesses) lw.push_back(to_json(w, g));
  rep["stabilityIndex"] = {{"value", idx.index ? json(*idx.index) : json(nullptr)},
                           {"aboveCap", idx.above_cap},
                           {"budgetExhausted", idx.budget_exhausted},
                           {"lowerWitnesses", lw}};
  if (!idx.diagnostic.empty()) rep["stabilityIndex"]["diagnostic"] = idx.diagnostic;

  const auto vc = vc_dimension(a, 20);
  json shat = json::array();
  for (Rank x : vc.shattered) shat.push_back(element_to_json(g, x));
  rep["vcDimension"] = {{"value", vc.value ? json(*vc.value) : json(nullptr)},
                        {"aboveCap", vc.above_cap},
                        {"budgetExhausted", vc.budget_exhausted},
                        {"shattered", shat}};

  const auto tb = tree_bound(a, tree_exact_cap(g));
  rep["treeBound"] = {{"value", tb.value ? json(*tb.value) : json(nullptr)},
                      {"aboveCap", tb.above_cap},
                      {"budgetExhausted", tb.budget_exhausted},
                      {"witness", to_json(tb.witness, g)}};

  const auto F = fourier_transform(indicator(a));
  std::vector<std::pair<double, Rank>> top;
  for (std::size_t c = 1; c < F.coeffs.size(); ++c)
    top.emplace_back(std::round(std::abs(F.coeffs[c]) * 1e12) / 1e12, static_cast<Rank>(c));
  std::sort(top.begin(), top.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  json spec_j = json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(5, top.size()); ++i)
    spec_j.push_back({{"character", element_to_json(g, top[i].second)}, {"magnitude", top[i].first}});
  rep["topSpectrum"] = spec_j;

  if (idx.index && *idx.index <= 58) {
    const int k = *idx.index;
    json th = {{"treeHeightCap", tree_height_cap(k)}};
    if (vc.value) th["vcWithinBound"] = *vc.value <= k - 1;
    if (tb.value) th["treeWithinBound"] = *tb.value <= tree_height_cap(k);
    rep["theory"] = th;
  }
  if (cfg.dump_function) rep["function"] = to_json(balanced(a));
  add_timings(rep, cfg, start);

  const bool exact = idx.index && vc.value && tb.value;
  CommandResult res;
  res.exit_code = exact ? kOk : kInconclusive;
  if (cfg.format == "csv") {
    res.output = csv_row({"group", "set", "size", "density", "index", "vc", "tree"}) +
                 csv_row({g.to_string(), cfg.set, std::to_string(a.size()), rep["density"]["exact"].get<std::string>(),
                          idx.index ? std::to_string(*idx.index) : "", vc.value ? std::to_string(*vc.value) : "",
                          tb.value ? std::to_string(*tb.value) : ""});
  } else {
    res.output = dump(rep);
  }
  return res;
}

CommandResult cmd_find_good(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Group g = parse_group(cfg.group);
  const GSet a = parse_set(cfg.set, g, cfg.seed);
  const Ratio eps = run_epsilon(cfg);
  const auto opt = engine_options(cfg);
  const auto out = run_engine(a, eps, cfg, opt);

  json rep;
  rep["schemaVersion"] = kSchemaVersion;
  rep["command"] = "find-good";
  rep["input"] = input_json(cfg);
  rep["input"]["epsilon"] = eps.str();
  rep["input"]["r"] = cfg.r;
  rep["input"]["mode"] = cfg.mode;
  rep["input"]["k"] = cfg.k ? json(*cfg.k) : json(nullptr);
  rep["input"]["depthCap"] = cfg.depth_cap ? json(*cfg.depth_cap) : json(nullptr);
  rep["input"]["budgetNodes"] = cfg.budget_nodes;
  rep["input"]["budgetSeconds"] = cfg.budget_seconds;
  rep["group"] = g.to_string();
  rep["setMembers"] = members_to_json(a);
  rep["outcome"] = to_json(out, g);
  rep["ledger"] = to_json(out.ledger);
  rep["budgetsUsed"] = {{"nodes", out.nodes_expanded}};
  add_timings(rep, cfg, start);

  CommandResult res;
  res.exit_code = out.kind == OutcomeKind::Inconclusive ? kInconclusive : kOk;
  if (cfg.format == "csv") {
    res.output = csv_row({"group", "set", "mode", "epsilon", "outcome", "structureSize", "rankOrIndex", "nodes"}) +
                 csv_row({g.to_string(), cfg.set, cfg.mode, eps.str(), to_string(out.kind), structure_size(out),
                          structure_param(out), std::to_string(out.nodes_expanded)});
  } else {
    res.output = dump(rep);
  }
  return res;
}

namespace {

struct Checks {
  json list = json::array();
  json cells = json::array();
  bool ok = true;
  bool capped = false;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    json c = {{"name", name}, {"ok", pass}};
    if (!detail.empty()) c["detail"] = detail;
    list.push_back(c);
    ok = ok && pass;
  }
};

void check_order(Checks& ch, const GSet& a, const OrderWitness& w, const std::string& name) {
  const Group& g = a.group();
  const bool pass = verify_order_witness(a, w);
  ch.add(name, pass);
  if (pass || w.a.size() != static_cast<std::size_t>(w.k) || w.b.size() != static_cast<std::size_t>(w.k)) {
    if (!pass) ch.cells.push_back({{"witness", name}, {"cell", "shape"}});
    return;
  }
  for (int i = 0; i < w.k; ++i)
    for (int j = 0; j < w.k; ++j) {
      const bool in = a.contains(g.add(w.a[static_cast<std::size_t>(i)], w.b[static_cast<std::size_t>(j)]));
      if (in != (i <= j))
        ch.cells.push_back({{"witness", name},
                            {"i", i + 1},
                            {"j", j + 1},
                            {"expected", i <= j ? "in" : "out"},
                            {"actual", in ? "in" : "out"}});
    }
}

void check_tree(Checks& ch, const GSet& a, const TreeWitness& w, const std::string& name) {
  const Group& g = a.group();
  const bool pass = verify_tree_witness(a, w);
  ch.add(name, pass);
  if (pass) return;
  for (const auto& [eta, x] : w.a) {
    for (std::size_t len = 0; len < eta.size(); ++len) {
      auto it = w.b.find(eta.substr(0, len));
      if (it == w.b.end()) {
        ch.cells.push_back({{"witness", name}, {"eta", eta}, {"rho", eta.substr(0, len)}, {"problem", "missing b"}});
        continue;
      }
      const bool in = a.contains(g.add(x, it->second));
      const bool want = eta[len] == '1';
      if (in != want)
        ch.cells.push_back({{"witness", name},
                            {"eta", eta},
                            {"rho", eta.substr(0, len)},
                            {"expected", want ? "in" : "out"},
                            {"actual", in ? "in" : "out"}});
    }
  }
  if (ch.cells.empty()) ch.cells.push_back({{"witness", name}, {"problem", "shape"}});
}

void check_certificate(Checks& ch, const Group& g, const GSet& a, const json& cert) {
  const Ratio eps = Ratio::parse(cert.at("epsilon").get<std::string>());
  const json& st = cert.at("structure");
  const GSet members = members_from_json(g, st.at("members"));
  if (members.empty()) {
    ch.add("structure", false, "empty structure");
    return;
  }
  if (cert.at("kind") == "bohr") {
    std::vector<Rank> freq;
    for (const auto& c : st.at("freq")) freq.push_back(element_from_json(g, c));
    std::optional<Subgroup> dom;
    if (st.contains("domain")) dom = span(members_from_json(g, st["domain"].at("members")));
    const BohrSet b(g, freq, st.at("width").get<double>(), dom);
    ch.add("bohrMembers", b.members() == members);
    ch.add("bohrRegular", b.regular() == st.at("regular").get<bool>());
  } else {
    ch.add("subgroupClosed", is_subgroup(members));
    ch.add("subgroupIndex", g.order() / members.size() == st.at("index").get<std::size_t>());
  }
  const double work = static_cast<double>(g.order()) * static_cast<double>(members.size());
  if (work > kVerifyWorkCap) {
    ch.capped = true;
    ch.add("goodnessRecount", true, "skipped: instance exceeds the oracle cap");
    return;
  }
  const auto rc = oracle::recount_goodness(a, members, eps);
  ch.add("goodnessRecount", rc.bad == 0,
         rc.first_bad ? "bad translate " + g.format(*rc.first_bad) : std::string());
}

}  // namespace

CommandResult verify_text(const std::string& text, bool against_oracle) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("report is not JSON: ") + e.what());
  }
  Checks ch;
  const Group g = parse_group(j.at("group").get<std::string>());
  const GSet a = members_from_json(g, j.at("setMembers"));
  const std::string cmd = j.value("command", "");
  bool inconclusive = false;

  if (cmd == "find-good") {
    const json& o = j.at("outcome");
    const std::string kind = o.at("kind");
    if (kind == "certificate") check_certificate(ch, g, a, o.at("certificate"));
    else if (kind == "instability") check_tree(ch, a, tree_witness_from_json(g, o.at("witness")), "treeWitness");
    else inconclusive = true;
  } else if (cmd == "analyze") {
    const auto& lw = j.at("stabilityIndex").at("lowerWitnesses");
    for (std::size_t i = 0; i < lw.size(); ++i)
      check_order(ch, a, order_witness_from_json(g, lw[i]), "orderWitness" + std::to_string(i));
    check_tree(ch, a, tree_witness_from_json(g, j.at("treeBound").at("witness")), "treeWitness");
    if (against_oracle) {
      const auto& v = j.at("stabilityIndex").at("value");
      if (v.is_null()) {
        inconclusive = true;
      } else {
        const int k = v.get<int>();
        const auto r = oracle::brute_order_search(a, k);
        if (r.verdict == oracle::OrderVerdict::Capped) ch.capped = true;
        else ch.add("oracleStable", r.verdict == oracle::OrderVerdict::NotFound);
      }
    }
  } else if (j.contains("kind")) {
    const std::string kind = j["kind"];
    if (kind == "order") check_order(ch, a, order_witness_from_json(g, j), "orderWitness");
    else if (kind == "tree") check_tree(ch, a, tree_witness_from_json(g, j), "treeWitness");
    else throw UsageError("unknown witness kind '" + kind + "'");
  } else {
    throw UsageError("unrecognised report");
  }

  json rep;
  rep["schemaVersion"] = kSchemaVersion;
  rep["command"] = "verify";
  rep["verified"] = ch.ok && !ch.capped && !inconclusive;
  rep["checks"] = ch.list;
  if (!ch.cells.empty()) rep["cells"] = ch.cells;
  if (ch.capped) rep["capped"] = true;
  if (inconclusive) rep["inconclusive"] = true;
  CommandResult res;
  res.output = dump(rep);
  res.exit_code = !ch.ok ? kVerifyFailed : (ch.capped || inconclusive) ? kInconclusive : kOk;
  return res;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  std::ifstream in(cfg.report_file);
  if (!in) throw UsageError("cannot open report " + cfg.report_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return verify_text(ss.str(), cfg.against_oracle);
}

namespace {

struct Instance {
  std::string name;
  GSet set;
};

std::vector<Instance> family_instances(const std::string& fam, const Group& g, std::uint64_t seed) {
  std::vector<Instance> out;
  const std::size_t n = g.order();
  auto interval = [&](std::size_t len) {
    GSet s(g);
    for (std::size_t r = 0; r < len; ++r) s.insert(static_cast<Rank>(r));
    return s;
  };
  if (fam == "subgroups" || fam == "cosets") {
    if (n > 4096) return out;
    for (const auto& h : enumerate_subgroups(g)) {
      if (h.index() > 8) continue;
      const std::string tag = "H" + std::to_string(h.index()) + "_" + std::to_string(out.size());
      if (fam == "subgroups") {
        out.push_back({tag, h.members()});
        continue;
      }
      const auto reps = cosets(h);
      const Rank shift = reps.size() > 1 ? reps[1] : 0;
      out.push_back({tag + "+1", coset(h, shift)});
      if (reps.size() >= 3) out.push_back({tag + "+0+1", h.members() | coset(h, shift)});
    }
  } else if (fam == "intervals") {
    out.push_back({"I[0," + std::to_string(n / 2) + ")", interval(n / 2)});
    out.push_back({"I[0," + std::to_string(n / 4 + 1) + ")", interval(n / 4 + 1)});
  } else if (fam == "random") {
    for (const char* p : {"0.1", "0.3", "0.5"}) {
      SetSpec s;
      s.kind = SetSpec::Kind::Random;
      s.p = std::stod(p);
      s.seed = seed;
      s.has_seed = true;
      out.push_back({std::string("p=") + p, resolve(s, g)});
    }
  } else if (fam == "empty") {
    out.push_back({"empty", GSet(g)});
  } else {
    throw UsageError("unknown family '" + fam + "'");
  }
  return out;
}

}  // namespace

CommandResult cmd_sweep(const RunConfig& cfg) {
  const auto opt = engine_options(cfg);
  std::string out = csv_row({"group", "family", "instance", "size", "epsilon", "mode", "outcome", "structureSize",
                             "rankOrIndex", "trivial", "depthReached", "nodes", "reason"});
  std::vector<Ratio> eps;
  for (const auto& e : cfg.epsilons) eps.push_back(Ratio::parse(e));
  std::size_t inconclusive = 0;
  for (const auto& gs : cfg.groups) {
    const Group g = parse_group(gs);
    for (const auto& fam : cfg.families) {
      for (const auto& inst : family_instances(fam, g, cfg.seed)) {
        for (const auto& e : eps) {
          const auto o = run_engine(inst.set, e, cfg, opt);
          if (o.kind == OutcomeKind::Inconclusive) ++inconclusive;
          out += csv_row({g.to_string(), fam, inst.name, std::to_string(inst.set.size()), e.str(), cfg.mode,
                          to_string(o.kind), structure_size(o), structure_param(o),
                          o.certificate && o.certificate->trivial ? "1" : "0", std::to_string(o.depth_reached),
                          std::to_string(o.nodes_expanded), o.reason});
        }
      }
    }
  }
  return {kOk, out};
}

CommandResult cmd_bohr(const RunConfig& cfg) {
  const Group g = parse_group(cfg.group);
  const SetSpec spec = parse_set_spec(cfg.set);
  if (spec.kind != SetSpec::Kind::Bohr) throw UsageError("bohr command needs a bohr: set spec");
  const BohrSet b = resolve_bohr(spec, g);
  json rep;
  rep["schemaVersion"] = kSchemaVersion;
  rep["command"] = "bohr";
  rep["input"] = input_json(cfg);
  rep["group"] = g.to_string();
  rep["bohr"] = to_json(b);
  const auto reg = regularity_report(b);
  if (!reg.regular) rep["regularityFailure"] = reg.failure;
  const auto sb = size_bound_check(b);
  rep["sizeBound"] = {{"holds", sb.holds}, {"ratio", sb.ratio}, {"literalRatio", sb.literal_ratio}};
  if (b.width() <= 1) {
    const auto ws = find_regular_width(g, b.freq(), b.width());
    rep["regularWidth"] = {{"width", ws.width ? json(*ws.width) : json(nullptr)},
                           {"candidates", ws.candidates},
                           {"failures", ws.failures}};
  }
  if (b.regular()) {
    const double e = Ratio::parse(cfg.epsilon).value();
    const auto sub = sub_bohr(b, e);
    if (sub.pair) {
      rep["subBohr"] = {{"sigma", sub.pair->sigma()},
                        {"size", sub.pair->inner().size()},
                        {"closureDefect", closure_defect(*sub.pair)},
                        {"span", to_json(bohr_span(sub.pair->inner()))}};
    } else {
      rep["subBohr"] = {{"error", sub.diagnostic}};
    }
  }
  return {kOk, dump(rep)};
}

CommandResult run(const RunConfig& cfg) {
  try {
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "find-good") return cmd_find_good(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "bohr") return cmd_bohr(cfg);
    return {kUsage, "unknown command '" + cfg.command + "'\n"};
  } catch (const Error& e) {
    return {kUsage, std::string("error: ") + e.what() + "\n"};
  } catch (const json::exception& e) {
    return {kUsage, std::string("error: malformed JSON: ") + e.what() + "\n"};
  }
}

}  // namespace stabreg::cli
