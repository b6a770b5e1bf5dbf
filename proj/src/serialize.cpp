#include "stabreg/serialize.hpp"

#include <cctype>
#include <charconv>
#include <set>

namespace stabreg {

std::string fmt_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("cannot format number");
  return std::string(buf, p);
}

namespace {

int parse_int(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  if (pos < s.size() && s[pos] == '-') ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw Error("expected integer at position " + std::to_string(start) + " in '" + s + "'");
  return std::stoi(s.substr(start, pos - start));
}

}  // namespace

Group parse_group(const std::string& text) {
  std::vector<int> mod;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size() || text[pos] != 'Z')
      throw Error("expected 'Z' at position " + std::to_string(pos) + " in group '" + text + "'");
    ++pos;
    mod.push_back(parse_int(text, pos));
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw Error("expected 'x' at position " + std::to_string(pos) + " in group '" + text + "'");
    ++pos;
  }
  return Group(mod);
}

Element parse_element(const Group& g, const std::string& text) {
  std::size_t pos = 0;
  Element e;
  auto reduce = [&](int v, int axis) {
    const int n = g.moduli()[static_cast<std::size_t>(axis)];
    return ((v % n) + n) % n;
  };
  if (!text.empty() && text[0] == '(') {
    ++pos;
    while (true) {
      if (static_cast<int>(e.coords.size()) >= g.factors()) throw Error("too many coordinates in '" + text + "'");
      e.coords.push_back(reduce(parse_int(text, pos), static_cast<int>(e.coords.size())));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw Error("expected ',' or ')' at position " + std::to_string(pos) + " in '" + text + "'");
    }
  } else {
    if (!g.is_cyclic()) throw Error("element '" + text + "' needs tuple form in " + g.to_string());
    e.coords.push_back(reduce(parse_int(text, pos), 0));
  }
  if (pos != text.size()) throw Error("trailing characters in element '" + text + "'");
  if (static_cast<int>(e.coords.size()) != g.factors()) throw Error("wrong arity in element '" + text + "'");
  return e;
}

json element_to_json(const Group& g, Rank r) {
  if (g.is_cyclic()) return r;
  return g.format(r);
}

Rank element_from_json(const Group& g, const json& j) {
  if (j.is_number_integer()) {
    if (!g.is_cyclic()) throw Error("bare integer element in non-cyclic group");
    return g.rank(parse_element(g, std::to_string(j.get<long long>())));
  }
  if (j.is_string()) return g.rank(parse_element(g, j.get<std::string>()));
  throw Error("element must be an integer or string");
}

json members_to_json(const GSet& s) {
  json arr = json::array();
  s.for_each([&](Rank r) { arr.push_back(element_to_json(s.group(), r)); });
  return arr;
}

GSet members_from_json(const Group& g, const json& j) {
  GSet s(g);
  for (const auto& e : j) s.insert(element_from_json(g, e));
  return s;
}

json to_json(const Magnitude& m) {
  switch (m.kind()) {
    case Magnitude::Kind::Exact: return {{"exact", m.str()}};
    case Magnitude::Kind::Real: return {{"value", m.to_double()}};
    case Magnitude::Kind::Log10: return {{"log10", m.log10()}};
    case Magnitude::Kind::Symbolic: return {{"symbolic", m.str()}};
  }
  return nullptr;
}

json to_json(const OrderWitness& w, const Group& g) {
  json a = json::array(), b = json::array();
  for (Rank x : w.a) a.push_back(element_to_json(g, x));
  for (Rank x : w.b) b.push_back(element_to_json(g, x));
  return {{"kind", "order"}, {"k", w.k}, {"a", a}, {"b", b}};
}

json to_json(const TreeWitness& w, const Group& g) {
  json a = json::object(), b = json::object();
  for (const auto& [k, v] : w.a) a[k] = element_to_json(g, v);
  for (const auto& [k, v] : w.b) b[k] = element_to_json(g, v);
  return {{"kind", "tree"}, {"d", w.d}, {"a", a}, {"b", b}};
}

OrderWitness order_witness_from_json(const Group& g, const json& j) {
  OrderWitness w;
  w.k = j.at("k").get<int>();
  for (const auto& e : j.at("a")) w.a.push_back(element_from_json(g, e));
  for (const auto& e : j.at("b")) w.b.push_back(element_from_json(g, e));
  return w;
}

TreeWitness tree_witness_from_json(const Group& g, const json& j) {
  TreeWitness w;
  w.d = j.at("d").get<int>();
  for (const auto& [k, v] : j.at("a").items()) w.a[k] = element_from_json(g, v);
  for (const auto& [k, v] : j.at("b").items()) w.b[k] = element_from_json(g, v);
  return w;
}

json to_json(const BohrSet& b) {
  const Group& g = b.group();
  json freq = json::array();
  for (Rank c : b.freq()) freq.push_back(element_to_json(g, c));
  json j = {{"freq", freq}, {"width", b.width()}, {"size", b.size()}, {"regular", b.regular()}};
  if (b.domain()) j["domain"] = to_json(*b.domain());
  j["members"] = members_to_json(b.members());
  return j;
}

json to_json(const Subgroup& h) {
  const Group& g = h.group();
  json gens = json::array();
  for (Rank x : h.generators()) gens.push_back(element_to_json(g, x));
  return {{"generators", gens}, {"size", h.size()}, {"index", h.index()}, {"members", members_to_json(h.members())}};
}

json to_json(const TranslateClassification& tc, const Group& g) {
  json j = {{"epsilon", tc.epsilon.str()},
            {"counts", {{"nearEmpty", tc.near_empty}, {"nearFull", tc.near_full}, {"both", tc.both}, {"bad", tc.bad}}}};
  j["badWitness"] = tc.first_bad ? element_to_json(g, *tc.first_bad) : json(nullptr);
  if (tc.overlap_flag) j["overlap"] = true;
  return j;
}

json to_json(const ParameterLedger& l) {
  json ell = json::array();
  for (const auto& [t, v] : l.ell) ell.push_back({{"t", t}, {"ell", to_json(v)}});
  json j = {{"k", l.k},
            {"epsilon", l.epsilon.str()},
            {"r", l.r},
            {"m", l.m},
            {"depthCap", l.depth_cap},
            {"constants",
             {{"status", "uncertified"},
              {"D", to_json(l.D)},
              {"F", l.constants.F},
              {"C1", l.constants.C1},
              {"C2", l.constants.C2},
              {"M", l.constants.M},
              {"Ck", l.constants.Ck}}},
            {"ell", ell},
            {"rankTarget", to_json(l.rank_target)},
            {"widthTarget", to_json(l.width_target)},
            {"indexTarget", to_json(l.index_target)}};
  json ach = json::object();
  if (l.achieved_rank) ach["rank"] = *l.achieved_rank;
  if (l.achieved_width) ach["width"] = *l.achieved_width;
  if (l.achieved_index) ach["index"] = *l.achieved_index;
  j["achieved"] = ach;
  return j;
}

json to_json(const GoodStructureCertificate& c) {
  const Group& g = c.members().group();
  json j;
  j["kind"] = c.kind == GoodStructureCertificate::Kind::Bohr ? "bohr" : "subgroup";
  j["epsilon"] = c.epsilon.str();
  j["node"] = c.node;
  j["trivial"] = c.trivial;
  j["structure"] = c.bohr ? to_json(*c.bohr) : to_json(*c.subgroup);
  j["classification"] = to_json(c.classification, g);
  return j;
}

json to_json(const EngineOutcome& o, const Group& g) {
  json j;
  j["kind"] = to_string(o.kind);
  if (o.certificate) j["certificate"] = to_json(*o.certificate);
  if (o.witness) j["witness"] = to_json(*o.witness, g);
  if (!o.reason.empty()) j["reason"] = o.reason;
  j["diagnostics"] = o.diagnostics;
  j["kAssumed"] = o.k_assumed;
  j["depthCap"] = o.depth_cap;
  j["depthReached"] = o.depth_reached;
  return j;
}

json to_json(const DenseFunction& f) {
  json vals = json::array();
  for (const auto& v : f.values) vals.push_back({v.real(), v.imag()});
  return {{"group", f.group.to_string()}, {"values", vals}};
}

Constants constants_from_json(const json& j) {
  Constants c;
  const std::set<std::string> known{"D", "F", "C1", "C2", "M", "Ck"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw Error("unknown constant '" + k + "'");
  if (j.contains("D")) c.D = j["D"].get<double>();
  if (j.contains("F")) c.F = j["F"].get<double>();
  if (j.contains("C1")) c.C1 = j["C1"].get<double>();
  if (j.contains("C2")) c.C2 = j["C2"].get<double>();
  if (j.contains("M")) c.M = j["M"].get<double>();
  if (j.contains("Ck")) c.Ck = j["Ck"].get<double>();
  return c;
}

}  // namespace stabreg
