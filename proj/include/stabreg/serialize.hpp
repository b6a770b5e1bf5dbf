#pragma once

#include <json.hpp>

#include "stabreg/engine.hpp"
#include "stabreg/fourier.hpp"

namespace stabreg {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Bare integer for cyclic groups, "(a,b,...)" otherwise.
json element_to_json(const Group& g, Rank r);
Rank element_from_json(const Group& g, const json& j);
/// Parses "3" or "(1,2)".
Element parse_element(const Group& g, const std::string& text);
Group parse_group(const std::string& text);

json members_to_json(const GSet& s);
GSet members_from_json(const Group& g, const json& j);

json to_json(const Magnitude& m);
json to_json(const OrderWitness& w, const Group& g);
json to_json(const TreeWitness& w, const Group& g);
OrderWitness order_witness_from_json(const Group& g, const json& j);
TreeWitness tree_witness_from_json(const Group& g, const json& j);

json to_json(const BohrSet& b);
json to_json(const Subgroup& h);
json to_json(const TranslateClassification& tc, const Group& g);
json to_json(const ParameterLedger& l);
json to_json(const GoodStructureCertificate& c);
json to_json(const EngineOutcome& o, const Group& g);
json to_json(const DenseFunction& f);

Constants constants_from_json(const json& j);

/// Shortest round-trip decimal for a double.
std::string fmt_double(double v);

}  // namespace stabreg
