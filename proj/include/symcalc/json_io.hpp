#pragma once

#include <json.hpp>

#include "symcalc/springer.hpp"

namespace symcalc {

// Interchange schema for a pair: {"a": [ints], "a_prime": [ints]},
// both arrays nondecreasing and of equal length.
nlohmann::json to_json(const SymbolPair& p);
SymbolPair pair_from_json(const nlohmann::json& j);
SymbolPair pair_from_json_text(const std::string& text);

// {"kind":"terminal"} or
// {"kind":"split","left":{...},"right":{...},"m":int,"m_prime":int,
//  "proof_case":"a1|a2|b1|b2|c1|c2"} (proof_case omitted when unset).
nlohmann::json to_json(const Decomposition& d);

nlohmann::json to_json(const AtomLeaf& leaf);

// {"pair":{...},"split":"I"|"II"|null,"series":"B"|"C"|"D","n":int}
nlohmann::json to_json(const OrbitLabel& label, GroupSeries series, Entry n);

nlohmann::json to_json(const CountRow& row, GroupSeries series);

nlohmann::json to_json(const ExceptionalDelta& delta);

}  // namespace symcalc
