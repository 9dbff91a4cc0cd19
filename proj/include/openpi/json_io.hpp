// JSON encoding of syntax, verdicts, strategies and formula pairs.
//
// Processes, labels and formulae are nested objects with a "tag" field.
// Substitutions are lists of [from, to] pairs sorted by source name;
// histories are lists of [name, "i"|"o"]. Every to_json has a from_json
// inverse; decoding throws std::invalid_argument on malformed input.
#pragma once

#include <json.hpp>

#include "openpi/bisim.hpp"
#include "openpi/distinguish.hpp"
#include "openpi/history.hpp"
#include "openpi/syntax.hpp"

namespace openpi::json_io {

using json = nlohmann::json;

json to_json(const Label& l);
json to_json(const Process& p);
json to_json(const Formula& f);
json to_json(const Substitution& s);
json to_json(const History& h);
json to_json(const Strategy& s);
json to_json(const Verdict& v);
json to_json(const FormulaPair& f);

Label label_from_json(const json& j);
Process process_from_json(const json& j);
Formula formula_from_json(const json& j);
Substitution substitution_from_json(const json& j);
History history_from_json(const json& j);
Strategy strategy_from_json(const json& j);
Verdict verdict_from_json(const json& j);
FormulaPair formula_pair_from_json(const json& j);

}  // namespace openpi::json_io
