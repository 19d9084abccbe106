#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "maxaut/autos.hpp"
#include "maxaut/dessin.hpp"
#include "maxaut/oracle.hpp"
#include "maxaut/structure.hpp"

// JSON forms.  Counters that can outgrow doubles (orders, pair counts,
// bounds, genus expectations) are serialized as decimal strings so payloads
// stay lossless; small structural integers stay plain numbers.

namespace maxaut {

nlohmann::json to_json(const GroupParams& params);
GroupParams group_params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PcPresentation& P);
PcPresentation presentation_from_json(const nlohmann::json& j);

nlohmann::json group_file_json(const GroupParams& params,
                               const PcPresentation& P);
// returns {params, presentation}; throws InvalidArgs on malformed input
std::pair<GroupParams, PcPresentation> load_group_file(const nlohmann::json& j);

nlohmann::json to_json(const Element& g);

// include_timing controls the seconds field; payloads written by the CLI
// omit it so byte-identical reruns stay byte-identical
nlohmann::json to_json(const AutReport& rep, bool include_timing = false);
nlohmann::json to_json(const Table1Report& rep);
nlohmann::json to_json(const Table2Report& rep);
nlohmann::json to_json(const Table3Report& rep);
nlohmann::json to_json(const QuotientReport& rep, bool include_timing = false);
nlohmann::json to_json(const MiReport& rep);
nlohmann::json to_json(const DessinReport& rep);

}  // namespace maxaut
