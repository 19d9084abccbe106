#include "maxaut/json_io.hpp"

#include "maxaut/errors.hpp"

namespace maxaut {

using nlohmann::json;

json to_json(const GroupParams& params) {
  json j;
  j["family"] = family_name(params.family);
  j["p"] = params.p;
  j["a"] = params.a;
  if (params.b) j["b"] = *params.b;
  if (params.c) j["c"] = *params.c;
  j["strict"] = params.strict;
  return j;
}

GroupParams group_params_from_json(const json& j) {
  try {
    Family f = family_from_name(j.at("family").get<std::string>());
    std::optional<std::int64_t> b, c;
    if (j.contains("b")) b = j.at("b").get<std::int64_t>();
    if (j.contains("c")) c = j.at("c").get<std::int64_t>();
    return validate_params(f, j.at("p").get<std::int64_t>(),
                           j.at("a").get<std::int64_t>(), b, c,
                           j.value("strict", true));
  } catch (const json::exception& e) {
    throw InvalidArgs(std::string("bad params JSON: ") + e.what());
  }
}

json to_json(const PcPresentation& P) {
  json j;
  j["p"] = P.p;
  j["bounds"] = P.bounds;
  j["tail_x"] = P.tail_x;
  j["tail_y"] = P.tail_y;
  j["tail_z"] = P.tail_z;
  j["n_total"] = P.n_total;
  return j;
}

PcPresentation presentation_from_json(const json& j) {
  try {
    PcPresentation P;
    P.p = j.at("p").get<std::int64_t>();
    P.bounds = j.at("bounds").get<std::array<std::int64_t, 5>>();
    P.tail_x = j.at("tail_x").get<std::array<std::int64_t, 3>>();
    P.tail_y = j.at("tail_y").get<std::array<std::int64_t, 3>>();
    P.tail_z = j.at("tail_z").get<std::array<std::int64_t, 2>>();
    P.n_total = j.at("n_total").get<int>();
    return P;
  } catch (const json::exception& e) {
    throw InvalidArgs(std::string("bad presentation JSON: ") + e.what());
  }
}

json group_file_json(const GroupParams& params, const PcPresentation& P) {
  json j;
  j["params"] = to_json(params);
  j["presentation"] = to_json(P);
  j["consistent"] = P.consistent;
  return j;
}

std::pair<GroupParams, PcPresentation> load_group_file(const json& j) {
  try {
    GroupParams params = group_params_from_json(j.at("params"));
    PcPresentation P = presentation_from_json(j.at("presentation"));
    P.consistent = j.value("consistent", false);
    return {params, P};
  } catch (const json::exception& e) {
    throw InvalidArgs(std::string("bad group file: ") + e.what());
  }
}

json to_json(const Element& g) {
  return json::array({g.i, g.j, g.k, g.m, g.n});
}

json to_json(const AutReport& rep, bool include_timing) {
  json j;
  if (rep.params) {
    json p = to_json(*rep.params);
    for (auto& [key, value] : p.items()) j[key] = value;
  }
  j["p"] = rep.p;
  j["n"] = rep.n;
  j["order"] = to_decimal(rep.order);
  j["gen_pairs"] = to_decimal(rep.generating_pair_count);
  j["aut_count"] = to_decimal(rep.relation_satisfying_count);
  j["hall_bound"] = to_decimal(rep.hall_bound_value);
  j["max_aut"] = rep.is_maximally_automorphic;
  if (include_timing) j["seconds"] = rep.seconds;
  return j;
}

json to_json(const Table1Report& rep) {
  json rows = json::array();
  for (const Table1Row& r : rep.rows) {
    json jr;
    jr["name"] = r.name;
    jr["g"] = to_json(r.g);
    jr["h"] = to_json(r.h);
    jr["relations_hold"] = r.relations_hold;
    jr["z_image"] = to_json(r.z_img);
    jr["u_image"] = to_json(r.u_img);
    jr["v_image"] = to_json(r.v_img);
    jr["z_expected"] = to_json(r.z_expected);
    jr["u_expected"] = to_json(r.u_expected);
    jr["v_expected"] = to_json(r.v_expected);
    jr["match"] = r.match;
    rows.push_back(jr);
  }
  return json{{"rows", rows}, {"pass", rep.pass}};
}

json to_json(const Table2Report& rep) {
  json j;
  j["params"] = to_json(rep.params);
  j["g3_type"] = rep.g3;
  j["gprime_type"] = rep.gprime;
  j["ab_type"] = rep.ab;
  j["g3_expected"] = rep.g3_expected;
  j["gprime_expected"] = rep.gprime_expected;
  j["ab_expected"] = rep.ab_expected;
  j["match"] = rep.match;
  return j;
}

json to_json(const Table3Report& rep) {
  json j;
  j["params"] = to_json(rep.params);
  j["order_expected"] = to_decimal(rep.order_expected);
  j["order_computed"] = to_decimal(rep.order_computed);
  j["type_expected"] = rep.type_expected;
  j["type_computed"] = rep.type_computed;
  j["genus_expected"] = to_decimal(rep.genus_expected);
  j["genus_computed"] = rep.genus_computed;
  j["match"] = rep.match;
  return j;
}

json to_json(const QuotientReport& rep, bool include_timing) {
  json j;
  j["parent"] = to_json(rep.parent);
  j["expected_family"] = family_name(rep.expected_family);
  j["quotient_params"] = to_json(rep.quotient_params);
  j["quotient_presentation"] = to_json(rep.quotient);
  j["presentation_matches"] = rep.presentation_matches;
  j["aut"] = to_json(rep.aut, include_timing);
  j["pass"] = rep.pass;
  return j;
}

json to_json(const MiReport& rep) {
  json j;
  j["all_isomorphic"] = rep.all_isomorphic;
  j["frattini_size"] = rep.frattini_size;
  j["sizes"] = rep.sizes;
  return j;
}

json to_json(const DessinReport& rep) {
  json j;
  j["order"] = to_decimal(rep.order);
  j["type"] = rep.type;
  j["genus"] = rep.genus;
  j["counts"] = json{{"black", rep.black_vertices},
                     {"white", rep.white_vertices},
                     {"edges", rep.edges},
                     {"faces", rep.faces}};
  return j;
}

}  // namespace maxaut
