#pragma once

// UTF-8 JSON (de)serialization for every file format the CLI speaks:
// cubes, chains, cochain/cocycle files, AC and SMC instance tables,
// classifying triples and Sinh pairs.

#include "accube/smc_bridge.hpp"

#include <json.hpp>

namespace accube {

using json = nlohmann::json;

json elem_to_json(const GroupElem& e);
GroupElem elem_from_json(const FiniteAbelianGroup& g, const json& j);

json cube_to_json(const FiniteAbelianGroup& a, const Cube& x);
Cube cube_from_json(const FiniteAbelianGroup& a, const json& j);

json chain_to_json(const Chain& c);
Chain chain_from_json(const FiniteAbelianGroup& a, int dim, const json& j);

// {"base": "Z2", "coeff": "Z2", "degree": 3, "values": [{"args": [...],
//  "value": [...]}, ...]}; omitted tuples are zero; nonzero values on
//  normalized-zero tuples are rejected
json cochain_to_json(const Cochain& z);
Cochain cochain_from_json(const json& j);

json ac_to_json(const ACInstance& x);
ACInstance ac_from_json(const json& j);
json smc_to_json(const SMCInstance& s);
SMCInstance smc_from_json(const json& j);

// {"group", "coeff", "cocycle_file"}; the cocycle path is resolved
// relative to base_dir
json triple_to_json(const ClassifyingTriple& t, const std::string& cocycle_file);
ClassifyingTriple triple_from_json(const json& j, const std::string& base_dir);

json sinh_to_json(const SinhPair& p);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace accube
