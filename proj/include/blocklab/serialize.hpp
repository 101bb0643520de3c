#pragma once

#include <json.hpp>

#include "blocklab/blocks.hpp"
#include "blocklab/chartab.hpp"
#include "blocklab/decomp.hpp"
#include "blocklab/gluing.hpp"
#include "blocklab/invariants.hpp"
#include "blocklab/weights.hpp"

namespace blocklab {

using Json = nlohmann::ordered_json;

Json to_json(const GroupTable& g);
Json to_json(const FamilyElement& e);
Json to_json(const Cyclotomic& c);
Json to_json(const FiniteAbelian& a);
Json to_json(const CharacterTable& t);
Json to_json(const BlockPartition& p);
Json to_json(const BlockInvariants& inv);
Json to_json(const SubsectionSum& s);
Json to_json(const Report& r);
Json to_json(const HeightResult& h);
Json to_json(const CensusReport& r);
Json to_json(const WeightLedger& l);
Json to_json(const GluingReport& r);

/// Accepts an integer, a [num, den] pair, or {"N": int, "coeffs": {exp: [num, den]}}.
Cyclotomic cyclotomic_from_json(const Json& j);
/// A list of rows, each a list of entries accepted by cyclotomic_from_json.
std::vector<DecompRow> rows_from_json(const Json& j);

}  // namespace blocklab
