#pragma once

// JSON schemas (versioned "ks/1"):
//   SpherePoint    [re1, im1, re2, im2]
//   MoebiusMap     8 reals, row major [re a, im a, re b, im b, ...]
//   OrientedCircle {"coeffs": [d11, re d12, im d12, d22], "orientation": +-1}
//     coeffs hold the sign-canonical representative (first nonzero entry
//     positive); orientation * coeffs is the Hermitian matrix.
// Composite artifacts carry {"schema": "ks/1", "kind": ...}.

#include <string>

#include "json.hpp"
#include "ks/carpet.hpp"
#include "ks/flows.hpp"
#include "ks/kleinian.hpp"
#include "ks/slicer.hpp"
#include "ks/thickness.hpp"

namespace ks {

using json = nlohmann::json;

json to_json(const SpherePoint& p);
json to_json(const MoebiusMap& m);
json to_json(const OrientedCircle& c);
json to_json(const DiskFamily& f);
json to_json(const LabeledGapSystem& gs);
json to_json(const CantorApprox& ca);
json to_json(const ThickSetApprox& t);
json to_json(const GroupGenerators& g);
json to_json(const LimitSetApprox& lam);
json to_json(const Frame& f);

SpherePoint point_from_json(const json& j);
MoebiusMap map_from_json(const json& j);
OrientedCircle circle_from_json(const json& j);
DiskFamily family_from_json(const json& j);
LabeledGapSystem gaps_from_json(const json& j);
CantorApprox cantor_from_json(const json& j);
ThickSetApprox thick_from_json(const json& j);
GroupGenerators group_from_json(const json& j);
LimitSetApprox limit_set_from_json(const json& j);
Frame frame_from_json(const json& j);

json load_json(const std::string& path);
void save_json(const std::string& path, const json& j);

}  // namespace ks
