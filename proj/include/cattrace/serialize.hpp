#pragma once

#include <json.hpp>

#include "cattrace/algebra.hpp"
#include "cattrace/cocycle.hpp"
#include "cattrace/group.hpp"
#include "cattrace/tworep.hpp"
#include "cattrace/twomatrix.hpp"

namespace cattrace {

using Json = nlohmann::ordered_json;

// Scalars serialize canonically as {"conductor": n, "coeffs": [["num","den"], ...]};
// plain integers and "p/q" strings are accepted on input.
Json to_json(const CycScalar& s);
CycScalar scalar_from_json(const Json& j);

Json to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

Json to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j);
// Accepts an inline group object or a spec string like "Z2xZ2".
GroupPtr group_from_json_or_spec(const Json& j);

Json to_json(const Cocycle& c);
Cocycle cocycle_from_json(const Json& j);

Json to_json(const VectMatrix& f);
VectMatrix vectmatrix_from_json(const Json& j);
Json to_json(const TwoNat& n);
TwoNat twonat_from_json(const Json& j);

Json to_json(const TwoRep& rep);
TwoRep tworep_from_json(const Json& j);

Json to_json(const StructAlgebra& a);
StructAlgebra algebra_from_json(const Json& j);

Json to_json(const GroupAction& a);
GroupAction action_from_json(const Json& j);

// FNV-1a over the canonical dump; stable across runs.
std::string content_hash(const Json& j);

}  // namespace cattrace
