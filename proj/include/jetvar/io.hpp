#pragma once

#include "json.hpp"

#include "jetvar/forms.hpp"
#include "jetvar/jetcalc.hpp"
#include "jetvar/liegroup.hpp"
#include "jetvar/tensors.hpp"

namespace jetvar {

using Json = nlohmann::ordered_json;

Json polyToJson(const FieldPoly& p);
FieldPoly polyFromJson(const Json& j, const VariableFamily& fam);

Json helmholtzToJson(const HelmholtzReport& rep);

Json ensembleToJson(const TensorEnsemble& T);
TensorEnsemble ensembleFromJson(const Json& j, int n, int m, int cap = -1);

Json formToJson(const DiffForm& a);

Json groupToJson(const GroupElement& a);
GroupElement groupFromJson(const Json& j);
Json velocityToJson(const Velocity& x);
Velocity velocityFromJson(const Json& j);

}  // namespace jetvar
