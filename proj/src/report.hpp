#pragma once

#include <string>

#include <json.hpp>

#include "family.hpp"
#include "oracle.hpp"
#include "saito.hpp"

namespace sforge {

using Json = nlohmann::ordered_json;

/// {d, alpha, beta, field, seed?, F1, F2, F}
Json instance_json(const DivisorInstance& inst);

/// Reads instance JSON. F is optional; when present and different from the family formula the
/// instance carries the given F (params still describe the family member it was derived from).
/// Throws InvalidParams (with the validation report text), SyntaxError, InvalidField.
DivisorInstance instance_from_json(const Json& j, bool require_squarefree = true);

Json validation_json(const ValidationReport& r);

Json resolution_json(const ResolutionReport& r);
/// "t,computed,predicted" rows.
std::string hilbert_csv(const ResolutionReport& r);
Json point_support_json(const PointSupportReport& r);
Json probe_json(const ProbeReport& r);

Json column_json(const std::array<PolyColumn, 3>& columns);

/// {route, pass, unit_c, column_degrees, residuals: {h6_relation, column2, column3, det}, constants: {a, b, mu, lambda},
///  quotients, notes}. Residuals that do not apply to the route are null.
Json saito_json(const DivisorInstance& inst, const SaitoMatrix& m, const SaitoReport& rep, bool* pass);

}  // namespace sforge
