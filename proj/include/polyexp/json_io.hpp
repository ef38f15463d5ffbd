#pragma once

#include <json.hpp>

#include "polyexp/polyexp.hpp"
#include "polyexp/solver.hpp"
#include "polyexp/subspace.hpp"

namespace polyexp {

// Wire encodings, kept in lockstep with the text formats:
//   scalar       {"re":"a/b","im":"c/d"}
//   polyexp      {"base":"shift"|"derivative","terms":[{"lambda":scalar,"coeffs":[scalar,...]}]}
//   decomposition{"invariant":bool,"components":[{"lambda":scalar,"multiplicity":int,
//                 "basis":[polyexp,...]}],"witness":polyexp?}
//   solution     {"particular":polyexp,"homogeneous":[polyexp,...],"residual_verified":bool}

nlohmann::json scalar_to_json(const GaussianRational& z);
GaussianRational scalar_from_json(const nlohmann::json& j);

nlohmann::json polyexp_to_json(const PolyExp& f, OperatorBase base);
std::pair<PolyExp, OperatorBase> polyexp_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const InvarianceReport& report, OperatorBase base);

nlohmann::json solution_to_json(const GeneralSolution& gs, bool residual_verified);

}  // namespace polyexp
