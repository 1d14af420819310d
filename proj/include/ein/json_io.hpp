#pragma once

#include <json.hpp>

#include "ein/holonomy.hpp"
#include "ein/model.hpp"

namespace ein {

using nlohmann::json;

/// Canonical encoding "num/den", lowest terms, positive denominator.
json rat_to_json(const Rat& r);

/// Accepts "num/den", "num", or a JSON integer.
Rat rat_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

/// Row-major nested arrays of rational strings.
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json signature_to_json(const Signature& sig);
Signature signature_from_json(const json& j);

json alg_to_json(const AlgElement& x);
AlgElement alg_from_json(const json& j);

json group_to_json(const GroupElement& g);
GroupElement group_from_json(const json& j);

json subalgebra_to_json(const Subalgebra& s);
Subalgebra subalgebra_from_json(const json& j);

json point_to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const json& j, Cover cover = Cover::projective);

/// Curve segments as {"direction": matrix, "from": rational, "to": rational}.
PiecewiseCurve curve_from_json(const Signature& sig, const json& j);

/// Aligned rational matrix block for --pretty output.
std::string pretty_matrix(const Mat& m);

}  // namespace ein
