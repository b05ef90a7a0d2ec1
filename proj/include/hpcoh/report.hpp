#pragma once

#include <string>

#include <json.hpp>

#include "hpcoh/cohomology.hpp"
#include "hpcoh/expression.hpp"

namespace hpcoh {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& c);  // {"re": "p/q", "im": "p/q"}
GradedElement vector_element(const Vector& v);

Json structure_json(const SchoutenComplex& cx, const Labels& labels);
std::string structure_text(const SchoutenComplex& cx, const Labels& labels);

Json report_json(const CohomologyReport& rep, const SchoutenComplex& cx, const Labels& labels);
std::string report_text(const CohomologyReport& rep, const SchoutenComplex& cx, const Labels& labels);

// One line: "solvable: X = -T1", "trivial_action: ...", or
// "unsolvable: spectral sequence does not degenerate".
std::string obstruction_summary(const ObstructionResult& res, const Labels& labels);
Json obstruction_json(const ObstructionResult& res, const Labels& labels);

Json deformed_json(const DeformedResult& res, const Labels& labels);
std::string deformed_text(const DeformedResult& res, const Labels& labels);

}  // namespace hpcoh
