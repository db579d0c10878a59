#pragma once

#include <nlohmann/json_fwd.hpp>

#include "flagdescent/descent.hpp"
#include "flagdescent/weilres.hpp"

// Report builders shared by the shared-library C surface and the test suite.
// Scalars are emitted as {"re":[num,den],"im":[num,den]} and matrices as
// arrays of arrays of scalars.

namespace fd {

nlohmann::json scalar_json(const GaussianRational& z);
GaussianRational scalar_from_json(const nlohmann::json& j);
nlohmann::json matrix_json(const ExactMatrix& m);

// Dynkin scheme + every stable Pi' (or just the requested one) with its
// line-bundle lattice; examples lists admissible lambda with coordinates
// bounded by max_coord.
nlohmann::json classify_report(const StandardForm& form, const std::vector<int>* pi_prime, int max_coord);

nlohmann::json check_report(const StandardForm& form, const IntVec& lambda, const std::vector<int>& pi_prime);
nlohmann::json verify_w_report(const StandardForm& form);
nlohmann::json cocycle_report(const StandardForm& form, const IntVec& lambda);
nlohmann::json irr_report(const StandardForm& form, const IntVec& lambda);

// Request: {"gamma_table":[[...]], "base":{"target":..., "rank":...},
//           "galois":[{"target":[...],"sign":[...]}...], "w":[...],
//           "lambda":[[...],...] (optional)}
nlohmann::json res_classify_report(const nlohmann::json& request);

std::string render_text(const nlohmann::json& report);

} // namespace fd
