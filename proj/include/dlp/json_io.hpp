#ifndef DLP_JSON_IO_HPP
#define DLP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "dlp/eigenstructure.hpp"
#include "dlp/genstruct.hpp"
#include "dlp/polymat.hpp"

namespace dlp {

using json = nlohmann::json;

/// PolyMat schema: {"m", "n", "grade", "coeffs": [coeff_0, ..., coeff_grade]}
/// where coeff_t is a row-major matrix of "p/q" strings and t is the power
/// of z. All rationals are serialized as exact "p/q" (or "p") strings.
json polymat_to_json(const PolyMat& P);
PolyMat polymat_from_json(const json& j);

json eigenstructure_to_json(const Eigenstructure& E);
Eigenstructure eigenstructure_from_json(const json& j);

json kronecker_spec_to_json(const KroneckerSpec& s);
KroneckerSpec kronecker_spec_from_json(const json& j);

/// Throws std::runtime_error with a short diagnostic on missing files or
/// malformed JSON.
json load_json_file(const std::string& path);
PolyMat load_polymat(const std::string& path);

}  // namespace dlp

#endif
