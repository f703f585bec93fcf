#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qspec/repcore.hpp"
#include "qspec/spectral.hpp"
#include "qspec/twisted_trace.hpp"
#include "qspec/weight_oracle.hpp"

namespace qspec {

using Json = nlohmann::json;

/// {"terms": [[exponent, "coefficient"], ...]}, exponents ascending.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"exact": <LaurentPoly>, "classical": "<decimal>"}
Json to_json(const QuantumDimension& d);

/// {"highest": [n...], "entries": [[[m...], mult], ...]} sorted lexicographically by weight.
Json to_json(const WeightMultiplicityTable& t);
WeightMultiplicityTable table_from_json(const Json& j);

Json to_json(const ZetaResult& z);
Json to_json(const DimensionEstimate& e);
Json to_json(const ResidueResult& r);
Json to_json(const std::vector<DefectSample>& scan);
Json to_json(const SpectrumModel& m);

/// Model configuration:
///   {"ell": int, "N": int, "q": float,
///    "towers": [{"k": int, "base": [int...], "eig_model": "qnumber"|"pure",
///                "eig_offset": int, "m_start": int}, ...]}
/// Starts from default_model(ell, N, q, defaults); entry i of "towers" overrides
/// the fields it names on tower i of the default layout.
SpectrumModel model_from_json(const Json& config, const ModelOptions& defaults = {});

/// Deterministic text: keys sorted, 2-space indent, doubles with 17 significant
/// digits, non-finite doubles as null.
std::string dump_canonical(const Json& j);

}  // namespace qspec
