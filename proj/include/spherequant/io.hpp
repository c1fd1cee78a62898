#pragma once

#include <string>

#include <json.hpp>

#include "spherequant/asymptotics.hpp"
#include "spherequant/discrete.hpp"
#include "spherequant/support.hpp"

namespace spherequant {

// measure schema: {"rho": float, "points": [[x,y,z],...], "weights": [w,...]}
nlohmann::json measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const nlohmann::json& j);

// result schema adds {"codepoints", "assignment", "distortion", "seed", ...}
nlohmann::json result_to_json(const QuantizationResult& res, double rho);

// support schema: {"kind": "...", "rho": ..., "latitude"/"length": ...}
nlohmann::json support_to_json(const CurveSupport& c);
CurveSupport support_from_json(const nlohmann::json& j);

/// Parses an error-sequence CSV with header "n,V,r" (r column optional,
/// default_r used when absent) or "n,L,V_n" as emitted by closed-form.
ErrorSequence error_sequence_from_csv(const std::string& text, double default_r = 2.0);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace spherequant
