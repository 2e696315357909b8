#pragma once

#include <json.hpp>

#include "irrmeasure/error.hpp"
#include "irrmeasure/theorems.hpp"

namespace irrmeasure {

/// Rendering options shared by every certificate.
struct RenderOptions {
    unsigned digits = 12;
    unsigned long cap_bits = kDefaultPrecisionCapBits;
};

// Certificates follow {kind, indices, t, exact_values, decimal, verdict};
// exact values are surd strings "a+b√D".
nlohmann::json to_json(const Witness& w, const RenderOptions& opt);
nlohmann::json to_json(const Coincidence& c, std::string_view kind);
nlohmann::json to_json(const DichotomyReport& r, const RenderOptions& opt);
nlohmann::json to_json(const GapCertificate& c, const RenderOptions& opt);
nlohmann::json to_json(const OptimalPair& p, const RenderOptions& opt);
nlohmann::json to_json(const NearOptimalityReport& r, const RenderOptions& opt);
nlohmann::json to_json(const PsiValue& v, const RenderOptions& opt);
nlohmann::json to_json(const MergedWord& word);
nlohmann::json to_json(const Error& e);

}  // namespace irrmeasure
