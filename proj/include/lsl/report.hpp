#pragma once

#include <string>

#include "json.hpp"
#include "lsl/verify.hpp"

namespace lsl {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

/// Assembles the JSON report for one surface run. Deterministic for fixed
/// inputs and seed, except for the `timestamp` field.
nlohmann::ordered_json make_report(const CatalogSurface& surface, const VerifyOutcome& outcome,
                                   const VerifyOptions& opt);

/// ISO-8601 UTC timestamp.
std::string utc_timestamp();

void write_json(const nlohmann::ordered_json& j, const std::string& path);

} // namespace lsl
