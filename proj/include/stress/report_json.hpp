#pragma once

#include <string>

#include "json.hpp"
#include "stress/classify.hpp"
#include "stress/geodesic.hpp"
#include "stress/verify.hpp"

namespace stress {

inline constexpr int kJsonSchemaVersion = 1;

// Field order is part of the schema; ordered_json keeps insertion order.
nlohmann::ordered_json to_json(const StressProfile& p);
nlohmann::ordered_json to_json(const ClassificationReport& r);
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = true);

std::string emit_json(const StressProfile& p);
std::string emit_json(const ClassificationReport& r);
std::string emit_json(const VerificationReport& r, bool include_timing = true);

}  // namespace stress
