#pragma once

// Internal JSON helpers shared by io.cpp and suites.cpp. The public headers
// stay free of the JSON dependency; everything here converts between core
// types and nlohmann json values.

#include "linrel/relation.hpp"
#include "linrel/suites.hpp"

#include <json.hpp>

namespace linrel::detail {

using json = nlohmann::ordered_json;

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j, Field field);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, Field field);

json relation_to_json(const LinearRelation& t);
LinearRelation relation_from_json(const json& j);

json config_to_json(const TrialConfig& config);
json suite_result_to_json(const SuiteResult& result);
json report_to_json(const VerificationReport& report);

}  // namespace linrel::detail
