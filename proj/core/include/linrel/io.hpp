#pragma once

#include "linrel/relation.hpp"
#include "linrel/suites.hpp"

#include <string>

namespace linrel {

// Relation file schema: an object with "field" ("real" | "complex"),
// positive integers "n" and "m", optional "tol", and "generators", a list
// of {"x": [...], "y": [...]} pairs whose entries are [re, im] pairs (a
// bare number is accepted on input and read as a real entry).
std::string relation_to_json(const LinearRelation& t, int indent = 2);
LinearRelation relation_from_json(const std::string& text);

void write_relation_file(const std::string& path, const LinearRelation& t);
LinearRelation read_relation_file(const std::string& path);

// Vectors serialize as a list of [re, im] pairs.
std::string vector_to_json(const Vector& v);
Vector vector_from_json(const std::string& text);

// Report file schema: {"schema_version": 1, "config": {...},
// "suites": [...], "timing": {"total_seconds": ...}}. Identical runs differ
// only under "timing".
std::string report_to_json(const VerificationReport& report, int indent = 2);

// Runs the configured suites and serializes the result. The CLI and the
// determinism checks share this single entry point.
std::string verify_to_json(const TrialConfig& config, int indent = 2);

// Value formatted with 12 significant digits.
std::string format_sig(double value);

Field field_from_string(const std::string& name);

// "4x4,6x3" -> {{4,4},{6,3}}.
std::vector<std::pair<int, int>> parse_dims(const std::string& text);

}  // namespace linrel
