#pragma once

#include "obbm/landscape.hpp"
#include "obbm/sim.hpp"

#include <json.hpp>

#include <string>

namespace obbm {

// Parses {"obstacles": [{"a": "3/10", "b": "1/5"}, ...]} with rationals as
// "p/q" strings or integers; validation errors carry the obstacle index.
ObstacleLandscape parse_landscape_json(const std::string& text);
ObstacleLandscape load_landscape(const std::string& path);

// Structured reports shared by the CLI and the test suite (schema-stable).
nlohmann::json analyze_report(const ObstacleLandscape& L);
nlohmann::json oracle_report(const ObstacleLandscape& L, double resolution);
nlohmann::json simulate_summary(const SimConfig& cfg, const Aggregate& agg);
std::string simulate_csv(const Aggregate& agg);

// Writes via a temp file in the target directory followed by rename.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace obbm
