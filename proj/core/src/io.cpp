#include "obbm/io.hpp"

#include "obbm/blocks.hpp"
#include "obbm/errors.hpp"
#include "obbm/oracle.hpp"
#include "obbm/plan.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace obbm {

namespace {

Rational field_rational(const nlohmann::json& obstacle, const char* key,
                        std::size_t index) {
  if (!obstacle.contains(key))
    throw std::invalid_argument("obstacle " + std::to_string(index) +
                                " missing field '" + key + "'");
  const auto& v = obstacle.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument("obstacle " + std::to_string(index) + " field '" +
                              key + "' must be a \"p/q\" string or integer");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ObstacleLandscape parse_landscape_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("landscape JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("obstacles") || !doc["obstacles"].is_array())
    throw std::invalid_argument("landscape JSON must be {\"obstacles\": [...]}");
  std::vector<std::pair<Rational, Rational>> raw;
  std::size_t index = 1;
  for (const auto& ob : doc["obstacles"]) {
    raw.emplace_back(field_rational(ob, "a", index), field_rational(ob, "b", index));
    ++index;
  }
  return validate_landscape(raw);
}

ObstacleLandscape load_landscape(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open landscape file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_landscape_json(ss.str());
}

nlohmann::json analyze_report(const ObstacleLandscape& L) {
  nlohmann::json out;
  nlohmann::json obstacles = nlohmann::json::array();
  for (std::size_t i = 0; i < L.size(); ++i)
    obstacles.push_back({{"a", format_rational(L.a[i])}, {"b", format_rational(L.b[i])}});
  out["obstacles"] = obstacles;

  if (L.empty()) {
    out["s_indices"] = nlohmann::json::array();
    out["blocks"] = nlohmann::json::array();
    out["per_block"] = nlohmann::json::array();
    out["x_star"] = nlohmann::json::array();
    out["y_star"] = nlohmann::json::array();
    out["c_star"] = nlohmann::json::array();
    out["total_time"] = 0.0;
  } else {
    out["s_indices"] = s_indices(L);
    const CrossingPlan plan = crossing_plan(L);
    out["blocks"] = plan.division.cuts;
    nlohmann::json per_block = nlohmann::json::array();
    for (std::size_t i = 0; i + 1 < plan.division.cuts.size(); ++i) {
      const BlockConstants bc = block_constants(L, plan.division, i);
      per_block.push_back({{"c_tilde", bc.c_tilde}, {"f", bc.f_value}});
    }
    out["per_block"] = per_block;
    out["x_star"] = plan.x_star;
    out["y_star"] = plan.y_star;
    out["c_star"] = plan.c_star;
    out["total_time"] = plan.total_time;
  }

  const FrontierEstimate fe = frontier(L);
  out["feasible"] = fe.feasible;
  if (fe.h_star) out["h_star"] = *fe.h_star;
  out["limit_over_t"] = fe.limit_over_t;
  if (fe.partial) {
    nlohmann::json partial;
    partial["ell_hat_star"] = fe.partial->ell_hat_star;
    if (fe.partial->b_star) partial["b_star"] = *fe.partial->b_star;
    out["partial"] = partial;
  }
  return out;
}

nlohmann::json oracle_report(const ObstacleLandscape& L, double resolution) {
  if (L.empty()) throw std::invalid_argument("oracle requires at least one obstacle");
  nlohmann::json out;
  out["resolution"] = resolution;
  const FrontierEstimate fe = frontier(L);
  out["feasible"] = fe.feasible;
  if (!fe.feasible) {
    // Empty domain: the oracle must agree with the plan's verdict.
    try {
      brute_force_max_D(L, resolution);
      throw std::runtime_error("oracle found a point in an empty domain");
    } catch (const NoFeasiblePoint&) {
      out["status"] = "NoFeasiblePoint";
    }
    return out;
  }
  const double plan_value = (*fe.h_star) * (*fe.h_star) / 2.0;
  const OracleResult res = brute_force_max_D(L, resolution);
  out["plan_value"] = plan_value;
  out["oracle_value"] = res.value;
  out["abs_gap"] = std::abs(res.value - plan_value);
  out["argmax"] = {{"x", res.best.x}, {"y", res.best.y}};
  out["evaluations"] = res.evaluations;
  return out;
}

nlohmann::json simulate_summary(const SimConfig& cfg, const Aggregate& agg) {
  nlohmann::json out;
  nlohmann::json obstacles = nlohmann::json::array();
  for (std::size_t i = 0; i < cfg.landscape.size(); ++i)
    obstacles.push_back({{"a", format_rational(cfg.landscape.a[i])},
                         {"b", format_rational(cfg.landscape.b[i])}});
  out["obstacles"] = obstacles;
  out["t"] = cfg.horizon;
  out["dt"] = cfg.dt;
  out["cap"] = cfg.particle_cap;
  out["seed"] = cfg.seed;
  out["replicas"] = agg.replicas.size();
  out["mean_final_max"] = agg.mean_final_max;
  out["se_final_max"] = agg.se_final_max;
  out["mean_final_max_over_t"] = agg.mean_final_max / cfg.horizon;

  const FrontierEstimate fe = frontier(cfg.landscape);
  out["predicted_limit_over_t"] = fe.limit_over_t;
  out["feasible"] = fe.feasible;
  if (cfg.landscape.empty()) {
    // Homogeneous reference: m(t) = sqrt(2) t - (3 / (2 sqrt(2))) log t.
    const double mt = std::sqrt(2.0) * cfg.horizon -
                      1.5 / std::sqrt(2.0) * std::log(cfg.horizon);
    out["analytic_m_over_t"] = mt / cfg.horizon;
  }
  std::uint64_t pruned = 0;
  for (const auto& r : agg.replicas) pruned += r.pruned_mass;
  out["pruned_mass_total"] = pruned;
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t k = 0; k < cfg.record_levels.size(); ++k)
    levels.push_back({{"x", cfg.record_levels[k].first},
                      {"a", cfg.record_levels[k].second},
                      {"mean", agg.level_stats[k].first},
                      {"se", agg.level_stats[k].second}});
  out["levels"] = levels;
  return out;
}

std::string simulate_csv(const Aggregate& agg) {
  std::string out = "replica,time,running_max,population\n";
  for (std::size_t r = 0; r < agg.replicas.size(); ++r) {
    const SimResult& res = agg.replicas[r];
    for (std::size_t k = 0; k < res.max_trajectory.size(); ++k) {
      out += std::to_string(r);
      out += ',';
      out += fmt(res.max_trajectory[k].first);
      out += ',';
      out += fmt(res.max_trajectory[k].second);
      out += ',';
      out += std::to_string(res.population[k].second);
      out += '\n';
    }
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path dir = target.parent_path().empty() ? "." : target.parent_path();
  if (!fs::exists(dir))
    throw std::runtime_error("output directory does not exist: " + dir.string());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write to: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("short write to: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace obbm
