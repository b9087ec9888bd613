#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "obbm/errors.hpp"
#include "obbm/io.hpp"
#include "obbm/sim.hpp"

#include <filesystem>
#include <fstream>
#include <string>

using namespace obbm;
namespace fs = std::filesystem;

namespace {
const char* kSingleJson = R"({"obstacles": [{"a": "3/10", "b": "1/5"}]})";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}
}  // namespace

TEST_CASE("landscape JSON accepts p/q strings and integers") {
  const auto L = parse_landscape_json(kSingleJson);
  REQUIRE(L.size() == 1);
  CHECK(L.a[0] == Rational(3, 10));
  CHECK(L.b[0] == Rational(1, 5));

  const auto M = parse_landscape_json(R"({"obstacles": [{"a": 1, "b": "1/10"},
                                                        {"a": 1, "b": 2}]})");
  REQUIRE(M.size() == 2);
  CHECK(M.a[0] == 1);
  CHECK(M.b[1] == 2);

  CHECK(parse_landscape_json(R"({"obstacles": []})").empty());
}

TEST_CASE("landscape JSON errors carry context") {
  CHECK_THROWS_WITH_AS(parse_landscape_json("[1,2]"),
                       doctest::Contains("{\"obstacles\": [...]}"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_landscape_json(R"({"obstacles": [{"a": "1/2"}]})"),
      doctest::Contains("obstacle 1 missing field 'b'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_landscape_json(R"({"obstacles": [{"a": "1/2", "b": 0.5}]})"),
      doctest::Contains("\"p/q\" string or integer"), std::invalid_argument);
  CHECK_THROWS_AS(parse_landscape_json("{not json"), std::invalid_argument);

  // Validation errors surface the 1-based obstacle index.
  try {
    parse_landscape_json(R"({"obstacles": [{"a": 1, "b": 1}, {"a": "0", "b": 1}]})");
    FAIL("expected NonPositiveWidth");
  } catch (const NonPositiveWidth& e) {
    CHECK(e.index == 2);
    CHECK(e.which == 'a');
  }
}

TEST_CASE("load_landscape reads a file and reports missing paths") {
  const fs::path p = fs::temp_directory_path() / "obbm_io_landscape.json";
  atomic_write(p.string(), kSingleJson);
  const auto L = load_landscape(p.string());
  CHECK(L.a[0] == Rational(3, 10));
  fs::remove(p);
  CHECK_THROWS_WITH_AS(load_landscape(p.string()), doctest::Contains("cannot open"),
                       std::invalid_argument);
}

TEST_CASE("analyze report carries the full plan schema") {
  const auto rep = analyze_report(parse_landscape_json(kSingleJson));
  CHECK(rep["obstacles"][0]["a"] == "3/10");
  CHECK(rep["s_indices"] == std::vector<std::size_t>{0, 1});
  CHECK(rep["blocks"] == std::vector<std::size_t>{0, 1});
  CHECK(rep["per_block"][0]["c_tilde"].get<double>() == doctest::Approx(2.0 / 9.0));
  CHECK(rep["x_star"][0].get<double>() == doctest::Approx(0.3139888).epsilon(1e-6));
  CHECK(rep["total_time"].get<double>() == doctest::Approx(0.4311729).epsilon(1e-6));
  CHECK(rep["feasible"] == true);
  CHECK(rep["h_star"].get<double>() == doctest::Approx(0.8044432).epsilon(1e-6));
  CHECK(rep["limit_over_t"].get<double>() == doctest::Approx(1.3044432).epsilon(1e-6));
  CHECK_FALSE(rep.contains("partial"));

  const auto infeasible = analyze_report(parse_landscape_json(
      R"({"obstacles": [{"a": 1, "b": 1}]})"));
  CHECK(infeasible["feasible"] == false);
  CHECK_FALSE(infeasible.contains("h_star"));
  CHECK(infeasible["partial"]["ell_hat_star"] == 0);
  CHECK(infeasible["partial"]["b_star"].get<double>() ==
        doctest::Approx(0.2802621).epsilon(1e-6));
  CHECK(infeasible["limit_over_t"].get<double>() ==
        doctest::Approx(1.2802621).epsilon(1e-6));

  const auto flat = analyze_report(ObstacleLandscape{});
  CHECK(flat["obstacles"].empty());
  CHECK(flat["limit_over_t"].get<double>() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("oracle report states the gap or the empty-domain verdict") {
  const auto rep = oracle_report(parse_landscape_json(kSingleJson), 1e-2);
  CHECK(rep["feasible"] == true);
  CHECK(rep["abs_gap"].get<double>() < 1e-2);
  CHECK(rep["plan_value"].get<double>() == doctest::Approx(0.3235644).epsilon(1e-6));
  CHECK(rep["evaluations"].get<std::uint64_t>() > 0);
  CHECK(rep["argmax"]["x"].size() == 1);

  const auto empty = oracle_report(parse_landscape_json(
      R"({"obstacles": [{"a": 1, "b": 1}]})"), 1e-2);
  CHECK(empty["feasible"] == false);
  CHECK(empty["status"] == "NoFeasiblePoint");
  CHECK_FALSE(empty.contains("oracle_value"));
}

TEST_CASE("simulate outputs are schema-complete and byte-identical on rerun") {
  SimConfig cfg;
  cfg.landscape = parse_landscape_json(kSingleJson);
  cfg.horizon = 2.0;
  cfg.particle_cap = 5'000;
  cfg.seed = 99;
  cfg.record_levels = {{0.25, 0.1}};
  const Aggregate a1 = replicate(cfg, 3);
  const Aggregate a2 = replicate(cfg, 3);

  const auto sum = simulate_summary(cfg, a1);
  CHECK(sum["replicas"] == 3);
  CHECK(sum["seed"] == 99);
  CHECK(sum["feasible"] == true);
  CHECK(sum["predicted_limit_over_t"].get<double>() ==
        doctest::Approx(1.3044432).epsilon(1e-6));
  CHECK(sum["levels"].size() == 1);
  CHECK(sum["levels"][0]["x"] == 0.25);
  CHECK_FALSE(sum.contains("analytic_m_over_t"));  // only for the flat landscape
  CHECK(sum.dump() == simulate_summary(cfg, a2).dump());

  SimConfig flat;
  flat.horizon = 2.0;
  flat.particle_cap = 5'000;
  flat.seed = 99;
  const auto fsum = simulate_summary(flat, replicate(flat, 2));
  CHECK(fsum["analytic_m_over_t"].get<double>() ==
        doctest::Approx(std::sqrt(2.0) - 1.5 / std::sqrt(2.0) * std::log(2.0) / 2.0));

  const std::string csv = simulate_csv(a1);
  CHECK(csv == simulate_csv(a2));
  CHECK(csv.rfind("replica,time,running_max,population\n", 0) == 0);
  // Every line after the header is replica,float,float,integer.
  std::size_t lines = 0;
  for (std::size_t pos = csv.find('\n'); pos + 1 < csv.size();
       pos = csv.find('\n', pos + 1)) {
    const std::size_t end = csv.find('\n', pos + 1);
    const std::string line = csv.substr(pos + 1, end - pos - 1);
    CHECK(std::count(line.begin(), line.end(), ',') == 3);
    ++lines;
  }
  CHECK(lines >= 3);  // at least one sample row per replica
}

TEST_CASE("atomic_write leaves no temp file and rejects missing directories") {
  const fs::path dir = fs::temp_directory_path() / "obbm_io_atomic";
  fs::create_directory(dir);
  const fs::path target = dir / "out.json";
  atomic_write(target.string(), "first");
  CHECK(slurp(target) == "first");
  atomic_write(target.string(), "second");  // overwrite through rename
  CHECK(slurp(target) == "second");
  CHECK_FALSE(fs::exists(target.string() + ".tmp"));
  fs::remove_all(dir);

  CHECK_THROWS_WITH_AS(atomic_write((dir / "x.json").string(), "y"),
                       doctest::Contains(dir.string().c_str()), std::runtime_error);
}
