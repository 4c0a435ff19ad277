// test_cli.cpp - sweep, config, emission and end-to-end binary behavior
//
// Copyright (C) 2026 diamag developers
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "diamag/emit.hpp"
#include "diamag/ledger.hpp"
#include "diamag/sweep.hpp"

using namespace diamag;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_tool(const std::string& args, const std::string& out_path) {
  const std::string cmd =
      std::string(DIAMAG_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
  return std::system(cmd.c_str());
}

double cell_num(const SweepRow& row, const std::string& name) {
  for (const auto& [n, c] : row.outputs) {
    if (n == name) {
      REQUIRE(c.kind == Cell::Kind::Number);
      return c.num;
    }
  }
  REQUIRE(false);
  return 0.0;
}

}  // namespace

TEST_CASE("config JSON parsing and overlay") {
  RunConfig base;
  const std::string text = R"({
    "command": "decoherence",
    "material": "nanodiamond",
    "particle": {"radius_a": 5e-8, "mass_m": 2e-18, "beta": 0.5},
    "temperatures": [4, 77, 300],
    "delta_x": [1e-8, 2e-8],
    "method": "both",
    "diagnostics": true,
    "seed": 7
  })";
  const RunConfig cfg = apply_config_json(text, base);
  CHECK(cfg.command == Command::Decoherence);
  CHECK(cfg.material == "nanodiamond");
  CHECK(cfg.radius_a == 5e-8);
  CHECK(cfg.mass_m == 2e-18);
  CHECK(cfg.temperatures == std::vector<double>{4.0, 77.0, 300.0});
  CHECK(cfg.delta_x == std::vector<double>{1e-8, 2e-8});
  CHECK(cfg.method == MethodChoice::Both);
  CHECK(cfg.diagnostics);
  CHECK(cfg.seed == 7);

  CHECK_THROWS_AS(apply_config_json(R"({"tempratures": [300]})", base),
                  std::runtime_error);
  CHECK_THROWS_AS(apply_config_json(R"({"method": "fast"})", base),
                  std::runtime_error);
  CHECK_THROWS_AS(apply_config_json(R"({"temperatures": []})", base),
                  std::runtime_error);
  CHECK_THROWS_AS(apply_config_json("not json", base), std::runtime_error);

  const RunConfig inline_cfg = apply_config_json(
      R"({"material": {"chi_r": -0.5, "chi_i": 0.1, "epsilon_r": 3.0}})",
      base);
  const Material m = resolve_material(inline_cfg);
  CHECK(m.name == "inline");
  CHECK(m.chi_r == -0.5);
  CHECK(m.chi_i == 0.1);
  CHECK(m.epsilon_r == 3.0);

  // a named preset plus inline fields: the fields override the preset
  const RunConfig overlay_cfg = apply_config_json(
      R"({"material": {"name": "superconductor", "epsilon_r": 5.7}})", base);
  const Material sc = resolve_material(overlay_cfg);
  CHECK(sc.name == "superconductor");
  CHECK(sc.chi_r == -1.0);
  CHECK(sc.epsilon_r == 5.7);
}

TEST_CASE("unknown material lists the presets") {
  RunConfig cfg;
  cfg.material = "adamantium";
  try {
    resolve_material(cfg);
    CHECK(false);
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("nanodiamond") != std::string::npos);
    CHECK(msg.find("superconductor") != std::string::npos);
    CHECK(msg.find("vacuum") != std::string::npos);
  }
}

TEST_CASE("vacuum diffusion sweep is all zeros") {
  RunConfig cfg;
  cfg.command = Command::Diffusion;
  cfg.material = "vacuum";
  cfg.temperatures = {4.0, 300.0};
  cfg.method = MethodChoice::Both;
  const SweepResult result = run(cfg);
  REQUIRE(result.rows.size() == 2);
  CHECK(result.error_rows == 0);
  for (const SweepRow& row : result.rows) {
    CHECK(cell_num(row, "dp2_total_closed") == 0.0);
    CHECK(cell_num(row, "dp2_total_quadrature") == 0.0);
    CHECK(cell_num(row, "dp2_magnetic_closed") == 0.0);
    CHECK(row.flags.empty());
  }
}

TEST_CASE("delta_x^2 law is visible end to end") {
  RunConfig cfg;
  cfg.command = Command::Decoherence;
  cfg.material = "nanodiamond";
  cfg.temperatures = {300.0};
  cfg.delta_x = {1e-8, 2e-8};
  cfg.method = MethodChoice::Closed;
  const SweepResult result = run(cfg);
  REQUIRE(result.rows.size() == 2);
  const double g1 = cell_num(result.rows[0], "gamma");
  const double g2 = cell_num(result.rows[1], "gamma");
  CHECK(g2 == doctest::Approx(4.0 * g1).epsilon(1e-13));
}

TEST_CASE("T^9 law through adjacent sweep rows") {
  RunConfig cfg;
  cfg.command = Command::Diffusion;
  cfg.material = "nanodiamond";
  cfg.temperatures = {150.0, 300.0};
  cfg.method = MethodChoice::Closed;
  const SweepResult result = run(cfg);
  const double d1 = cell_num(result.rows[0], "dp2_total");
  const double d2 = cell_num(result.rows[1], "dp2_total");
  CHECK(d2 / d1 == doctest::Approx(512.0).epsilon(1e-12));
}

TEST_CASE("T^8 and d^2 laws through adjacent sweep rows") {
  RunConfig drag_cfg;
  drag_cfg.command = Command::Drag;
  drag_cfg.material = "nanodiamond";
  drag_cfg.temperatures = {150.0, 300.0};
  drag_cfg.method = MethodChoice::Closed;
  const SweepResult drag_rows = run(drag_cfg);
  CHECK(cell_num(drag_rows.rows[1], "xi_total") /
            cell_num(drag_rows.rows[0], "xi_total") ==
        doctest::Approx(256.0).epsilon(1e-12));

  RunConfig pair_cfg;
  pair_cfg.command = Command::Pair;
  pair_cfg.material = "nanodiamond";
  pair_cfg.temperatures = {300.0};
  pair_cfg.separation_d = {1e-9, 2e-9};  // deep long-wavelength regime
  pair_cfg.method = MethodChoice::Closed;
  const SweepResult pair_rows = run(pair_cfg);
  CHECK(cell_num(pair_rows.rows[1], "f_decoherence") /
            cell_num(pair_rows.rows[0], "f_decoherence") ==
        doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("drag sweep: closed and quadrature agree through the stack") {
  RunConfig cfg;
  cfg.command = Command::Drag;
  cfg.material = "nanodiamond";
  cfg.temperatures = {300.0};
  cfg.method = MethodChoice::Both;
  const SweepResult result = run(cfg);
  REQUIRE(result.rows.size() == 1);
  CHECK(cell_num(result.rows[0], "xi_scattering_reldiff") <= 1e-8);
  CHECK(result.rows[0].flags.empty());
}

TEST_CASE("emission is deterministic and round-trips") {
  RunConfig cfg;
  cfg.command = Command::Pair;
  cfg.material = "nanodiamond";
  cfg.temperatures = {77.0, 300.0};
  cfg.separation_d = {1e-8};
  cfg.method = MethodChoice::Both;
  cfg.diagnostics = true;
  const SweepResult r1 = run(cfg);
  const SweepResult r2 = run(cfg);

  std::ostringstream csv1, csv2, json1, json2;
  emit_csv(r1, csv1);
  emit_csv(r2, csv2);
  emit_json(r1, json1);
  emit_json(r2, json2);
  CHECK(csv1.str() == csv2.str());
  CHECK(json1.str() == json2.str());
  CHECK(csv1.str().find('\r') == std::string::npos);

  // header: inputs, then outputs alphabetically, then diagnostics, flags
  const std::string header = csv1.str().substr(csv1.str().rfind("# "));
  // numbers carry 17 significant digits
  CHECK(csv1.str().find("e+02") != std::string::npos);  // temperature column

  // JSON parses and preserves every numeric field exactly
  const nlohmann::json parsed = nlohmann::json::parse(json1.str());
  REQUIRE(parsed.contains("metadata"));
  REQUIRE(parsed.contains("rows"));
  REQUIRE(parsed["rows"].size() == r1.rows.size());
  for (std::size_t i = 0; i < r1.rows.size(); ++i) {
    for (const auto& [name, cell] : r1.rows[i].outputs) {
      if (cell.kind == Cell::Kind::Number) {
        CHECK(parsed["rows"][i][name].get<double>() == cell.num);
      }
    }
  }
}

TEST_CASE("emit refuses empty sweeps") {
  SweepResult empty;
  std::ostringstream os;
  CHECK_THROWS_AS(emit_csv(empty, os), std::logic_error);
  CHECK_THROWS_AS(emit_json(empty, os), std::logic_error);
}

TEST_CASE("materials command lists presets") {
  RunConfig cfg;
  cfg.command = Command::Materials;
  const SweepResult result = run(cfg);
  REQUIRE(result.rows.size() == 3);
  CHECK(result.rows[0].inputs[0].second.text == "nanodiamond");
  // superconductor has no epsilon preset; the cell is empty
  bool found_sc = false;
  for (const SweepRow& row : result.rows) {
    if (row.inputs[0].second.text == "superconductor") {
      found_sc = true;
      for (const auto& [name, cell] : row.outputs) {
        if (name == "epsilon_r") CHECK(cell.kind == Cell::Kind::Empty);
      }
    }
  }
  CHECK(found_sc);
}

TEST_CASE("ledger formatting") {
  const std::string text = format_ledger();
  CHECK(discrepancy_ledger().size() >= 4);
  CHECK(text.find("drag-absorption-coefficient") != std::string::npos);
  CHECK(text.find("ratio-prose-superconductor") != std::string::npos);
  CHECK(text.find("fdt-constant") != std::string::npos);
  CHECK(text.find("41.47") != std::string::npos);
}

TEST_CASE("simulate sweep carries the stochastic diagnostics") {
  RunConfig cfg;
  cfg.command = Command::Simulate;
  cfg.material = "nanodiamond";
  cfg.temperatures = {300.0};
  cfg.seed = 42;
  cfg.sim.n_particles = 2000;
  const SweepResult result = run(cfg);
  REQUIRE(result.rows.size() == 1);
  const SweepRow& row = result.rows[0];
  CHECK(cell_num(row, "fdt_ratio") == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(cell_num(row, "ks_statistic") <
        cell_num(row, "ks_critical_1pct") * 2.0);
  CHECK(cell_num(row, "equipartition_rel_error") < 0.1);
  // e.g. the effective bath temperature implied by D/(m xi k_B) = 4 T
  CHECK(cell_num(row, "t_eff_k") == doctest::Approx(1200.0).epsilon(1e-9));
}

TEST_CASE("binary: golden decoherence sweep, byte-identical across runs") {
  const std::string dir = DIAMAG_TEST_DIR;
  const std::string cfg = dir + "/data/golden_decoherence.json";
  const std::string csv_a = "/tmp/diamag_golden_a.csv";
  const std::string csv_b = "/tmp/diamag_golden_b.csv";
  const std::string json_a = "/tmp/diamag_golden_a.json";
  REQUIRE(run_tool("decoherence --config " + cfg + " --format csv", csv_a) ==
          0);
  REQUIRE(run_tool("decoherence --config " + cfg + " --format csv", csv_b) ==
          0);
  CHECK(slurp(csv_a) == slurp(csv_b));
  CHECK(slurp(csv_a) == slurp(dir + "/golden/decoherence_nanodiamond.csv"));

  REQUIRE(run_tool("decoherence --config " + cfg + " --format json",
                   json_a) == 0);
  CHECK(slurp(json_a) == slurp(dir + "/golden/decoherence_nanodiamond.json"));
}

TEST_CASE("binary: flags override config and bad input fails loudly") {
  const std::string dir = DIAMAG_TEST_DIR;
  const std::string cfg = dir + "/data/golden_decoherence.json";
  const std::string out = "/tmp/diamag_cli_out.txt";
  // -T override shrinks the sweep to a single temperature: 2 delta_x rows + 1
  // header + 4 metadata lines
  REQUIRE(run_tool("decoherence --config " + cfg + " -T 300", out) == 0);
  {
    std::istringstream is(slurp(out));
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
      if (!line.empty() && line[0] != '#') ++rows;
    }
    CHECK(rows == 1 + 2);  // header + two delta_x rows
  }
  CHECK(run_tool("diffusion --material adamantium", out) != 0);
  CHECK(run_tool("diffusion -T -4", out) != 0);
  CHECK(run_tool("simulate --material vacuum", out) != 0);
}

TEST_CASE("materials file feeds the sweep") {
  const std::string dir = DIAMAG_TEST_DIR;
  RunConfig cfg;
  cfg.command = Command::Drag;
  cfg.material = "bismuth";
  cfg.materials_file = dir + "/../share/materials.presets";
  cfg.temperatures = {300.0};
  cfg.method = MethodChoice::Closed;
  const SweepResult result = run(cfg);
  REQUIRE(result.rows.size() == 1);
  CHECK(cell_num(result.rows[0], "xi_total") > 0.0);

  // materials command also lists the file entries
  RunConfig list_cfg;
  list_cfg.command = Command::Materials;
  list_cfg.materials_file = cfg.materials_file;
  const SweepResult mats = run(list_cfg);
  CHECK(mats.rows.size() == 6);  // 3 builtin + 3 from the file
}

TEST_CASE("simulate with a Fokker-Planck column") {
  RunConfig cfg;
  cfg.command = Command::Simulate;
  cfg.material = "nanodiamond";
  cfg.temperatures = {300.0};
  cfg.seed = 42;
  cfg.sim.n_particles = 1000;
  cfg.sim.fp_cells = 400;
  const SweepResult result = run(cfg);
  REQUIRE(result.rows.size() == 1);
  CHECK(cell_num(result.rows[0], "fp_l1_to_maxwell") <= 1e-3);
}

TEST_CASE("binary: ledger command prints the report") {
  const std::string out = "/tmp/diamag_ledger.txt";
  REQUIRE(run_tool("ledger", out) == 0);
  CHECK(slurp(out) == format_ledger());
}
