#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qedlamb/lamb.hpp"
#include "qedlamb/report.hpp"
#include "reference/reference_values.hpp"

namespace ref = qedlamb::reference;
using qedlamb::EvalMode;
using qedlamb::IRCutoff;
using qedlamb::PhysicsConfig;
using qedlamb::QuantumNumbers;

namespace {

const QuantumNumbers kTwoS{2, 1, 1, +1};
const QuantumNumbers kTwoP12{2, 1, 1, -1};
const QuantumNumbers kTwoP32{2, 3, 1, +1};

void check_close(double got, double want, double rel) {
  if (std::abs(want) > 1e-300) {
    REQUIRE_THAT(got, Catch::Matchers::WithinRel(want, rel));
  } else {
    REQUIRE_THAT(got, Catch::Matchers::WithinAbs(want, 1e-300));
  }
}

PhysicsConfig schwinger_config() {
  PhysicsConfig cfg;
  cfg.alpha = 1.0 / 137.06;
  cfg.mass_factor = qedlamb::hydrogen_mass_factor();
  cfg.cutoff = IRCutoff::schwinger();
  return cfg;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("lamb unit and canonical closed-form splitting") {
  PhysicsConfig cfg;
  check_close(qedlamb::lamb_unit_mhz(cfg), ref::unit_mhz, 1e-12);
  check_close(qedlamb::lamb_cl_closed(cfg), ref::cl_canonical, 1e-12);
  const double lcut = cfg.cutoff.ln_2m_over_lambda(cfg.alpha);
  check_close(qedlamb::lamb_cl_closed(cfg) - lcut, ref::d_assembly, 1e-12);

  const auto sp = qedlamb::lamb_split(kTwoS, kTwoP12, cfg, EvalMode::closed_form);
  check_close(sp.c_l, ref::cl_canonical, 1e-12);
  check_close(sp.delta_mhz, ref::headline_mhz, 1e-12);
  REQUIRE(sp.cutoff_used.kind == qedlamb::IRCutoffKind::two_ln_inv_alpha);
}

TEST_CASE("bracketed C_L variant") {
  PhysicsConfig cfg;
  const double cl = qedlamb::lamb_cl_bracket(cfg);
  check_close(cl, ref::cl_bracket, 1e-12);
  const double lcut = cfg.cutoff.ln_2m_over_lambda(cfg.alpha);
  check_close(cl - lcut, ref::d_bracket, 1e-12);
  check_close(qedlamb::lamb_unit_mhz(cfg) * cl, ref::bracket_mhz, 1e-12);
}

TEST_CASE("exact-quadrature splitting") {
  PhysicsConfig cfg;
  const auto sp = qedlamb::lamb_split(kTwoS, kTwoP12, cfg);
  check_close(sp.delta_mhz, ref::exact_delta_mhz, 1e-6);
  check_close(sp.c_l, ref::exact_cl, 1e-6);

  const auto closed = qedlamb::lamb_split(kTwoS, kTwoP12, cfg, EvalMode::closed_form);
  REQUIRE(std::abs(sp.delta - closed.delta) / std::abs(closed.delta) < 0.10);
}

TEST_CASE("closed component-sum splitting") {
  PhysicsConfig cfg;
  const auto hi = qedlamb::level_shift(kTwoS, cfg);
  const auto lo = qedlamb::level_shift(kTwoP12, cfg);
  REQUIRE(hi.breakdown.closed_available);
  REQUIRE(lo.breakdown.closed_available);
  const double delta =
      hi.breakdown.total_closed_form - lo.breakdown.total_closed_form;
  check_close(qedlamb::energy_to_frequency(delta, cfg), ref::closed_sum_delta_mhz,
              1e-12);
  check_close(delta / qedlamb::lamb_unit_energy(cfg.alpha), ref::closed_sum_cl,
              1e-12);
}

TEST_CASE("Schwinger-era configuration") {
  const auto cfg = schwinger_config();
  check_close(qedlamb::lamb_unit_mhz(cfg), ref::schwinger_unit_mhz, 1e-12);
  check_close(qedlamb::lamb_cl_closed(cfg), ref::schwinger_cl, 1e-12);
  const auto sp = qedlamb::lamb_split(kTwoS, kTwoP12, cfg, EvalMode::closed_form);
  check_close(sp.delta_mhz, ref::schwinger_delta_mhz, 1e-12);
}

TEST_CASE("cutoff calibration") {
  PhysicsConfig cfg;
  const auto cal = qedlamb::calibrate_cutoff(qedlamb::kTargetExperimentMhz, cfg);
  check_close(cal.ln_2m_over_lambda, ref::calibrate_lcut_star, 1e-12);
  check_close(cal.offset_vs_ln_inv_alpha_sq, ref::calibrate_offset, 1e-12);

  // Affine root: a target of exactly unit * D calibrates to ln(2m/lambda) = 0.
  const double root_target =
      qedlamb::lamb_unit_mhz(cfg) * qedlamb::kLambAssemblyConstant;
  REQUIRE_THAT(qedlamb::calibrate_cutoff(root_target, cfg).ln_2m_over_lambda,
               Catch::Matchers::WithinAbs(0.0, 1e-12));

  // Linearity: doubling the target raises the cutoff by target / unit.
  const double t = 800.0;
  const double step = qedlamb::calibrate_cutoff(2.0 * t, cfg).ln_2m_over_lambda -
                      qedlamb::calibrate_cutoff(t, cfg).ln_2m_over_lambda;
  check_close(step, t / qedlamb::lamb_unit_mhz(cfg), 1e-12);

  REQUIRE_THROWS_AS(qedlamb::calibrate_cutoff(0.0, cfg), std::invalid_argument);
  REQUIRE_THROWS_AS(qedlamb::calibrate_cutoff(-5.0, cfg), std::invalid_argument);
}

TEST_CASE("closed splitting is affine in the explicit cutoff") {
  PhysicsConfig cfg;
  auto delta_at = [&cfg](double lcut) {
    PhysicsConfig c = cfg;
    c.cutoff = IRCutoff::explicit_cut(lcut);
    return qedlamb::lamb_split(kTwoS, kTwoP12, c, EvalMode::closed_form).delta;
  };
  const double d9 = delta_at(9.0);
  const double d10 = delta_at(10.0);
  const double d11 = delta_at(11.0);
  check_close(d10 - d9, d11 - d10, 1e-12);
  check_close(d10 - d9, qedlamb::lamb_unit_energy(cfg.alpha), 1e-12);
}

TEST_CASE("calibration inverts the closed splitting") {
  PhysicsConfig cfg;
  cfg.cutoff = IRCutoff::explicit_cut(9.5);
  const auto sp = qedlamb::lamb_split(kTwoS, kTwoP12, cfg, EvalMode::closed_form);
  const auto cal = qedlamb::calibrate_cutoff(sp.delta_mhz, cfg);
  check_close(cal.ln_2m_over_lambda, 9.5, 1e-10);
}

TEST_CASE("level shift breakdown structure") {
  PhysicsConfig cfg;
  for (const auto& qn : qedlamb::default_report_states()) {
    const auto ls = qedlamb::level_shift(qn, cfg);
    const auto& br = ls.breakdown;
    REQUIRE(br.total_quadrature == br.quadrature[0] + br.quadrature[1] +
                                       br.quadrature[2] + br.quadrature[3]);
    REQUIRE(br.closed_available);
    REQUIRE(br.total_closed_form == br.closed_form[0] + br.closed_form[1] +
                                        br.closed_form[2] + br.closed_form[3]);
    REQUIRE(ls.total == br.total_quadrature);
    check_close(ls.frequency_mhz, qedlamb::energy_to_frequency(ls.total, cfg),
                1e-15);
  }

  const auto p32 = qedlamb::level_shift(kTwoP32, cfg);
  const double a5 = std::pow(cfg.alpha, 5);
  for (double v : p32.breakdown.quadrature) REQUIRE(std::abs(v) <= a5);

  const auto hi = qedlamb::level_shift(kTwoS, cfg);
  const auto lo = qedlamb::level_shift(kTwoP12, cfg);
  const auto sp = qedlamb::lamb_split(kTwoS, kTwoP12, cfg);
  REQUIRE(sp.delta == hi.total - lo.total);

  // Equal (n, j), different sigma: degenerate unperturbed energies, split
  // entirely by the correction totals.
  REQUIRE(qedlamb::level(kTwoS, cfg).energy == qedlamb::level(kTwoP12, cfg).energy);
  REQUIRE(hi.total != lo.total);
}

TEST_CASE("closed-form availability propagation") {
  PhysicsConfig cfg;
  const QuantumNumbers three_s{3, 1, 1, +1};
  const auto ls = qedlamb::level_shift(three_s, cfg);
  REQUIRE_FALSE(ls.breakdown.closed_available);
  REQUIRE(ls.total == ls.breakdown.total_quadrature);
  REQUIRE_THROWS_AS(qedlamb::level_shift(three_s, cfg, EvalMode::closed_form),
                    qedlamb::UnsupportedStateError);
}

TEST_CASE("electric element is affine in the cutoff") {
  PhysicsConfig cfg;
  const double lcut = cfg.cutoff.ln_2m_over_lambda(cfg.alpha);
  auto elem_at = [&cfg](double l) {
    PhysicsConfig c = cfg;
    c.cutoff = IRCutoff::explicit_cut(l);
    return qedlamb::diagonal_element(kTwoS,
                                     qedlamb::CorrectionKind::electric_form_factor,
                                     c);
  };
  const double v0 = elem_at(lcut);
  const double v1 = elem_at(lcut + 1.0);
  const double v2 = elem_at(lcut + 2.0);
  check_close(v1 - v0, v2 - v1, 1e-7);
}

TEST_CASE("report document structure") {
  PhysicsConfig cfg;
  const auto doc =
      qedlamb::report_document(cfg, qedlamb::default_report_states());
  REQUIRE(doc["schema_version"].get<int>() == qedlamb::kReportSchemaVersion);
  REQUIRE(doc["matrix_elements"].size() == 16);
  REQUIRE(doc["spectrum"].size() == 4);
  REQUIRE(doc["level_shifts"].size() == 4);
  for (const auto& ls : doc["level_shifts"]) {
    REQUIRE_FALSE(ls["closed_form"].is_null());
  }
  REQUIRE(doc["lamb"]["cutoff_variants"].size() == 3);
  check_close(doc["lamb"]["unit_mhz"].get<double>(), ref::unit_mhz, 1e-12);
  check_close(doc["lamb"]["closed"]["c_l"].get<double>(), ref::cl_canonical,
              1e-12);
  check_close(doc["lamb"]["exact"]["delta_mhz"].get<double>(),
              ref::exact_delta_mhz, 1e-6);
  check_close(doc["lamb"]["bracket"]["c_l"].get<double>(), ref::cl_bracket,
              1e-12);
  check_close(doc["calibration"]["offset_vs_ln_inv_alpha_sq"].get<double>(),
              ref::calibrate_offset, 1e-12);

  // The two-ln variant row reproduces the canonical headline.
  const auto& variants = doc["lamb"]["cutoff_variants"];
  REQUIRE(variants[0]["cutoff"].get<std::string>() == "two-ln");
  REQUIRE(variants[1]["cutoff"].get<std::string>() == "schwinger");
  REQUIRE(variants[2]["cutoff"].get<std::string>() == "explicit");
  check_close(variants[0]["delta_mhz"].get<double>(), ref::headline_mhz, 1e-12);

  REQUIRE_THROWS_AS(qedlamb::report_document(cfg, {}), std::invalid_argument);
}

TEST_CASE("report renders are deterministic") {
  PhysicsConfig cfg;
  const auto& states = qedlamb::default_report_states();
  for (auto fmt : {qedlamb::ReportFormat::json, qedlamb::ReportFormat::csv,
                   qedlamb::ReportFormat::table}) {
    const auto a = qedlamb::render_report(cfg, states, fmt);
    const auto b = qedlamb::render_report(cfg, states, fmt);
    REQUIRE_FALSE(a.empty());
    REQUIRE(a == b);
  }

  const auto json_text =
      qedlamb::render_report(cfg, states, qedlamb::ReportFormat::json);
  const auto parsed = nlohmann::json::parse(json_text);
  REQUIRE(parsed["schema_version"].get<int>() == qedlamb::kReportSchemaVersion);
  REQUIRE(parsed["matrix_elements"].size() == 16);

  const auto csv_text =
      qedlamb::render_report(cfg, states, qedlamb::ReportFormat::csv);
  REQUIRE(csv_text.rfind("section,label,field,value\n", 0) == 0);
  std::size_t element_rows = 0;
  std::istringstream lines(csv_text);
  std::string linebuf;
  while (std::getline(lines, linebuf)) {
    if (linebuf.rfind("matrix_elements,", 0) == 0) ++element_rows;
  }
  REQUIRE(element_rows == 16 * 3);

  const auto table_text =
      qedlamb::render_report(cfg, states, qedlamb::ReportFormat::table);
  REQUIRE(table_text.find("lamb splitting 2s1/2 - 2p1/2") != std::string::npos);
}

TEST_CASE("report files are written atomically and reproducibly") {
  PhysicsConfig cfg;
  const auto& states = qedlamb::default_report_states();
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "qedlamb_report_test.json";
  const auto tmp = dir / "qedlamb_report_test.json.tmp";
  std::filesystem::remove(path);
  std::filesystem::remove(tmp);

  qedlamb::run_report(cfg, states, path.string(), qedlamb::ReportFormat::json);
  REQUIRE(std::filesystem::exists(path));
  REQUIRE_FALSE(std::filesystem::exists(tmp));
  const auto first = read_file(path);
  REQUIRE(first ==
          qedlamb::render_report(cfg, states, qedlamb::ReportFormat::json));

  qedlamb::run_report(cfg, states, path.string(), qedlamb::ReportFormat::json);
  REQUIRE(read_file(path) == first);
  std::filesystem::remove(path);

  REQUIRE_THROWS_AS(
      qedlamb::run_report(cfg, states,
                          (dir / "qedlamb_missing_dir" / "r.json").string(),
                          qedlamb::ReportFormat::json),
      std::runtime_error);
}

TEST_CASE("profile grids") {
  PhysicsConfig cfg;
  qedlamb::ProfileRequest req;
  req.kind = qedlamb::CorrectionKind::vacuum_polarization;
  req.qn = QuantumNumbers{1, 1, 1, +1};
  req.rho_min = 0.1;
  req.rho_max = 10.0;
  req.points = 5;

  const auto grid = qedlamb::profile_grid(req, cfg);
  REQUIRE(grid.size() == 5);
  check_close(grid.front().rho, 0.1, 1e-14);
  check_close(grid.back().rho, 10.0, 1e-14);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    REQUIRE(grid[i].rho > grid[i - 1].rho);
  }
  const auto direct =
      qedlamb::potential_sample(req.kind, grid[2].rho, req.qn, cfg);
  REQUIRE(grid[2].value == direct.value);

  qedlamb::ReportOptions options;
  options.profiles.push_back(req);
  const auto doc = qedlamb::report_document(
      cfg, qedlamb::default_report_states(), options);
  REQUIRE(doc.contains("profiles"));
  REQUIRE(doc["profiles"].size() == 1);
  REQUIRE(doc["profiles"][0]["samples"].size() == 5);
  check_close(doc["profiles"][0]["samples"][2]["value_mc2"].get<double>(),
              direct.value, 1e-15);

  qedlamb::ProfileRequest bad = req;
  bad.points = 1;
  REQUIRE_THROWS_AS(qedlamb::profile_grid(bad, cfg), std::invalid_argument);
  bad = req;
  bad.rho_min = 0.0;
  REQUIRE_THROWS_AS(qedlamb::profile_grid(bad, cfg), std::invalid_argument);
}
