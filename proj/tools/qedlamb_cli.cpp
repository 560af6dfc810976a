#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qedlamb/report.hpp"

namespace {

using nlohmann::ordered_json;
using qedlamb::CorrectionKind;
using qedlamb::EvalMode;
using qedlamb::IRCutoff;
using qedlamb::PhysicsConfig;
using qedlamb::QuantumNumbers;
using qedlamb::ReportFormat;

IRCutoff parse_cutoff(const std::string& text) {
  if (text == "two-ln") return IRCutoff::two_ln();
  if (text == "schwinger") return IRCutoff::schwinger();
  if (text.rfind("explicit:", 0) == 0) {
    std::size_t used = 0;
    const std::string tail = text.substr(9);
    double v = 0.0;
    try {
      v = std::stod(tail, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tail.size()) {
      throw std::invalid_argument("--cutoff explicit: expected a number after the colon, got " + text);
    }
    return IRCutoff::explicit_cut(v);
  }
  throw std::invalid_argument(
      "--cutoff: expected two-ln, schwinger, or explicit:<value>, got " + text);
}

EvalMode parse_mode(const std::string& text) {
  if (text == "exact") return EvalMode::exact_quadrature;
  if (text == "paper" || text == "closed") return EvalMode::closed_form;
  throw std::invalid_argument("--mode: expected exact, paper, or closed, got " +
                              text);
}

ReportFormat parse_format(const std::string& text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "table") return ReportFormat::table;
  throw std::invalid_argument("--format: expected json, csv, or table, got " +
                              text);
}

CorrectionKind parse_kind(const std::string& text) {
  for (const auto kind : qedlamb::correction_kinds()) {
    if (text == qedlamb::kind_name(kind)) return kind;
  }
  if (text == "pp") return CorrectionKind::photon_polarization;
  if (text == "elec") return CorrectionKind::electric_form_factor;
  if (text == "mag") return CorrectionKind::magnetic_form_factor;
  if (text == "vac") return CorrectionKind::vacuum_polarization;
  throw std::invalid_argument("--kind: unknown correction kind " + text);
}

// Inverse of QuantumNumbers::label(): forms like 1s1/2, 2p3/2, 3d5/2.
QuantumNumbers parse_state_label(const std::string& text) {
  const auto fail = [&text]() {
    throw std::invalid_argument("state label: expected forms like 2p3/2, got " +
                                text);
  };
  std::size_t i = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i == 0 || i >= text.size()) fail();
  const int n = std::stoi(text.substr(0, i));
  static const std::string letters = "spdfgh";
  const auto lpos =
      letters.find(std::tolower(static_cast<unsigned char>(text[i])));
  if (lpos == std::string::npos) fail();
  const int l = static_cast<int>(lpos);
  const std::string rest = text.substr(i + 1);
  if (rest.size() < 3 || rest.substr(rest.size() - 2) != "/2") fail();
  int two_j = 0;
  try {
    two_j = std::stoi(rest.substr(0, rest.size() - 2));
  } catch (const std::exception&) {
    fail();
  }
  int sigma = 0;
  if (two_j == 2 * l + 1) {
    sigma = +1;
  } else if (two_j == 2 * l - 1) {
    sigma = -1;
  } else {
    throw std::invalid_argument("state label: j must be l +- 1/2 in " + text);
  }
  QuantumNumbers qn{n, two_j, 1, sigma};
  qedlamb::validate(qn);
  return qn;
}

// Keys accepted in a JSON config file; command-line flags override them.
struct FileConfig {
  bool has_alpha = false;
  double alpha = 0.0;
  bool has_mass_factor = false;
  double mass_factor = 0.0;
  bool has_cutoff = false;
  std::string cutoff;
  bool has_mode = false;
  std::string mode;
  bool has_format = false;
  std::string format;
};

FileConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("--config: cannot open " + path);
  }
  ordered_json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("--config: " + path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("--config: " + path + ": expected a JSON object");
  }
  FileConfig fc;
  for (const auto& [key, value] : doc.items()) {
    if (key == "alpha") {
      fc.has_alpha = true;
      fc.alpha = value.get<double>();
    } else if (key == "mass_factor") {
      fc.has_mass_factor = true;
      fc.mass_factor = value.get<double>();
    } else if (key == "cutoff") {
      fc.has_cutoff = true;
      fc.cutoff = value.get<std::string>();
    } else if (key == "mode") {
      fc.has_mode = true;
      fc.mode = value.get<std::string>();
    } else if (key == "format") {
      fc.has_format = true;
      fc.format = value.get<std::string>();
    } else {
      throw std::invalid_argument("--config: " + path + ": unknown key " + key);
    }
  }
  return fc;
}

// Prints to stdout, or writes atomically when an output path is given.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << text;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed for " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " onto " + out_path);
  }
}

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_section(const ordered_json& config_section, const char* name,
                         const ordered_json& payload) {
  ordered_json doc;
  doc["schema_version"] = qedlamb::kReportSchemaVersion;
  doc["config"] = config_section;
  doc[name] = payload;
  return doc.dump(2) + "\n";
}

std::string render_spectrum(const ordered_json& doc, ReportFormat format) {
  if (format == ReportFormat::json) {
    return json_section(doc["config"], "spectrum", doc["spectrum"]);
  }
  if (format == ReportFormat::csv) {
    std::string out = "state,n,two_j,sigma,eps,energy_ev\n";
    for (const auto& st : doc["spectrum"]) {
      out += st["state"].get<std::string>() + ',' +
             std::to_string(st["n"].get<int>()) + ',' +
             std::to_string(st["two_j"].get<int>()) + ',' +
             std::to_string(st["sigma"].get<int>()) + ',' +
             csv_num(st["eps"].get<double>()) + ',' +
             csv_num(st["energy_ev"].get<double>()) + '\n';
    }
    return out;
  }
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-8s %-22s %-18s\n", "state", "eps",
                "energy [eV]");
  out += buf;
  for (const auto& st : doc["spectrum"]) {
    std::snprintf(buf, sizeof buf, "%-8s %.16e %.10e\n",
                  st["state"].get<std::string>().c_str(),
                  st["eps"].get<double>(), st["energy_ev"].get<double>());
    out += buf;
  }
  return out;
}

std::string render_elements(const ordered_json& doc, ReportFormat format) {
  if (format == ReportFormat::json) {
    return json_section(doc["config"], "matrix_elements", doc["matrix_elements"]);
  }
  if (format == ReportFormat::csv) {
    std::string out = "state,kind,quadrature_mc2,closed_form_mc2,rel_discrepancy\n";
    for (const auto& el : doc["matrix_elements"]) {
      out += el["state"].get<std::string>() + ',' +
             el["kind"].get<std::string>() + ',' +
             csv_num(el["quadrature_mc2"].get<double>()) + ',';
      out += el["closed_form_mc2"].is_null()
                 ? "nan"
                 : csv_num(el["closed_form_mc2"].get<double>());
      out += ',';
      out += el["rel_discrepancy"].is_null()
                 ? "nan"
                 : csv_num(el["rel_discrepancy"].get<double>());
      out += '\n';
    }
    return out;
  }
  std::string out;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%-8s %-22s %15s %15s %12s\n", "state", "kind",
                "quadrature", "closed form", "rel disc");
  out += buf;
  for (const auto& el : doc["matrix_elements"]) {
    const std::string closed =
        el["closed_form_mc2"].is_null()
            ? std::string{"            n/a"}
            : qedlamb::report_detail::fixed(el["closed_form_mc2"].get<double>());
    const std::string disc =
        el["rel_discrepancy"].is_null()
            ? std::string{"n/a"}
            : csv_num(el["rel_discrepancy"].get<double>()).substr(0, 12);
    std::snprintf(buf, sizeof buf, "%-8s %-22s %s %s %12s\n",
                  el["state"].get<std::string>().c_str(),
                  el["kind"].get<std::string>().c_str(),
                  qedlamb::report_detail::fixed(el["quadrature_mc2"].get<double>())
                      .c_str(),
                  closed.c_str(), disc.c_str());
    out += buf;
  }
  return out;
}

std::string render_lamb(const ordered_json& doc, ReportFormat format,
                        EvalMode mode) {
  const char* selected =
      mode == EvalMode::closed_form ? "closed" : "exact";
  if (format == ReportFormat::json) {
    ordered_json payload = doc["lamb"];
    payload["selected"] = selected;
    return json_section(doc["config"], "lamb", payload);
  }
  const auto& lamb = doc["lamb"];
  if (format == ReportFormat::csv) {
    std::string out = "label,field,value\n";
    auto row = [&out](const std::string& label, const std::string& field,
                      double v) {
      out += label + ',' + field + ',' + csv_num(v) + '\n';
    };
    row("", "unit_mhz", lamb["unit_mhz"].get<double>());
    for (const char* block :
         {"exact", "closed", "closed_component_sum", "bracket"}) {
      row(block, "c_l", lamb[block]["c_l"].get<double>());
      row(block, "delta_mhz", lamb[block]["delta_mhz"].get<double>());
    }
    row("", "d_printed", lamb["d_printed"].get<double>());
    row("", "d_bracket", lamb["d_bracket"].get<double>());
    for (const auto& v : lamb["cutoff_variants"]) {
      const std::string label = "variant:" + v["cutoff"].get<std::string>();
      row(label, "ln_2m_over_lambda", v["ln_2m_over_lambda"].get<double>());
      row(label, "c_l", v["c_l"].get<double>());
      row(label, "delta_mhz", v["delta_mhz"].get<double>());
    }
    out += std::string{"selected,mode,"} + selected + '\n';
    return out;
  }
  std::string out;
  char buf[200];
  std::snprintf(buf, sizeof buf, "lamb splitting %s - %s (selected mode: %s)\n",
                lamb["pair"][0].get<std::string>().c_str(),
                lamb["pair"][1].get<std::string>().c_str(), selected);
  out += buf;
  std::snprintf(buf, sizeof buf, "  unit [MHz]           = %s\n",
                csv_num(lamb["unit_mhz"].get<double>()).c_str());
  out += buf;
  for (const char* block :
       {"exact", "closed", "closed_component_sum", "bracket"}) {
    std::snprintf(buf, sizeof buf, "  %-20s   C_L = %s  delta = %s MHz\n", block,
                  qedlamb::report_detail::fixed(lamb[block]["c_l"].get<double>())
                      .c_str(),
                  qedlamb::report_detail::fixed(
                      lamb[block]["delta_mhz"].get<double>())
                      .c_str());
    out += buf;
  }
  out += "  cutoff variants (closed form):\n";
  for (const auto& v : lamb["cutoff_variants"]) {
    std::snprintf(
        buf, sizeof buf,
        "    %-10s ln 2m/lambda = %s  C_L = %s  delta = %s MHz\n",
        v["cutoff"].get<std::string>().c_str(),
        qedlamb::report_detail::fixed(v["ln_2m_over_lambda"].get<double>())
            .c_str(),
        qedlamb::report_detail::fixed(v["c_l"].get<double>()).c_str(),
        qedlamb::report_detail::fixed(v["delta_mhz"].get<double>()).c_str());
    out += buf;
  }
  return out;
}

std::string render_calibration(const ordered_json& doc, ReportFormat format) {
  if (format == ReportFormat::json) {
    return json_section(doc["config"], "calibration", doc["calibration"]);
  }
  const auto& cal = doc["calibration"];
  if (format == ReportFormat::csv) {
    std::string out = "field,value\n";
    for (const auto& [key, value] : cal.items()) {
      out += key + ',' + csv_num(value.get<double>()) + '\n';
    }
    return out;
  }
  std::string out = "calibration\n";
  char buf[160];
  for (const auto& [key, value] : cal.items()) {
    std::snprintf(buf, sizeof buf, "  %-26s = %s\n", key.c_str(),
                  csv_num(value.get<double>()).c_str());
    out += buf;
  }
  return out;
}

std::string render_profile(const std::vector<qedlamb::PotentialSample>& samples,
                           ReportFormat format) {
  const char* kind = samples.empty() ? "" : qedlamb::kind_name(samples[0].kind);
  if (format == ReportFormat::json) {
    ordered_json rows = ordered_json::array();
    for (const auto& s : samples) {
      rows.push_back({{"rho", s.rho},
                      {"r_over_compton", s.rho / s.state_scale},
                      {"value_mc2", s.value},
                      {"kind", kind}});
    }
    ordered_json doc;
    doc["schema_version"] = qedlamb::kReportSchemaVersion;
    doc["profile"] = rows;
    return doc.dump(2) + "\n";
  }
  // Fixed CSV columns; the table format shares them with aligned spacing.
  std::string out;
  char buf[200];
  if (format == ReportFormat::csv) {
    out = "rho,r_over_compton,value_mc2,kind\n";
    for (const auto& s : samples) {
      out += csv_num(s.rho) + ',' + csv_num(s.rho / s.state_scale) + ',' +
             csv_num(s.value) + ',' + kind + '\n';
    }
    return out;
  }
  std::snprintf(buf, sizeof buf, "%15s %15s %15s  %s\n", "rho", "r/compton",
                "value [mc^2]", "kind");
  out += buf;
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%s %s %s  %s\n",
                  qedlamb::report_detail::fixed(s.rho).c_str(),
                  qedlamb::report_detail::fixed(s.rho / s.state_scale).c_str(),
                  qedlamb::report_detail::fixed(s.value).c_str(), kind);
    out += buf;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radiative corrections to the Dirac-Coulomb hydrogen spectrum"};
  app.require_subcommand(1);

  double alpha = qedlamb::kDefaultAlpha;
  double mass_factor = 1.0;
  std::string cutoff_text = "two-ln";
  std::string mode_text = "exact";
  std::string format_text = "table";
  std::string out_path;
  std::string config_path;

  auto* opt_alpha = app.add_option("--alpha", alpha, "Fine-structure constant");
  auto* opt_mass =
      app.add_option("--mass-factor", mass_factor, "Reduced-mass ratio in (0, 1]");
  auto* opt_cutoff = app.add_option(
      "--cutoff", cutoff_text, "Infrared cutoff: two-ln, schwinger, explicit:<v>");
  auto* opt_mode =
      app.add_option("--mode", mode_text, "Evaluation mode: exact, paper, closed");
  auto* opt_format =
      app.add_option("--format", format_text, "Output format: json, csv, table");
  app.add_option("--out", out_path, "Write output to this path atomically");
  app.add_option("--config", config_path,
                 "JSON config file (also via QEDLAMB_CONFIG)");

  std::vector<std::string> state_labels;
  auto* sub_spectrum = app.add_subcommand("spectrum", "Dirac-Coulomb levels");
  sub_spectrum->fallthrough();
  sub_spectrum->add_option("--state", state_labels,
                           "State labels such as 2p3/2 (repeatable)");
  auto* sub_elements =
      app.add_subcommand("matrix-elements", "Correction matrix elements");
  sub_elements->fallthrough();
  sub_elements->add_option("--state", state_labels,
                           "State labels such as 2p3/2 (repeatable)");
  auto* sub_lamb = app.add_subcommand("lamb", "2S1/2 - 2P1/2 splitting");
  sub_lamb->fallthrough();

  std::string profile_kind = "photon-polarization";
  std::string profile_state = "1s1/2";
  double rho_min = 1e-3;
  double rho_max = 10.0;
  int points = 50;
  auto* sub_profile =
      app.add_subcommand("potential-profile", "Sample one correction channel");
  sub_profile->fallthrough();
  sub_profile->add_option("--kind", profile_kind,
                          "Correction kind (pp, elec, mag, vac, or full name)");
  sub_profile->add_option("--state", profile_state, "State label such as 1s1/2");
  sub_profile->add_option("--rho-min", rho_min, "Lower rho bound");
  sub_profile->add_option("--rho-max", rho_max, "Upper rho bound");
  sub_profile->add_option("--points", points, "Grid size (log-spaced)");

  double target_mhz = qedlamb::kTargetExperimentMhz;
  auto* sub_calibrate =
      app.add_subcommand("calibrate", "Invert the splitting for the cutoff");
  sub_calibrate->fallthrough();
  sub_calibrate->add_option("--target", target_mhz, "Measured splitting in MHz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv("QEDLAMB_CONFIG")) config_path = env;
    }
    if (!config_path.empty()) {
      const auto fc = load_config(config_path);
      if (fc.has_alpha && opt_alpha->count() == 0) alpha = fc.alpha;
      if (fc.has_mass_factor && opt_mass->count() == 0) {
        mass_factor = fc.mass_factor;
      }
      if (fc.has_cutoff && opt_cutoff->count() == 0) cutoff_text = fc.cutoff;
      if (fc.has_mode && opt_mode->count() == 0) mode_text = fc.mode;
      if (fc.has_format && opt_format->count() == 0) format_text = fc.format;
    }

    PhysicsConfig cfg;
    cfg.alpha = alpha;
    cfg.mass_factor = mass_factor;
    cfg.cutoff = parse_cutoff(cutoff_text);
    qedlamb::validate(cfg);
    const EvalMode mode = parse_mode(mode_text);
    const ReportFormat format = parse_format(format_text);

    std::vector<QuantumNumbers> states;
    if (state_labels.empty()) {
      states = qedlamb::default_report_states();
    } else {
      for (const auto& label : state_labels) {
        states.push_back(parse_state_label(label));
      }
    }

    std::string text;
    if (*sub_profile) {
      qedlamb::ProfileRequest req;
      req.kind = parse_kind(profile_kind);
      req.qn = parse_state_label(profile_state);
      req.rho_min = rho_min;
      req.rho_max = rho_max;
      req.points = points;
      text = render_profile(qedlamb::profile_grid(req, cfg), format);
    } else {
      const auto doc = qedlamb::report_document(cfg, states);
      if (*sub_spectrum) {
        text = render_spectrum(doc, format);
      } else if (*sub_elements) {
        text = render_elements(doc, format);
      } else if (*sub_lamb) {
        text = render_lamb(doc, format, mode);
      } else if (*sub_calibrate) {
        const auto cal = qedlamb::calibrate_cutoff(target_mhz, cfg);
        ordered_json payload = {
            {"target_mhz", target_mhz},
            {"ln_2m_over_lambda", cal.ln_2m_over_lambda},
            {"offset_vs_ln_inv_alpha_sq", cal.offset_vs_ln_inv_alpha_sq}};
        ordered_json patched = doc;
        patched["calibration"] = payload;
        text = render_calibration(patched, format);
      }
    }
    emit(text, out_path);
  } catch (const qedlamb::QuadratureError& e) {
    std::cerr << "qedlamb: quadrature did not converge: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qedlamb: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
