#ifndef QEDLAMB_REPORT_HPP
#define QEDLAMB_REPORT_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "qedlamb/lamb.hpp"

namespace qedlamb {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { json, csv, table };

inline const char* cutoff_name(IRCutoffKind kind) {
  switch (kind) {
    case IRCutoffKind::two_ln_inv_alpha: return "two-ln";
    case IRCutoffKind::schwinger_shift: return "schwinger";
    case IRCutoffKind::explicit_value: return "explicit";
  }
  return "unknown";
}

inline const std::vector<QuantumNumbers>& default_report_states() {
  static const std::vector<QuantumNumbers> states = {
      {1, 1, 1, +1}, {2, 1, 1, +1}, {2, 1, 1, -1}, {2, 3, 1, +1}};
  return states;
}

// Log-spaced grid request for one correction channel.
struct ProfileRequest {
  CorrectionKind kind = CorrectionKind::photon_polarization;
  QuantumNumbers qn{};
  double rho_min = 1e-3;
  double rho_max = 10.0;
  int points = 50;
};

struct ReportOptions {
  std::vector<ProfileRequest> profiles;
};

inline std::vector<PotentialSample> profile_grid(const ProfileRequest& req,
                                                 const PhysicsConfig& cfg) {
  validate(req.qn);
  if (!(req.rho_min > 0.0) || !(req.rho_max > req.rho_min) || req.points < 2) {
    throw std::invalid_argument(
        "profile_grid: requires 0 < rho_min < rho_max and points >= 2");
  }
  std::vector<PotentialSample> out;
  out.reserve(static_cast<std::size_t>(req.points));
  const double ratio = req.rho_max / req.rho_min;
  for (int i = 0; i < req.points; ++i) {
    const double t = static_cast<double>(i) / (req.points - 1);
    const double rho = req.rho_min * std::pow(ratio, t);
    out.push_back(potential_sample(req.kind, rho, req.qn, cfg));
  }
  return out;
}

namespace report_detail {

// Round-trip decimal form, shared by the CSV writer.
inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%15.8e", v);
  return buf;
}

}  // namespace report_detail

// Assembles the full report as one ordered JSON document.  The lamb section
// always carries the canonical 2S1/2 - 2P1/2 pair under all three cutoff
// conventions, independent of the requested state list.
inline nlohmann::ordered_json report_document(const PhysicsConfig& cfg,
                                              const std::vector<QuantumNumbers>& states,
                                              const ReportOptions& options = {}) {
  validate(cfg);
  if (states.empty()) {
    throw std::invalid_argument("report_document: states must be nonempty");
  }
  using json = nlohmann::ordered_json;
  const double lcut = cfg.cutoff.ln_2m_over_lambda(cfg.alpha);

  json doc;
  doc["schema_version"] = kReportSchemaVersion;

  json config;
  config["alpha"] = cfg.alpha;
  config["mass_factor"] = cfg.mass_factor;
  config["rest_energy_ev"] = cfg.rest_energy;
  config["cutoff"] = {{"kind", cutoff_name(cfg.cutoff.kind)},
                      {"ln_2m_over_lambda", lcut}};
  doc["config"] = config;

  json spectrum = json::array();
  for (const auto& qn : states) {
    const auto lv = level(qn, cfg);
    spectrum.push_back({{"state", qn.label()},
                        {"n", qn.n},
                        {"two_j", qn.two_j},
                        {"sigma", qn.sigma},
                        {"eps", lv.eps},
                        {"energy_ev", lv.energy}});
  }
  doc["spectrum"] = spectrum;

  json elements = json::array();
  for (const auto& qn : states) {
    for (const auto kind : correction_kinds()) {
      json row;
      row["state"] = qn.label();
      row["kind"] = kind_name(kind);
      try {
        const auto cmp = compare_diagonal(qn, kind, cfg);
        row["quadrature_mc2"] = cmp.value_quadrature;
        row["closed_form_mc2"] = cmp.value_closed_form;
        row["rel_discrepancy"] = cmp.rel_discrepancy;
      } catch (const UnsupportedStateError&) {
        row["quadrature_mc2"] = diagonal_element(qn, kind, cfg);
        row["closed_form_mc2"] = nullptr;
        row["rel_discrepancy"] = nullptr;
      }
      elements.push_back(row);
    }
  }
  doc["matrix_elements"] = elements;

  json shifts = json::array();
  for (const auto& qn : states) {
    const auto ls = level_shift(qn, cfg);
    const auto& br = ls.breakdown;
    json quad;
    for (std::size_t k = 0; k < correction_kinds().size(); ++k) {
      quad[kind_name(correction_kinds()[k])] = br.quadrature[k];
    }
    quad["total"] = br.total_quadrature;
    quad["frequency_mhz"] = energy_to_frequency(br.total_quadrature, cfg);
    json closed;
    if (br.closed_available) {
      for (std::size_t k = 0; k < correction_kinds().size(); ++k) {
        closed[kind_name(correction_kinds()[k])] = br.closed_form[k];
      }
      closed["total"] = br.total_closed_form;
      closed["frequency_mhz"] = energy_to_frequency(br.total_closed_form, cfg);
    }
    shifts.push_back({{"state", qn.label()},
                      {"quadrature", quad},
                      {"closed_form", br.closed_available ? closed : json()}});
  }
  doc["level_shifts"] = shifts;

  const QuantumNumbers two_s{2, 1, 1, +1};
  const QuantumNumbers two_p12{2, 1, 1, -1};
  const double unit = lamb_unit_energy(cfg.alpha);
  const double unit_mhz = lamb_unit_mhz(cfg);
  json lamb;
  lamb["pair"] = {two_s.label(), two_p12.label()};
  lamb["unit_mhz"] = unit_mhz;
  {
    const auto sp = lamb_split(two_s, two_p12, cfg, EvalMode::exact_quadrature);
    lamb["exact"] = {{"c_l", sp.c_l}, {"delta_mhz", sp.delta_mhz}};
  }
  {
    const auto sp = lamb_split(two_s, two_p12, cfg, EvalMode::closed_form);
    lamb["closed"] = {{"c_l", sp.c_l}, {"delta_mhz", sp.delta_mhz}};
  }
  {
    const double delta = level_shift(two_s, cfg).breakdown.total_closed_form -
                         level_shift(two_p12, cfg).breakdown.total_closed_form;
    lamb["closed_component_sum"] = {
        {"c_l", delta / unit}, {"delta_mhz", energy_to_frequency(delta, cfg)}};
  }
  {
    const double cl = lamb_cl_bracket(cfg);
    lamb["bracket"] = {{"c_l", cl},
                       {"delta_mhz", energy_to_frequency(unit * cl, cfg)}};
  }
  lamb["d_printed"] = kLambAssemblyConstant;
  lamb["d_bracket"] = lamb_cl_bracket(cfg) - lcut;
  json variants = json::array();
  const std::array<IRCutoff, 3> cuts = {IRCutoff::two_ln(), IRCutoff::schwinger(),
                                        IRCutoff::explicit_cut(lcut)};
  for (const auto& cut : cuts) {
    PhysicsConfig vcfg = cfg;
    vcfg.cutoff = cut;
    const double cl = lamb_cl_closed(vcfg);
    variants.push_back({{"cutoff", cutoff_name(cut.kind)},
                        {"ln_2m_over_lambda", cut.ln_2m_over_lambda(cfg.alpha)},
                        {"c_l", cl},
                        {"delta_mhz", energy_to_frequency(unit * cl, vcfg)}});
  }
  lamb["cutoff_variants"] = variants;
  doc["lamb"] = lamb;

  const auto cal = calibrate_cutoff(kTargetExperimentMhz, cfg);
  doc["calibration"] = {
      {"target_mhz", kTargetExperimentMhz},
      {"ln_2m_over_lambda", cal.ln_2m_over_lambda},
      {"offset_vs_ln_inv_alpha_sq", cal.offset_vs_ln_inv_alpha_sq}};

  if (!options.profiles.empty()) {
    json profiles = json::array();
    for (const auto& req : options.profiles) {
      const auto samples = profile_grid(req, cfg);
      json rows = json::array();
      for (const auto& s : samples) {
        rows.push_back({{"rho", s.rho},
                        {"r_over_compton", s.rho / s.state_scale},
                        {"value_mc2", s.value}});
      }
      profiles.push_back({{"kind", kind_name(req.kind)},
                          {"state", req.qn.label()},
                          {"samples", rows}});
    }
    doc["profiles"] = profiles;
  }
  return doc;
}

namespace report_detail {

// Tidy long-format CSV: one (section, label, field, value) row per scalar.
inline std::string render_csv(const nlohmann::ordered_json& doc) {
  std::string out = "section,label,field,value\n";
  auto row = [&out](const std::string& section, const std::string& label,
                    const std::string& field, const nlohmann::ordered_json& v) {
    out += section;
    out += ',';
    out += label;
    out += ',';
    out += field;
    out += ',';
    if (v.is_null()) {
      out += "nan";
    } else if (v.is_number_float()) {
      out += num(v.get<double>());
    } else if (v.is_number_integer()) {
      out += std::to_string(v.get<long long>());
    } else {
      out += v.get<std::string>();
    }
    out += '\n';
  };
  row("report", "", "schema_version", doc["schema_version"]);
  for (const auto& [key, value] : doc["config"].items()) {
    if (key == "cutoff") {
      row("config", "", "cutoff_kind", value["kind"]);
      row("config", "", "ln_2m_over_lambda", value["ln_2m_over_lambda"]);
    } else {
      row("config", "", key, value);
    }
  }
  for (const auto& st : doc["spectrum"]) {
    const std::string label = st["state"].get<std::string>();
    for (const char* f : {"n", "two_j", "sigma", "eps", "energy_ev"}) {
      row("spectrum", label, f, st[f]);
    }
  }
  for (const auto& el : doc["matrix_elements"]) {
    const std::string label = el["state"].get<std::string>() + ":" +
                              el["kind"].get<std::string>();
    for (const char* f : {"quadrature_mc2", "closed_form_mc2", "rel_discrepancy"}) {
      row("matrix_elements", label, f, el[f]);
    }
  }
  for (const auto& ls : doc["level_shifts"]) {
    const std::string label = ls["state"].get<std::string>();
    for (const auto& [field, value] : ls["quadrature"].items()) {
      row("level_shifts", label, "quadrature:" + field, value);
    }
    if (!ls["closed_form"].is_null()) {
      for (const auto& [field, value] : ls["closed_form"].items()) {
        row("level_shifts", label, "closed:" + field, value);
      }
    }
  }
  const auto& lamb = doc["lamb"];
  row("lamb", "", "unit_mhz", lamb["unit_mhz"]);
  for (const char* block : {"exact", "closed", "closed_component_sum", "bracket"}) {
    row("lamb", block, "c_l", lamb[block]["c_l"]);
    row("lamb", block, "delta_mhz", lamb[block]["delta_mhz"]);
  }
  row("lamb", "", "d_printed", lamb["d_printed"]);
  row("lamb", "", "d_bracket", lamb["d_bracket"]);
  for (const auto& v : lamb["cutoff_variants"]) {
    const std::string label = "variant:" + v["cutoff"].get<std::string>();
    for (const char* f : {"ln_2m_over_lambda", "c_l", "delta_mhz"}) {
      row("lamb", label, f, v[f]);
    }
  }
  for (const auto& [field, value] : doc["calibration"].items()) {
    row("calibration", "", field, value);
  }
  if (doc.contains("profiles")) {
    for (const auto& p : doc["profiles"]) {
      const std::string label = p["kind"].get<std::string>() + ":" +
                                p["state"].get<std::string>();
      int i = 0;
      for (const auto& s : p["samples"]) {
        const std::string idx = std::to_string(i++);
        row("profiles", label, idx + ":rho", s["rho"]);
        row("profiles", label, idx + ":r_over_compton", s["r_over_compton"]);
        row("profiles", label, idx + ":value_mc2", s["value_mc2"]);
      }
    }
  }
  return out;
}

inline std::string render_table(const nlohmann::ordered_json& doc) {
  std::string out;
  char buf[256];
  auto put = [&out](const char* s) {
    out += s;
    out += '\n';
  };
  auto line = [&out, &buf](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
    out += '\n';
  };
  auto fval = [](const nlohmann::ordered_json& v) {
    return v.is_null() ? std::string{"            n/a"} : fixed(v.get<double>());
  };
  line("qedlamb report (schema %d)", doc["schema_version"].get<int>());
  out += '\n';
  const auto& cfgj = doc["config"];
  put("config");
  line("  alpha            = %s", num(cfgj["alpha"].get<double>()).c_str());
  line("  mass_factor      = %s", num(cfgj["mass_factor"].get<double>()).c_str());
  line("  rest_energy [eV] = %s", num(cfgj["rest_energy_ev"].get<double>()).c_str());
  line("  cutoff           = %s (ln 2m/lambda = %s)",
       cfgj["cutoff"]["kind"].get<std::string>().c_str(),
       num(cfgj["cutoff"]["ln_2m_over_lambda"].get<double>()).c_str());
  out += '\n';
  put("spectrum");
  line("  %-8s %-22s %-18s", "state", "eps", "energy [eV]");
  for (const auto& st : doc["spectrum"]) {
    line("  %-8s %.16e %.10e", st["state"].get<std::string>().c_str(),
         st["eps"].get<double>(), st["energy_ev"].get<double>());
  }
  out += '\n';
  put("matrix elements [mc^2]");
  line("  %-8s %-22s %15s %15s %12s", "state", "kind", "quadrature",
       "closed form", "rel disc");
  for (const auto& el : doc["matrix_elements"]) {
    const auto rd = el["rel_discrepancy"];
    line("  %-8s %-22s %s %s %12s", el["state"].get<std::string>().c_str(),
         el["kind"].get<std::string>().c_str(),
         fval(el["quadrature_mc2"]).c_str(), fval(el["closed_form_mc2"]).c_str(),
         rd.is_null() ? "n/a" : num(rd.get<double>()).substr(0, 12).c_str());
  }
  out += '\n';
  put("level shifts [mc^2; frequency in MHz]");
  for (const auto& ls : doc["level_shifts"]) {
    const auto& q = ls["quadrature"];
    line("  %-8s quadrature  total = %s  freq = %s",
         ls["state"].get<std::string>().c_str(), fval(q["total"]).c_str(),
         fval(q["frequency_mhz"]).c_str());
    const auto& c = ls["closed_form"];
    if (!c.is_null()) {
      line("  %-8s closed      total = %s  freq = %s", "",
           fval(c["total"]).c_str(), fval(c["frequency_mhz"]).c_str());
    }
  }
  out += '\n';
  const auto& lamb = doc["lamb"];
  line("lamb splitting %s - %s", lamb["pair"][0].get<std::string>().c_str(),
       lamb["pair"][1].get<std::string>().c_str());
  line("  unit [MHz]           = %s", num(lamb["unit_mhz"].get<double>()).c_str());
  for (const char* block : {"exact", "closed", "closed_component_sum", "bracket"}) {
    line("  %-20s   C_L = %s  delta = %s MHz", block,
         fval(lamb[block]["c_l"]).c_str(), fval(lamb[block]["delta_mhz"]).c_str());
  }
  line("  D printed = %s, from bracket = %s",
       num(lamb["d_printed"].get<double>()).c_str(),
       num(lamb["d_bracket"].get<double>()).c_str());
  put("  cutoff variants (closed form):");
  for (const auto& v : lamb["cutoff_variants"]) {
    line("    %-10s ln 2m/lambda = %s  C_L = %s  delta = %s MHz",
         v["cutoff"].get<std::string>().c_str(),
         fval(v["ln_2m_over_lambda"]).c_str(), fval(v["c_l"]).c_str(),
         fval(v["delta_mhz"]).c_str());
  }
  out += '\n';
  const auto& cal = doc["calibration"];
  put("calibration");
  line("  target [MHz]              = %s", num(cal["target_mhz"].get<double>()).c_str());
  line("  ln 2m/lambda              = %s",
       num(cal["ln_2m_over_lambda"].get<double>()).c_str());
  line("  offset vs ln(1/alpha^2)   = %s",
       num(cal["offset_vs_ln_inv_alpha_sq"].get<double>()).c_str());
  if (doc.contains("profiles")) {
    out += '\n';
    put("profiles");
    for (const auto& p : doc["profiles"]) {
      line("  %s, state %s (%zu samples)", p["kind"].get<std::string>().c_str(),
           p["state"].get<std::string>().c_str(), p["samples"].size());
      line("    %15s %15s %15s", "rho", "r/compton", "value [mc^2]");
      for (const auto& s : p["samples"]) {
        line("    %s %s %s", fval(s["rho"]).c_str(),
             fval(s["r_over_compton"]).c_str(), fval(s["value_mc2"]).c_str());
      }
    }
  }
  return out;
}

}  // namespace report_detail

inline std::string render_report(const PhysicsConfig& cfg,
                                 const std::vector<QuantumNumbers>& states,
                                 ReportFormat format,
                                 const ReportOptions& options = {}) {
  const auto doc = report_document(cfg, states, options);
  switch (format) {
    case ReportFormat::json: return doc.dump(2) + "\n";
    case ReportFormat::csv: return report_detail::render_csv(doc);
    case ReportFormat::table: return report_detail::render_table(doc);
  }
  throw std::logic_error("render_report: unknown format");
}

// Writes the rendered report atomically: the content lands in path + ".tmp"
// first and is renamed onto path, so a partial file is never left behind.
inline void run_report(const PhysicsConfig& cfg,
                       const std::vector<QuantumNumbers>& states,
                       const std::string& path, ReportFormat format,
                       const ReportOptions& options = {}) {
  const std::string text = render_report(cfg, states, format, options);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("run_report: cannot open " + tmp);
    }
    out << text;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw std::runtime_error("run_report: write failed for " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("run_report: cannot rename " + tmp + " onto " + path);
  }
}

}  // namespace qedlamb

#endif  // QEDLAMB_REPORT_HPP
