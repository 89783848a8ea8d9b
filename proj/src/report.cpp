#include "cext/report.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "cext/spectrum.hpp"

#ifndef CEXT_VERSION
#define CEXT_VERSION "0.0.0"
#endif

namespace cext {

using nlohmann::json;

namespace {

std::vector<std::string> strings_of(const std::vector<Rational>& values, const Rational& scale = Rational(1)) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back((v * scale).str());
  return out;
}

json susy_to_json(const SusyEntry& s) {
  json residuals = json::array();
  for (const auto& r : s.residuals) {
    residuals.push_back({{"mu", r.mu}, {"relation", r.relation}, {"residual", r.residual}, {"pass", r.pass}});
  }
  return {
      {"truncation", s.truncation},
      {"tolerance", s.tolerance},
      {"omega_scale", s.omega_scale},
      {"omegas", s.omegas},
      {"ground_energies", s.ground_energies},
      {"residuals", residuals},
      {"max_residual", s.max_residual},
      {"interlacing", s.interlacing},
      {"top_shift_exact", s.top_shift_exact},
      {"operator_periodicity", s.operator_periodicity},
      {"projection_identity", s.projection_identity},
      {"pass", s.pass},
  };
}

SusyEntry susy_from_json(const json& j) {
  SusyEntry s;
  j.at("truncation").get_to(s.truncation);
  j.at("tolerance").get_to(s.tolerance);
  j.at("omega_scale").get_to(s.omega_scale);
  j.at("omegas").get_to(s.omegas);
  j.at("ground_energies").get_to(s.ground_energies);
  for (const auto& r : j.at("residuals")) {
    s.residuals.push_back({r.at("mu").get<int>(), r.at("relation").get<std::string>(), r.at("residual").get<double>(),
                           r.at("pass").get<bool>()});
  }
  j.at("max_residual").get_to(s.max_residual);
  j.at("interlacing").get_to(s.interlacing);
  j.at("top_shift_exact").get_to(s.top_shift_exact);
  j.at("operator_periodicity").get_to(s.operator_periodicity);
  j.at("projection_identity").get_to(s.projection_identity);
  j.at("pass").get_to(s.pass);
  return s;
}

}  // namespace

std::string tool_version() { return CEXT_VERSION; }

Report make_report(const AlgebraParams& p, long levels) {
  Report r;
  r.tool_version = tool_version();
  r.lambda = p.lambda();
  r.alphas = strings_of(p.alphas());
  r.levels = levels;

  const auto pattern = degeneracy_pattern(p, levels);
  for (const auto& g : pattern.groups) r.groups.push_back({g.energy.str(), g.members});
  const auto observed = describe(pattern);
  r.descriptor = observed.str();

  if (p.lambda() == 3) {
    const auto t = classify3(p);
    r.spectrum_type = TypeEntry{t.label(), t.family_name(), t.m, t.n, t.window()};
    r.oracle_agrees = expected_prefix(t, levels) == observed;
  }

  const auto period = detect_period(p, std::max<long>(levels, 3L * p.lambda()));
  PeriodEntry entry;
  if (const auto* report = std::get_if<PeriodReport>(&period)) {
    entry.periodic = true;
    entry.omegas = strings_of(report->omegas);
    entry.omega_total = report->omega_total.str();
    entry.ground_order = report->ground_order;
  } else {
    entry.reason = std::get<NotPeriodic>(period).reason;
  }
  r.period = std::move(entry);
  return r;
}

SusyEntry make_susy_entry(const SusyHierarchy& h, double tol, const Rational& omega_scale) {
  const auto sqm = verify_sqm(h, tol);
  SusyEntry s;
  s.truncation = h.truncation;
  s.tolerance = tol;
  s.omega_scale = omega_scale.str();
  s.omegas = strings_of(h.omegas, omega_scale);
  s.ground_energies = strings_of(h.ground_energies, omega_scale);
  s.residuals = sqm.residuals;
  s.max_residual = sqm.max_residual();
  s.interlacing = sqm.interlacing;
  s.top_shift_exact = sqm.top_shift_exact;
  s.operator_periodicity = sqm.operator_periodicity;
  s.projection_identity = projection_shift_identity(h, tol);
  s.pass = sqm.all_pass() && s.projection_identity;
  return s;
}

json to_json(const Report& r) {
  json j = {
      {"schema", r.schema},
      {"tool_version", r.tool_version},
      {"lambda", r.lambda},
      {"alphas", r.alphas},
      {"levels", r.levels},
  };
  if (r.spectrum_type) {
    const auto& t = *r.spectrum_type;
    j["spectrum_type"] = {{"label", t.label}, {"family", t.family}, {"m", t.m}, {"n", t.n}, {"window", t.window}};
  } else {
    j["spectrum_type"] = nullptr;
  }
  json groups = json::array();
  for (const auto& g : r.groups) groups.push_back({{"energy", g.energy}, {"members", g.members}});
  j["degeneracy"] = {{"groups", groups}, {"descriptor", r.descriptor}};
  j["oracle_agrees"] = r.oracle_agrees ? json(*r.oracle_agrees) : json(nullptr);
  if (r.period) {
    const auto& p = *r.period;
    if (p.periodic) {
      j["period"] = {{"periodic", true}, {"omegas", p.omegas}, {"omega_total", p.omega_total},
                     {"ground_order", p.ground_order}};
    } else {
      j["period"] = {{"periodic", false}, {"reason", p.reason}};
    }
  }
  if (r.susy) j["susy"] = susy_to_json(*r.susy);
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  j.at("schema").get_to(r.schema);
  if (r.schema != kReportSchema) throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
  j.at("tool_version").get_to(r.tool_version);
  j.at("lambda").get_to(r.lambda);
  j.at("alphas").get_to(r.alphas);
  j.at("levels").get_to(r.levels);
  if (const auto& t = j.at("spectrum_type"); !t.is_null()) {
    r.spectrum_type = TypeEntry{t.at("label").get<std::string>(), t.at("family").get<std::string>(),
                                t.at("m").get<int>(), t.at("n").get<int>(), t.at("window").get<std::string>()};
  }
  for (const auto& g : j.at("degeneracy").at("groups")) {
    r.groups.push_back({g.at("energy").get<std::string>(), g.at("members").get<std::vector<long>>()});
  }
  j.at("degeneracy").at("descriptor").get_to(r.descriptor);
  if (const auto& a = j.at("oracle_agrees"); !a.is_null()) r.oracle_agrees = a.get<bool>();
  if (j.contains("period")) {
    const auto& p = j.at("period");
    PeriodEntry entry;
    p.at("periodic").get_to(entry.periodic);
    if (entry.periodic) {
      p.at("omegas").get_to(entry.omegas);
      p.at("omega_total").get_to(entry.omega_total);
      p.at("ground_order").get_to(entry.ground_order);
    } else {
      p.at("reason").get_to(entry.reason);
    }
    r.period = std::move(entry);
  }
  if (j.contains("susy")) r.susy = susy_from_json(j.at("susy"));
  return r;
}

}  // namespace cext
