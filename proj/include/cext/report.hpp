#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cext/algebra.hpp"
#include "cext/susy.hpp"

namespace cext {

inline constexpr int kReportSchema = 1;

struct GroupEntry {
  std::string energy;
  std::vector<long> members;

  friend bool operator==(const GroupEntry&, const GroupEntry&) = default;
};

struct TypeEntry {
  std::string label;
  std::string family;
  int m = 0;
  int n = 0;
  std::string window;

  friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
};

struct PeriodEntry {
  bool periodic = false;
  std::vector<std::string> omegas;
  std::string omega_total;
  std::vector<int> ground_order;
  std::string reason;  ///< set when not periodic

  friend bool operator==(const PeriodEntry&, const PeriodEntry&) = default;
};

struct SusyEntry {
  int truncation = 0;
  double tolerance = 0.0;
  std::string omega_scale = "1";
  std::vector<std::string> omegas;
  std::vector<std::string> ground_energies;
  std::vector<SqmResidual> residuals;
  double max_residual = 0.0;
  bool interlacing = false;
  bool top_shift_exact = false;
  bool operator_periodicity = false;
  bool projection_identity = false;
  bool pass = false;

  friend bool operator==(const SusyEntry&, const SusyEntry&) = default;
};

struct Report {
  int schema = kReportSchema;
  std::string tool_version;
  int lambda = 0;
  std::vector<std::string> alphas;  ///< exact, "p/q"
  std::optional<TypeEntry> spectrum_type;
  long levels = 0;
  std::vector<GroupEntry> groups;
  std::string descriptor;
  std::optional<bool> oracle_agrees;
  std::optional<PeriodEntry> period;
  std::optional<SusyEntry> susy;

  friend bool operator==(const Report&, const Report&) = default;
};

std::string tool_version();

/// Label, degeneracy prefix, oracle cross-check and period test of p.
Report make_report(const AlgebraParams& p, long levels);

/// Residual summary of the SUSY hierarchy; omegas and ground energies are
/// multiplied by omega_scale.
SusyEntry make_susy_entry(const SusyHierarchy& h, double tol, const Rational& omega_scale);

nlohmann::json to_json(const Report& r);
/// Throws nlohmann::json::exception on malformed input and
/// std::invalid_argument on an unknown schema version.
Report report_from_json(const nlohmann::json& j);

}  // namespace cext
