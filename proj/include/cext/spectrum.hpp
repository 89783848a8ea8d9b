#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cext/algebra.hpp"

namespace cext {

struct Level {
  long index = 0;
  Rational energy;
  int subspace = 0;  ///< index mod lambda

  friend bool operator==(const Level&, const Level&) = default;
};

/// Levels |0> ... |M-1> in index order.
std::vector<Level> levels(const AlgebraParams& p, long count);

/// The M lowest levels of the infinite spectrum, ascending in energy (ties by index).
std::vector<Level> lowest_levels(const AlgebraParams& p, long count);

struct DegeneracyGroup {
  Rational energy;
  std::vector<long> members;  ///< sorted level indices

  friend bool operator==(const DegeneracyGroup&, const DegeneracyGroup&) = default;
};

/// Exact grouping of the index prefix 0 ... M-1 by energy, ascending.
struct DegeneracyPattern {
  long prefix = 0;
  std::vector<DegeneracyGroup> groups;

  friend bool operator==(const DegeneracyPattern&, const DegeneracyPattern&) = default;
};

DegeneracyPattern degeneracy_pattern(const AlgebraParams& p, long count);

/// Parameter-free shape of a spectrum prefix: the index sets of the energy
/// groups in ascending order. Multiplicities, subspace content and the
/// index-order permutation are all read off the groups.
struct PatternDescriptor {
  std::vector<std::vector<long>> groups;

  std::vector<int> multiplicities() const;
  std::vector<long> ordering() const;
  /// Subspace labels (index mod lambda) of each member of group g.
  std::vector<int> subspaces(std::size_t g, int lambda) const;
  /// 1-based position of the first group with multiplicity >= 2, if any.
  std::optional<std::size_t> first_degenerate_position() const;
  /// e.g. "0 3 {1,2,6} {4,5}"
  std::string str() const;

  friend bool operator==(const PatternDescriptor&, const PatternDescriptor&) = default;
};

PatternDescriptor describe(const DegeneracyPattern& pattern);

/// Named lambda = 3 spectrum types. Class-I families carry only n.
enum class Family {
  I1, I2, II1, II2, III1, III2,
  Ia, Ib, IIa, IIb, IIc, IIIa, IIIb, IIIc,
  Iabc, IIabc, IIIabc,
};

struct SpectrumType {
  Family family = Family::I1;
  int m = 0;  ///< 0 for class-I families
  int n = 1;

  /// "I.1.2", "II.2.2.c", "III.1.1.abc", ...
  std::string label() const;
  static SpectrumType parse(std::string_view label);
  /// Stable family key, e.g. "II1", "IIIabc".
  std::string family_name() const;
  /// The defining parameter window, with m and n substituted.
  std::string window() const;
  /// True for the families whose label has a single index.
  bool class_one() const;

  friend bool operator==(const SpectrumType&, const SpectrumType&) = default;
};

SpectrumType make_type(Family family, int m, int n);
std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

/// Membership of (alpha0, alpha1) in the window printed for the label.
bool in_window(const SpectrumType& t, const Rational& alpha0, const Rational& alpha1);

/// Exact window arithmetic on the rational parameters. Throws UnsupportedLambda
/// for lambda != 3, InadmissibleParams outside the Fock domain, and
/// ClassificationGap if the decided label's window does not contain p.
SpectrumType classify3(const AlgebraParams& p);

/// Ordering and degeneracies the named type prescribes for levels 0 ... M-1,
/// generated from the level chain alone (no energies, no windows).
PatternDescriptor expected_prefix(const SpectrumType& t, long count);

/// Sorts the exact energies of 0 ... M-1 and groups ties. Uses no windows.
PatternDescriptor classify_oracle(const AlgebraParams& p, long count);

struct PeriodReport {
  std::vector<Rational> omegas;  ///< first lambda spacings of the sorted spectrum
  Rational omega_total;          ///< sum of omegas; equals lambda
  std::vector<int> ground_order; ///< subspaces sorted by ground energy

  friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

struct NotPeriodic {
  std::string reason;
};

using PeriodResult = std::variant<PeriodReport, NotPeriodic>;

/// Period-lambda test on the M lowest levels: all distinct and spacings
/// repeat with period lambda from the ground state. For lambda = 3 the
/// result is cross-checked against the closed-form spacings.
PeriodResult detect_period(const AlgebraParams& p, long count);

/// Closed-form spacings for the three periodic lambda = 3 types, selected by
/// their printed windows. Empty outside those windows.
std::optional<std::vector<Rational>> closed_form_omegas(const AlgebraParams& p);

/// 1 + alpha_mu > 0 for every mu.
bool susy_window(const AlgebraParams& p);

/// The same window written as the chain of bounds
/// -1 < alpha_0 < lambda-1, -1 < alpha_mu < lambda-mu-1-sum_{nu<mu} alpha_nu.
bool susy_window_chain(const AlgebraParams& p);

}  // namespace cext
