#pragma once

#include <string>
#include <vector>

#include "cext/algebra.hpp"

namespace cext {

struct DiagramLevel {
  long index = 0;
  Rational energy;
};

struct DiagramColumn {
  std::string title;
  std::vector<DiagramLevel> levels;  ///< ascending
};

/// Level-diagram layout: one column per Fock subspace (or per partner
/// Hamiltonian), an energy axis from `bottom` to `ceiling` with ticks every
/// `tick_step`, and dashed marks above each column for the levels cut off.
struct DiagramSpec {
  std::vector<DiagramColumn> columns;
  Rational bottom;
  Rational ceiling;
  Rational tick_step;
  std::vector<Rational> ticks;
  std::string caption;

  /// Vertical SVG coordinate of an energy; affine and strictly decreasing.
  double y_of(const Rational& energy) const;
};

/// Columns F_0 ... F_{lambda-1} of H_0 levels up to the lowest ground energy
/// plus lambda (rows - 1).
DiagramSpec spectrum_diagram(const AlgebraParams& p, int rows = 6);

/// Columns H^(0) ... H^(lambda) of the partner Hamiltonians, levels up to
/// lambda (rows - 1). Throws WindowViolation outside the SUSY window.
DiagramSpec hierarchy_diagram(const AlgebraParams& p, int rows = 4);

std::string render_svg(const DiagramSpec& spec);
/// One text row per distinct energy, highest first.
std::string render_ascii(const DiagramSpec& spec);

}  // namespace cext
