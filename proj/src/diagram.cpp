#include "cext/diagram.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cext/spectrum.hpp"
#include "cext/susy.hpp"

namespace cext {

namespace {

constexpr double kTop = 40.0;
constexpr double kPlotHeight = 420.0;
constexpr double kAxisX = 70.0;
constexpr double kColumnWidth = 110.0;

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string alpha_list(const AlgebraParams& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.alphas().size(); ++i) s += (i ? ", " : "") + p.alphas()[i].str();
  return s + ")";
}

void fill_ticks(DiagramSpec& spec, int rows) {
  for (int j = 0; j < rows; ++j) spec.ticks.push_back(spec.bottom + Rational(j) * spec.tick_step);
}

}  // namespace

double DiagramSpec::y_of(const Rational& energy) const {
  // Half a tick of headroom above the ceiling holds the continuation marks.
  const Rational span = ceiling - bottom + tick_step / Rational(2);
  const Rational fraction = (energy - bottom) / span;
  return kTop + kPlotHeight * (1.0 - fraction.to_double());
}

DiagramSpec spectrum_diagram(const AlgebraParams& p, int rows) {
  if (rows < 2) throw std::invalid_argument("diagram needs at least 2 rows");
  if (!p.admissible()) throw InadmissibleParams("parameters outside the Fock-space domain");
  const int lambda = p.lambda();

  DiagramSpec spec;
  spec.bottom = energy(p, 0);
  for (int mu = 1; mu < lambda; ++mu) spec.bottom = std::min(spec.bottom, energy(p, mu));
  spec.tick_step = Rational(lambda);
  spec.ceiling = spec.bottom + Rational(rows - 1) * spec.tick_step;
  fill_ticks(spec, rows);
  spec.caption = "H_0 spectrum, alpha = " + alpha_list(p);

  for (int mu = 0; mu < lambda; ++mu) {
    DiagramColumn column{"F_" + std::to_string(mu), {}};
    for (long n = mu;; n += lambda) {
      Rational e = energy(p, n);
      if (e > spec.ceiling) break;
      column.levels.push_back({n, std::move(e)});
    }
    spec.columns.push_back(std::move(column));
  }
  return spec;
}

DiagramSpec hierarchy_diagram(const AlgebraParams& p, int rows) {
  if (rows < 2) throw std::invalid_argument("diagram needs at least 2 rows");
  const int lambda = p.lambda();
  const auto h = build_hierarchy(p, std::max(2 * lambda, lambda * (rows + 1) + 1));

  DiagramSpec spec;
  spec.bottom = Rational(0);
  spec.tick_step = Rational(lambda);
  spec.ceiling = Rational(rows - 1) * spec.tick_step;
  fill_ticks(spec, rows);
  spec.caption = "partner Hamiltonians, alpha = " + alpha_list(p);

  for (int mu = 0; mu <= lambda; ++mu) {
    DiagramColumn column{"H^(" + std::to_string(mu) + ")", {}};
    const auto& diag = h.exact_diagonals[static_cast<std::size_t>(mu)];
    for (std::size_t n = 0; n < diag.size() && diag[n] <= spec.ceiling; ++n) {
      column.levels.push_back({static_cast<long>(n), diag[n]});
    }
    spec.columns.push_back(std::move(column));
  }
  return spec;
}

std::string render_svg(const DiagramSpec& spec) {
  const double width = kAxisX + kColumnWidth * static_cast<double>(spec.columns.size()) + 20.0;
  const double height = kTop + kPlotHeight + 60.0;
  const double axis_bottom = kTop + kPlotHeight;

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(3);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>" << xml_escape(spec.caption) << "</title>\n"
      << "<g font-family=\"serif\" font-size=\"12\" stroke=\"black\">\n"
      << "<line x1=\"" << kAxisX - 10 << "\" y1=\"" << kTop << "\" x2=\"" << kAxisX - 10 << "\" y2=\"" << axis_bottom
      << "\"/>\n";
  for (const auto& tick : spec.ticks) {
    const double y = spec.y_of(tick);
    svg << "<line x1=\"" << kAxisX - 14 << "\" y1=\"" << y << "\" x2=\"" << kAxisX - 10 << "\" y2=\"" << y << "\"/>\n"
        << "<text x=\"" << kAxisX - 18 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\" stroke=\"none\">"
        << xml_escape(tick.str()) << "</text>\n";
  }

  const double marks_low = spec.y_of(spec.ceiling) - 6.0;
  for (std::size_t c = 0; c < spec.columns.size(); ++c) {
    const auto& column = spec.columns[c];
    const double x0 = kAxisX + kColumnWidth * static_cast<double>(c);
    const double x1 = x0 + kColumnWidth - 40.0;
    const double mid = (x0 + 10.0 + x1) / 2.0;
    svg << "<g class=\"column\" data-title=\"" << xml_escape(column.title) << "\">\n";
    for (const auto& level : column.levels) {
      const double y = spec.y_of(level.energy);
      svg << "<line class=\"level\" x1=\"" << x0 + 10 << "\" y1=\"" << y << "\" x2=\"" << x1 << "\" y2=\"" << y
          << "\" stroke-width=\"2\" data-energy=\"" << level.energy.str() << "\"/>\n"
          << "<text x=\"" << x1 + 4 << "\" y=\"" << y + 4 << "\" stroke=\"none\">" << level.index << "</text>\n";
    }
    svg << "<line class=\"continuation\" x1=\"" << mid << "\" y1=\"" << kTop + 2 << "\" x2=\"" << mid << "\" y2=\""
        << marks_low << "\" stroke-dasharray=\"4,3\"/>\n"
        << "<text x=\"" << mid << "\" y=\"" << axis_bottom + 24 << "\" text-anchor=\"middle\" stroke=\"none\">"
        << xml_escape(column.title) << "</text>\n"
        << "</g>\n";
  }
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 8 << "\" text-anchor=\"middle\" stroke=\"none\">"
      << xml_escape(spec.caption) << "</text>\n"
      << "</g>\n</svg>\n";
  return svg.str();
}

std::string render_ascii(const DiagramSpec& spec) {
  std::set<Rational, std::greater<>> energies;
  for (const auto& column : spec.columns) {
    for (const auto& level : column.levels) energies.insert(level.energy);
  }
  std::size_t label_width = 0;
  for (const auto& e : energies) label_width = std::max(label_width, e.str().size());
  constexpr int kCell = 12;

  std::ostringstream out;
  auto pad_left = [&](const std::string& s) { out << std::setw(static_cast<int>(label_width)) << s << " |"; };
  out << spec.caption << '\n';
  pad_left("");
  for (std::size_t c = 0; c < spec.columns.size(); ++c) out << std::left << std::setw(kCell) << "    :" << std::right;
  out << '\n';
  for (const auto& e : energies) {
    pad_left(e.str());
    for (const auto& column : spec.columns) {
      const auto it = std::find_if(column.levels.begin(), column.levels.end(),
                                   [&](const DiagramLevel& l) { return l.energy == e; });
      const std::string cell = it == column.levels.end() ? "" : " ------ " + std::to_string(it->index);
      out << std::left << std::setw(kCell) << cell << std::right;
    }
    out << '\n';
  }
  pad_left("");
  for (const auto& column : spec.columns) out << std::left << std::setw(kCell) << ("   " + column.title) << std::right;
  out << '\n';
  return out.str();
}

}  // namespace cext
