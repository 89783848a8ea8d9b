#include "cext/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cext {

namespace {

void check_count(long count) {
  if (count < 1) throw std::invalid_argument("level count must be >= 1");
}

bool energy_then_index(const Level& a, const Level& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return a.index < b.index;
}

}  // namespace

std::vector<Level> levels(const AlgebraParams& p, long count) {
  check_count(count);
  std::vector<Level> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) {
    out.push_back({n, energy(p, n), static_cast<int>(n % p.lambda())});
  }
  return out;
}

std::vector<Level> lowest_levels(const AlgebraParams& p, long count) {
  check_count(count);
  // Each subspace ladder is increasing, so the M lowest levels lie among the
  // first M rungs of every ladder.
  const long lambda = p.lambda();
  std::vector<Level> pool;
  pool.reserve(static_cast<std::size_t>(count * lambda));
  for (long mu = 0; mu < lambda; ++mu) {
    for (long k = 0; k < count; ++k) {
      const long n = k * lambda + mu;
      pool.push_back({n, energy(p, n), static_cast<int>(mu)});
    }
  }
  std::partial_sort(pool.begin(), pool.begin() + count, pool.end(), energy_then_index);
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

DegeneracyPattern degeneracy_pattern(const AlgebraParams& p, long count) {
  auto sorted = levels(p, count);
  std::stable_sort(sorted.begin(), sorted.end(), energy_then_index);
  DegeneracyPattern pattern;
  pattern.prefix = count;
  for (const auto& level : sorted) {
    if (pattern.groups.empty() || pattern.groups.back().energy != level.energy) {
      pattern.groups.push_back({level.energy, {}});
    }
    pattern.groups.back().members.push_back(level.index);
  }
  return pattern;
}

std::vector<int> PatternDescriptor::multiplicities() const {
  std::vector<int> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(static_cast<int>(g.size()));
  return out;
}

std::vector<long> PatternDescriptor::ordering() const {
  std::vector<long> out;
  for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::vector<int> PatternDescriptor::subspaces(std::size_t g, int lambda) const {
  std::vector<int> out;
  for (long index : groups.at(g)) out.push_back(static_cast<int>(index % lambda));
  return out;
}

std::optional<std::size_t> PatternDescriptor::first_degenerate_position() const {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].size() >= 2) return i + 1;
  }
  return std::nullopt;
}

std::string PatternDescriptor::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out << ' ';
    const auto& g = groups[i];
    if (g.size() == 1) {
      out << g.front();
      continue;
    }
    out << '{';
    for (std::size_t j = 0; j < g.size(); ++j) out << (j ? "," : "") << g[j];
    out << '}';
  }
  return out.str();
}

PatternDescriptor describe(const DegeneracyPattern& pattern) {
  PatternDescriptor d;
  d.groups.reserve(pattern.groups.size());
  for (const auto& g : pattern.groups) d.groups.push_back(g.members);
  return d;
}

PatternDescriptor classify_oracle(const AlgebraParams& p, long count) {
  return describe(degeneracy_pattern(p, count));
}

std::optional<std::vector<Rational>> closed_form_omegas(const AlgebraParams& p) {
  if (p.lambda() != 3) return std::nullopt;
  const Rational& a0 = p.alpha(0);
  const Rational& a1 = p.alpha(1);
  const Rational half(1, 2);
  if (Rational(-1) < a0 && a0 < Rational(2) && -2 - a0 < a1 && a1 < Rational(2)) {
    return std::vector<Rational>{(a0 + a1 + 2) * half, (2 - a0) * half, (2 - a1) * half};
  }
  if (Rational(2) < a0 && a0 < Rational(8) && Rational(-4) < a1 && a1 < 4 - a0) {
    return std::vector<Rational>{(a1 + 4) * half, (a0 - 2) * half, (4 - a0 - a1) * half};
  }
  if (Rational(2) < a0 && a0 < Rational(8) && -2 - a0 < a1 && a1 < Rational(-4)) {
    return std::vector<Rational>{(-a1 - 4) * half, (a0 + a1 + 2) * half, (8 - a0) * half};
  }
  return std::nullopt;
}

PeriodResult detect_period(const AlgebraParams& p, long count) {
  const int lambda = p.lambda();
  if (count < 3L * lambda) throw std::invalid_argument("period detection needs at least 3 lambda levels");
  if (!p.admissible()) throw InadmissibleParams("parameters outside the Fock-space domain");

  const auto low = lowest_levels(p, count);
  std::vector<Rational> spacing;
  spacing.reserve(low.size() - 1);
  for (std::size_t i = 1; i < low.size(); ++i) spacing.push_back(low[i].energy - low[i - 1].energy);

  PeriodResult result;
  const auto tie = std::find_if(spacing.begin(), spacing.end(), [](const Rational& s) { return s.sign() == 0; });
  if (tie != spacing.end()) {
    const auto i = static_cast<std::size_t>(tie - spacing.begin());
    result = NotPeriodic{"levels " + std::to_string(low[i].index) + " and " + std::to_string(low[i + 1].index) +
                         " are degenerate"};
  } else {
    std::optional<std::size_t> broken;
    for (std::size_t i = 0; i + lambda < spacing.size(); ++i) {
      if (spacing[i] != spacing[i + lambda]) {
        broken = i;
        break;
      }
    }
    if (broken) {
      result = NotPeriodic{"spacing " + std::to_string(*broken) + " differs from spacing " +
                           std::to_string(*broken + lambda)};
    } else {
      PeriodReport report;
      report.omegas.assign(spacing.begin(), spacing.begin() + lambda);
      report.omega_total = std::accumulate(report.omegas.begin(), report.omegas.end(), Rational(0));
      std::vector<int> order(static_cast<std::size_t>(lambda));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return energy(p, a) < energy(p, b); });
      report.ground_order = std::move(order);
      result = std::move(report);
    }
  }

  if (lambda == 3) {
    const auto closed = closed_form_omegas(p);
    const auto* report = std::get_if<PeriodReport>(&result);
    if (closed.has_value() != (report != nullptr) || (report && report->omegas != *closed)) {
      throw std::logic_error("period detection disagrees with the closed-form spacings");
    }
  }
  return result;
}

bool susy_window(const AlgebraParams& p) {
  return std::all_of(p.alphas().begin(), p.alphas().end(), [](const Rational& a) { return (a + 1).sign() > 0; });
}

bool susy_window_chain(const AlgebraParams& p) {
  const int lambda = p.lambda();
  const Rational& a0 = p.alpha(0);
  if (!(Rational(-1) < a0 && a0 < Rational(lambda - 1))) return false;
  Rational partial = a0;
  for (int mu = 1; mu <= lambda - 2; ++mu) {
    const Rational& a = p.alpha(mu);
    if (!(Rational(-1) < a && a < Rational(lambda - mu - 1) - partial)) return false;
    partial += a;
  }
  return true;
}

}  // namespace cext
