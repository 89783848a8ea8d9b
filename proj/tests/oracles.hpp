#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's closed forms: structure values come from iterating the
// difference equation, energies from the F midpoint, groups from a quadratic
// scan, and random points from their own samplers.

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cext/algebra.hpp"
#include "cext/spectrum.hpp"

namespace oracle {

using cext::AlgebraParams;
using cext::Family;
using cext::Rational;
using cext::SpectrumType;

/// F(0 ... count-1) from F(0) = 0, F(n+1) = F(n) + 1 + alpha_{n mod lambda}.
inline std::vector<Rational> structure_iterated(const AlgebraParams& p, long count) {
  std::vector<Rational> f{Rational(0)};
  const auto& a = p.alphas();
  for (long n = 0; static_cast<long>(f.size()) < count; ++n) {
    f.push_back(f.back() + Rational(1) + a[static_cast<std::size_t>(n % p.lambda())]);
  }
  f.resize(static_cast<std::size_t>(count));
  return f;
}

/// E_n = (F(n) + F(n+1)) / 2 for n < count.
inline std::vector<Rational> energies_midpoint(const AlgebraParams& p, long count) {
  const auto f = structure_iterated(p, count + 1);
  std::vector<Rational> e;
  for (long n = 0; n < count; ++n) {
    e.push_back((f[static_cast<std::size_t>(n)] + f[static_cast<std::size_t>(n + 1)]) / Rational(2));
  }
  return e;
}

/// Groups of equal energy among 0 ... M-1, lowest first, by repeated minimum search.
inline std::vector<std::vector<long>> brute_groups(const AlgebraParams& p, long count) {
  const auto e = energies_midpoint(p, count);
  std::vector<bool> used(e.size(), false);
  std::vector<std::vector<long>> groups;
  for (;;) {
    long best = -1;
    for (long i = 0; i < count; ++i) {
      if (!used[static_cast<std::size_t>(i)] && (best < 0 || e[static_cast<std::size_t>(i)] < e[static_cast<std::size_t>(best)])) best = i;
    }
    if (best < 0) break;
    std::vector<long> g;
    for (long i = 0; i < count; ++i) {
      if (!used[static_cast<std::size_t>(i)] && e[static_cast<std::size_t>(i)] == e[static_cast<std::size_t>(best)]) {
        g.push_back(i);
        used[static_cast<std::size_t>(i)] = true;
      }
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

inline Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long den) {
  std::uniform_int_distribution<long> u(lo_num, hi_num);
  return Rational(u(rng), den);
}

inline long random_den(std::mt19937_64& rng) {
  static constexpr long kDens[] = {1, 2, 3, 4, 5, 6, 8, 9, 12, 30, 97};
  std::uniform_int_distribution<std::size_t> u(0, std::size(kDens) - 1);
  return kDens[u(rng)];
}

/// Admissible lambda = 3 point with alpha0 in (-1, 30), alpha1 in (-2 - alpha0, 30).
inline AlgebraParams random_admissible3(std::mt19937_64& rng) {
  const long d0 = random_den(rng);
  const long d1 = random_den(rng);
  const Rational a0 = Rational(-1) + random_rational(rng, 1, 31 * d0 - 1, d0);
  const Rational a1 = Rational(-2) - a0 + random_rational(rng, 1, 60 * d1, d1);
  return cext::make_params3(a0, a1);
}

/// Admissible point for any lambda: each F(mu) is kept positive by construction.
inline AlgebraParams random_admissible(std::mt19937_64& rng, int lambda) {
  std::vector<Rational> head;
  Rational f(0);
  for (int mu = 0; mu + 1 < lambda; ++mu) {
    const long d = random_den(rng);
    // alpha_mu = -1 - F(mu) + t keeps F(mu + 1) = t > 0
    const Rational a = Rational(-1) - f + random_rational(rng, 1, 8 * d, d);
    head.push_back(a);
    f += Rational(1) + a;
  }
  return AlgebraParams::create(lambda, head);
}

/// Point with every omega_mu = 1 + alpha_mu > 0: random positive weights scaled to sum lambda.
inline AlgebraParams random_susy(std::mt19937_64& rng, int lambda) {
  std::uniform_int_distribution<long> u(1, 40);
  std::vector<long> w;
  long total = 0;
  for (int mu = 0; mu < lambda; ++mu) {
    w.push_back(u(rng));
    total += w.back();
  }
  std::vector<Rational> alphas;
  for (long wi : w) alphas.push_back(Rational(lambda * wi, total) - Rational(1));
  return AlgebraParams::from_alphas(alphas);
}

/// (alpha0, alpha1) from ladder positions x1 = (E_1 - E_0)/3 and x2 = (E_2 - E_0)/3.
inline std::pair<Rational, Rational> from_positions(const Rational& x1, const Rational& x2) {
  const Rational a1 = Rational(6) * x2 - Rational(4);
  return {Rational(6) * x1 - Rational(2) - a1, a1};
}

/// A point strictly inside the window of t, chosen from the level chains.
inline std::pair<Rational, Rational> representative(const SpectrumType& t) {
  const Rational m(t.m);
  const Rational n(t.n);
  auto xy = [](const Rational& x2, const Rational& y) { return from_positions(x2 + y, x2); };
  switch (t.family) {
    case Family::I1: return from_positions(n - Rational(3, 4), n - Rational(1, 2));
    case Family::I2: return from_positions(n - Rational(1, 8), n + Rational(1, 8));
    case Family::Ia: return from_positions(n, n + Rational(1, 4));
    case Family::Ib: return from_positions(n - Rational(1, 4), n);
    case Family::Iabc: return from_positions(n, n);
    case Family::II1: return xy(n - Rational(1, 2), m - Rational(3, 4));
    case Family::II2: return xy(n - Rational(1, 4), m - Rational(1, 2));
    case Family::IIa: return xy(n - Rational(1, 2), m - Rational(1, 2));
    case Family::IIb: return xy(n - Rational(1), m - Rational(1, 2));
    case Family::IIc: return xy(n - Rational(1, 2), m - Rational(1));
    case Family::IIabc: return xy(n - Rational(1), m);
    case Family::III1: return xy(Rational(1, 2) - n, m + n - Rational(5, 4));
    case Family::III2: return xy(Rational(1, 4) - n, m + n - Rational(1, 2));
    case Family::IIIa: return from_positions(m, Rational(1, 2) - n);
    case Family::IIIb: return from_positions(m - Rational(1, 2), -n);
    case Family::IIIc: return xy(Rational(1, 2) - n, m + n - Rational(1));
    case Family::IIIabc: return from_positions(m, -n);
  }
  return {Rational(0), Rational(0)};
}

struct LabelledPoint {
  long alpha0;
  long alpha1;
  const char* label;
};

/// Seventeen (parameters, type) pairs, one or more per family shape.
inline const std::vector<LabelledPoint>& labelled_examples() {
  static const std::vector<LabelledPoint> points = {
      {0, 6, "I.1.2"},       {0, 9, "I.2.2"},        {10, 4, "II.1.2.2"},     {10, 7, "II.2.2.2"},
      {18, -12, "III.1.2.2"}, {21, -15, "III.2.2.2"}, {0, 10, "I.2.a"},        {0, 8, "I.2.b"},
      {10, 6, "II.2.2.a"},   {10, 2, "II.2.2.b"},    {8, 4, "II.2.2.c"},      {24, -14, "III.2.2.a"},
      {24, -16, "III.2.2.b"}, {20, -12, "III.2.2.c"}, {2, 8, "I.2.abc"},       {8, 2, "II.1.2.abc"},
      {14, -10, "III.1.1.abc"},
  };
  return points;
}

/// Position (1-based) of the lowest doubly-degenerate group, as tabulated for
/// the doubly-degenerate families; 0 for families not in the table.
inline long lowest_double_position(const SpectrumType& t) {
  const long m = t.m;
  const long n = t.n;
  switch (t.family) {
    case Family::Ia: return n + 1;
    case Family::Ib: return n + 2;
    case Family::IIa: return 2 * m + n;
    case Family::IIb: return n;
    case Family::IIc: return 2 * m + n - 1;
    case Family::IIIa: return 2 * m + n + 1;
    case Family::IIIb: return n + 1;
    case Family::IIIc: return 2 * m + n;
    default: return 0;
  }
}

inline bool is_doubly_degenerate_family(Family f) {
  switch (f) {
    case Family::Ia:
    case Family::Ib:
    case Family::IIa:
    case Family::IIb:
    case Family::IIc:
    case Family::IIIa:
    case Family::IIIb:
    case Family::IIIc:
      return true;
    default:
      return false;
  }
}

/// Boundary lines of the windows with m, n <= bound, sampled at rational
/// points of the Fock domain. Vertical lines alpha0 = c, and lines
/// alpha1 = c - s alpha0 with s in {0, 1}.
inline std::vector<std::pair<Rational, Rational>> boundary_samples(int bound) {
  std::vector<long> verticals{2};
  std::vector<long> flats;
  std::vector<long> diagonals;
  for (long m = 1; m <= bound; ++m) {
    verticals.push_back(6 * m - 4);
    verticals.push_back(6 * m + 2);
    for (long n = 1; n <= bound; ++n) {
      verticals.push_back(6 * m + 6 * n - 10);
      verticals.push_back(6 * m + 6 * n - 4);
      verticals.push_back(6 * m + 6 * n + 2);
      diagonals.push_back(6 * m + 6 * n - 8);
    }
    diagonals.push_back(6 * m - 2);
    diagonals.push_back(6 * m - 8);
  }
  for (long n = 1; n <= bound; ++n) {
    flats.push_back(6 * n - 4);
    flats.push_back(6 * n - 10);
    flats.push_back(-4 - 6 * n);
    flats.push_back(2 - 6 * n);
    diagonals.push_back(6 * n - 2);
    diagonals.push_back(6 * n - 8);
  }
  auto dedupe = [](std::vector<long>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(verticals);
  dedupe(flats);
  dedupe(diagonals);

  std::vector<std::pair<Rational, Rational>> points;
  auto push_if_admissible = [&](const Rational& a0, const Rational& a1) {
    if (Rational(-1) < a0 && Rational(-2) - a0 < a1) points.emplace_back(a0, a1);
  };
  for (long c : verticals) {
    const Rational a0(c);
    for (long k = 1; k <= 6 * (12 * bound + 4); ++k) push_if_admissible(a0, Rational(-2 - c) + Rational(k, 6));
  }
  for (long k = 1; k <= 6 * (12 * bound + 4); ++k) {
    for (const Rational& a0 : {Rational(-1) + Rational(k, 6), Rational(-1) + Rational(k, 6) - Rational(1, 14)}) {
      for (long c : flats) push_if_admissible(a0, Rational(c));
      for (long c : diagonals) push_if_admissible(a0, Rational(c) - a0);
    }
  }
  return points;
}

}  // namespace oracle
