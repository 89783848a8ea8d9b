#include "cext/susy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cext {

namespace {

using cplx = std::complex<double>;

// Max |lhs - rhs| over rows and columns i of the 2K block layout with
// i mod K < K - 1, i.e. the interior window of both diagonal blocks.
double block_residual(const Matrix& lhs, const Matrix& rhs, int truncation) {
  const auto size = lhs.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < size; ++i) {
    if (i % truncation == truncation - 1) continue;
    for (Eigen::Index j = 0; j < size; ++j) {
      if (j % truncation == truncation - 1) continue;
      worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
    }
  }
  return worst;
}

Matrix block_diag(const Matrix& upper, const Matrix& lower) {
  const auto k = upper.rows();
  Matrix out = Matrix::Zero(2 * k, 2 * k);
  out.topLeftCorner(k, k) = upper;
  out.bottomRightCorner(k, k) = lower;
  return out;
}

Matrix projector_sum(const OperatorSet& ops, const std::vector<Rational>& weights) {
  Matrix out = Matrix::Zero(ops.truncation, ops.truncation);
  for (std::size_t nu = 0; nu < weights.size(); ++nu) out += weights[nu].to_double() * ops.projectors[nu];
  return out;
}

}  // namespace

AlgebraParams cyclic_shift(const AlgebraParams& p, int mu) {
  if (mu < 0) throw std::invalid_argument("cyclic shift needs mu >= 0");
  std::vector<Rational> alphas;
  alphas.reserve(p.alphas().size());
  for (int nu = 0; nu < p.lambda(); ++nu) alphas.push_back(p.alpha(nu + mu));
  return AlgebraParams::from_alphas(std::move(alphas));
}

SusyHierarchy build_hierarchy(const AlgebraParams& p, int truncation) {
  const int lambda = p.lambda();
  if (truncation < 2 * lambda) throw std::invalid_argument("hierarchy truncation must be at least 2 lambda");
  for (int mu = 0; mu < lambda; ++mu) {
    const Rational omega = Rational(1) + p.alpha(mu);
    if (omega.sign() <= 0) throw WindowViolation(mu, omega);
  }

  SusyHierarchy h(p);
  h.truncation = truncation;
  h.interior_window = truncation - 2;
  Rational ground(0);
  h.ground_energies.push_back(ground);
  for (int mu = 0; mu < lambda; ++mu) {
    h.shifted.push_back(cyclic_shift(p, mu));
    h.omegas.push_back(Rational(1) + p.alpha(mu));
    ground += h.omegas.back();
    h.ground_energies.push_back(ground);
    h.shifted_ops.push_back(build_operators(h.shifted.back(), truncation));
  }

  for (int mu = 0; mu <= lambda; ++mu) {
    std::vector<Rational> diag;
    diag.reserve(static_cast<std::size_t>(truncation));
    for (int n = 0; n < truncation; ++n) diag.push_back(structure_function(p, n + mu));
    h.hamiltonians.push_back(diagonal_of(truncation, [&](int n) { return cplx(diag[static_cast<std::size_t>(n)].to_double()); }));
    h.exact_diagonals.push_back(std::move(diag));

    if (mu == 0) {
      const auto& ops = h.shifted_ops.front();
      h.ladder_hamiltonians.push_back(ops.creation * ops.annihilation);
    } else {
      const auto& ops = h.shifted_ops[static_cast<std::size_t>(mu - 1)];
      const double shift = h.ground_energies[static_cast<std::size_t>(mu - 1)].to_double();
      h.ladder_hamiltonians.push_back(ops.annihilation * ops.creation +
                                      shift * Matrix::Identity(truncation, truncation));
    }
  }

  for (int mu = 0; mu < lambda; ++mu) {
    const auto i = static_cast<std::size_t>(mu);
    const auto& ops = h.shifted_ops[i];
    const Matrix shift = h.ground_energies[i].to_double() * Matrix::Identity(truncation, truncation);

    SuperBlocks b;
    b.hamiltonian = block_diag(h.hamiltonians[i] - shift, h.hamiltonians[i + 1] - shift);
    b.charge_dagger = Matrix::Zero(2 * truncation, 2 * truncation);
    b.charge_dagger.topRightCorner(truncation, truncation) = ops.creation;
    b.charge = Matrix::Zero(2 * truncation, 2 * truncation);
    b.charge.bottomLeftCorner(truncation, truncation) = ops.annihilation;
    h.blocks.push_back(std::move(b));
  }
  return h;
}

bool SqmReport::all_pass() const {
  return interlacing && top_shift_exact && operator_periodicity &&
         std::all_of(residuals.begin(), residuals.end(), [](const auto& r) { return r.pass; });
}

double SqmReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : residuals) worst = std::max(worst, r.residual);
  return worst;
}

SqmReport verify_sqm(const SusyHierarchy& h, double tol) {
  const int lambda = h.lambda();
  const int k = h.truncation;
  const int w = h.interior_window;

  SqmReport report;
  report.tolerance = tol;
  auto record = [&](int mu, std::string name, double residual) {
    report.residuals.push_back({mu, std::move(name), residual, residual < tol});
  };

  for (int mu = 0; mu < lambda; ++mu) {
    const auto& b = h.blocks[static_cast<std::size_t>(mu)];
    const Matrix& hm = b.hamiltonian;
    const Matrix& q = b.charge;
    const Matrix& qd = b.charge_dagger;
    const Matrix zero = Matrix::Zero(2 * k, 2 * k);
    record(mu, "Q^2", block_residual(q * q, zero, k));
    record(mu, "Qdag^2", block_residual(qd * qd, zero, k));
    record(mu, "[H,Q]", block_residual(hm * q - q * hm, zero, k));
    record(mu, "[H,Qdag]", block_residual(hm * qd - qd * hm, zero, k));
    record(mu, "{Q,Qdag}=H", block_residual(q * qd + qd * q, hm, k));
  }
  for (int mu = 0; mu <= lambda; ++mu) {
    const auto i = static_cast<std::size_t>(mu);
    record(mu, "ladder_construction", window_residual(h.ladder_hamiltonians[i], h.hamiltonians[i], w));
  }

  const Rational omega_total = h.ground_energies.back();
  const Matrix shifted_bottom = h.hamiltonians.front() + omega_total.to_double() * Matrix::Identity(k, k);
  record(lambda, "H^(lambda)=H^(0)+Omega", window_residual(h.hamiltonians.back(), shifted_bottom, w));

  const auto& top = h.exact_diagonals.back();
  const auto& bottom = h.exact_diagonals.front();
  report.top_shift_exact = omega_total == Rational(lambda);
  for (std::size_t n = 0; n < top.size(); ++n) {
    report.top_shift_exact = report.top_shift_exact && top[n] == bottom[n] + omega_total;
  }

  report.operator_periodicity = cyclic_shift(h.base, lambda) == h.base &&
                                h.shifted.size() == static_cast<std::size_t>(lambda) && h.shifted.front() == h.base;
  report.interlacing = check_interlacing(h, k - lambda);
  return report;
}

bool check_interlacing(const SusyHierarchy& h, int count) {
  const int lambda = h.lambda();
  if (count < 0 || count > h.truncation - lambda) {
    throw std::invalid_argument("interlacing check needs 0 <= M <= K - lambda");
  }
  const Rational omega_total = std::accumulate(h.omegas.begin(), h.omegas.end(), Rational(0));
  auto predicted = [&](long j) {
    Rational value = Rational(j / lambda) * omega_total;
    for (long rho = 0; rho < j % lambda; ++rho) value += h.omegas[static_cast<std::size_t>(rho)];
    return value;
  };

  for (int mu = 0; mu <= lambda; ++mu) {
    auto spectrum = h.exact_diagonals[static_cast<std::size_t>(mu)];
    std::sort(spectrum.begin(), spectrum.end());
    for (int n = 0; n < count; ++n) {
      if (spectrum[static_cast<std::size_t>(n)] != predicted(n + mu)) return false;
    }
  }
  return true;
}

bool projection_shift_identity(const SusyHierarchy& h, double tol) {
  const int lambda = h.lambda();
  const int k = h.truncation;
  const int w = h.interior_window;
  const Matrix identity = Matrix::Identity(k, k);

  for (int mu = 0; mu <= lambda; ++mu) {
    const auto& ops = h.shifted_ops[static_cast<std::size_t>(mu % lambda)];
    const auto& alg = h.shifted[static_cast<std::size_t>(mu % lambda)];
    std::vector<Rational> weights;
    for (const auto& a : alg.alphas()) weights.push_back((Rational(1) + a) / Rational(2));
    const Matrix rhs = ops.hamiltonian - projector_sum(ops, weights) +
                       h.ground_energies[static_cast<std::size_t>(mu)].to_double() * identity;
    if (window_residual(h.hamiltonians[static_cast<std::size_t>(mu)], rhs, w) >= tol) return false;
  }

  if (lambda == 3) {
    const auto& ops = h.shifted_ops.front();
    const auto& p = h.base;
    std::vector<Rational> g0;
    std::vector<Rational> g2;
    for (int nu = 0; nu < 3; ++nu) {
      g0.push_back((Rational(1) + p.alpha(nu)) / Rational(2));
      g2.push_back((Rational(3) + p.alpha(nu + 1) - p.alpha(nu + 2)) / Rational(2));
    }
    const Matrix correction0 = projector_sum(ops, g0);
    const Matrix rewrites[] = {
        ops.hamiltonian - correction0,
        ops.hamiltonian + correction0,
        ops.hamiltonian + projector_sum(ops, g2),
    };
    for (std::size_t mu = 0; mu < 3; ++mu) {
      if (window_residual(h.hamiltonians[mu], rewrites[mu], w) >= tol) return false;
    }
  }
  return true;
}

}  // namespace cext
