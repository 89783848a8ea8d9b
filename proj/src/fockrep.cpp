#include "cext/fockrep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace cext {

namespace {

using cplx = std::complex<double>;

cplx root_of_unity(long n, int lambda) {
  const double phase = 2.0 * std::numbers::pi * static_cast<double>(n % lambda) / lambda;
  return std::polar(1.0, phase);
}

}  // namespace

OperatorSet build_operators(const AlgebraParams& p, int truncation) {
  // K < 2 leaves no interior window at all.
  if (truncation < 2) throw std::invalid_argument("truncation must be at least 2");
  const int lambda = p.lambda();

  OperatorSet ops;
  ops.lambda = lambda;
  ops.truncation = truncation;
  ops.interior_window = truncation - 2;

  ops.creation = Matrix::Zero(truncation, truncation);
  for (int n = 0; n + 1 < truncation; ++n) {
    const Rational f = structure_function(p, n + 1);
    if (f.sign() < 0) throw NegativeStructureValue(n + 1, f);
    ops.creation(n + 1, n) = std::sqrt(f.to_double());
  }
  ops.annihilation = ops.creation.adjoint();

  ops.number = diagonal_of(truncation, [](int n) { return cplx(n, 0.0); });
  ops.twist = diagonal_of(truncation, [lambda](int n) { return root_of_unity(n, lambda); });
  ops.projectors.reserve(static_cast<std::size_t>(lambda));
  for (int mu = 0; mu < lambda; ++mu) {
    ops.projectors.push_back(diagonal_of(truncation, [=](int n) { return cplx(n % lambda == mu ? 1.0 : 0.0); }));
  }

  ops.hamiltonian = 0.5 * (ops.annihilation * ops.creation + ops.creation * ops.annihilation);
  return ops;
}

Rational normalization_constant(const AlgebraParams& p, long n) {
  if (n < 0) throw std::invalid_argument("normalization constant needs n >= 0");
  Rational product(1);
  for (long i = 1; i <= n; ++i) product *= structure_function(p, i);
  return product;
}

double normalization_constant_gamma(const AlgebraParams& p, long n) {
  if (p.lambda() != 3) throw UnsupportedLambda(p.lambda(), "gamma-function normalization is the C_3 closed form");
  if (n < 0) throw std::invalid_argument("normalization constant needs n >= 0");

  const long double b1 = (p.beta(1).to_double() + 1.0L) / 3.0L;
  const long double b2 = (p.beta(2).to_double() + 2.0L) / 3.0L;
  if (b1 <= 0 || b2 <= 0) throw InadmissibleParams("gamma closed form needs F(1), F(2) > 0");

  const long k = n / 3;
  const long r = n % 3;
  const long double kk = static_cast<long double>(k);
  const long double shift1 = r >= 1 ? 1.0L : 0.0L;
  const long double shift2 = r >= 2 ? 1.0L : 0.0L;

  const long double log_value = static_cast<long double>(n) * std::log(3.0L) + std::lgamma(kk + 1.0L) +
                                std::lgamma(kk + shift1 + b1) - std::lgamma(b1) + std::lgamma(kk + shift2 + b2) -
                                std::lgamma(b2);
  return static_cast<double>(std::exp(log_value));
}

bool RelationReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.pass; });
}

double RelationReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : relations) worst = std::max(worst, r.residual);
  return worst;
}

double RelationReport::residual(std::string_view name) const {
  for (const auto& r : relations) {
    if (r.name == name) return r.residual;
  }
  throw std::out_of_range("no relation named " + std::string(name));
}

double window_residual(const Matrix& lhs, const Matrix& rhs, int window) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw std::invalid_argument("window_residual: shape mismatch");
  }
  const int size = std::min<int>(window + 1, static_cast<int>(lhs.rows()));
  if (size <= 0) return 0.0;
  return (lhs.topLeftCorner(size, size) - rhs.topLeftCorner(size, size)).cwiseAbs().maxCoeff();
}

RelationReport verify_relations(const OperatorSet& ops, const AlgebraParams& p, double tol) {
  const int k = ops.truncation;
  const int w = ops.interior_window;
  const int lambda = ops.lambda;
  const Matrix identity = Matrix::Identity(k, k);
  const Matrix& n = ops.number;
  const Matrix& a = ops.annihilation;
  const Matrix& ad = ops.creation;
  const Matrix& t = ops.twist;

  RelationReport report;
  report.tolerance = tol;
  auto record = [&](std::string name, double residual) {
    report.relations.push_back({std::move(name), residual, residual < tol});
  };

  record("commutator_N_adag", window_residual(n * ad - ad * n, ad, w));

  Matrix g = identity;
  for (int mu = 0; mu < lambda; ++mu) g += p.alpha(mu).to_double() * ops.projectors[static_cast<std::size_t>(mu)];
  record("commutator_a_adag", window_residual(a * ad - ad * a, g, w));

  const cplx braid = std::polar(1.0, -2.0 * std::numbers::pi / lambda);
  record("adag_T_braiding", window_residual(ad * t, braid * (t * ad), w));

  Matrix t_power = identity;
  for (int i = 0; i < lambda; ++i) t_power = t_power * t;
  record("T_power_lambda", window_residual(t_power, identity, w));

  const Matrix f_n = diagonal_of(k, [&](int i) { return cplx(structure_function(p, i).to_double()); });
  const Matrix f_n1 = diagonal_of(k, [&](int i) { return cplx(structure_function(p, i + 1).to_double()); });
  record("adag_a_equals_F(N)", window_residual(ad * a, f_n, w));
  record("a_adag_equals_F(N+1)", window_residual(a * ad, f_n1, w));

  double orthogonality = 0.0;
  Matrix sum = Matrix::Zero(k, k);
  for (int mu = 0; mu < lambda; ++mu) {
    const auto& pm = ops.projectors[static_cast<std::size_t>(mu)];
    sum += pm;
    for (int nu = 0; nu < lambda; ++nu) {
      const auto& pn = ops.projectors[static_cast<std::size_t>(nu)];
      const Matrix expected = mu == nu ? pm : Matrix::Zero(k, k);
      orthogonality = std::max(orthogonality, window_residual(pm * pn, expected, w));
    }
  }
  record("projector_orthogonality", orthogonality);
  record("projector_completeness", window_residual(sum, identity, w));
  record("T_unitarity", window_residual(t.adjoint() * t, identity, w));
  return report;
}

}  // namespace cext
