#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cext/algebra.hpp"

namespace cext {

using Matrix = Eigen::MatrixXcd;

/// Truncated Fock-space matrices of the algebra generators on |0> ... |K-1>.
///
/// Relations that involve a a^dagger are wrong in the last row/column
/// (a^dagger maps |K-1> out of the space). interior_window is the largest
/// index for which all checked relations hold: K - 2.
struct OperatorSet {
  int lambda = 0;
  int truncation = 0;
  int interior_window = 0;

  Matrix number;
  Matrix annihilation;
  Matrix creation;
  Matrix twist;  ///< T = exp(2 pi i N / lambda)
  std::vector<Matrix> projectors;
  Matrix hamiltonian;  ///< H_0 = (a a^dagger + a^dagger a) / 2, by matrix product
};

/// Builds the ladder with a^dagger |n> = sqrt(F(n+1)) |n+1>.
/// Throws NegativeStructureValue if F(n) < 0 for some 0 < n < K.
OperatorSet build_operators(const AlgebraParams& p, int truncation);

/// N_n = prod_{i=1..n} F(i), exact.
Rational normalization_constant(const AlgebraParams& p, long n);

/// N_n from the lambda = 3 gamma-function closed form, with
/// bar-beta_1 = (beta_1 + 1)/3 and bar-beta_2 = (beta_2 + 2)/3.
double normalization_constant_gamma(const AlgebraParams& p, long n);

struct RelationResidual {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct RelationReport {
  double tolerance = 0.0;
  std::vector<RelationResidual> relations;

  bool all_pass() const;
  double max_residual() const;
  /// Residual of the named relation; throws std::out_of_range if absent.
  double residual(std::string_view name) const;
};

/// Max |lhs - rhs| over rows and columns 0 ... window.
double window_residual(const Matrix& lhs, const Matrix& rhs, int window);

/// Checks the nine defining relations on the interior window:
/// [N,a^dag] = a^dag, [a,a^dag] = I + sum alpha_mu P_mu, a^dag T = e^{-2 pi i/lambda} T a^dag,
/// T^lambda = I, a^dag a = F(N), a a^dag = F(N+1), P_mu P_nu = delta P_mu, sum P = I, T unitary.
RelationReport verify_relations(const OperatorSet& ops, const AlgebraParams& p, double tol);

/// Diagonal matrix with entries f(n), n = 0 ... K-1.
template <typename F>
Matrix diagonal_of(int truncation, F&& f) {
  Matrix m = Matrix::Zero(truncation, truncation);
  for (int n = 0; n < truncation; ++n) m(n, n) = f(n);
  return m;
}

}  // namespace cext
