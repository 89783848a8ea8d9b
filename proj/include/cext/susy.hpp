#pragma once

#include <string>
#include <vector>

#include "cext/algebra.hpp"
#include "cext/fockrep.hpp"

namespace cext {

/// alpha^{(mu)}_nu = alpha_{nu + mu mod lambda}. Throws ExistenceViolation if
/// the shifted algebra has no Fock space.
AlgebraParams cyclic_shift(const AlgebraParams& p, int mu);

/// The 2K x 2K superalgebra of one hierarchy link:
///   H = diag(H^(mu) - E0^(mu), H^(mu+1) - E0^(mu)),
///   Q^dag = [[0, a^dag_mu], [0, 0]],  Q = [[0, 0], [a_mu, 0]].
struct SuperBlocks {
  Matrix hamiltonian;
  Matrix charge;
  Matrix charge_dagger;
};

/// Period-lambda chain of partner Hamiltonians H^(0) ... H^(lambda) with
/// H^(mu) = F(N + mu) of the base algebra.
struct SusyHierarchy {
  explicit SusyHierarchy(AlgebraParams p) : base(std::move(p)) {}

  AlgebraParams base;
  std::vector<AlgebraParams> shifted;      ///< lambda entries, shifted[0] = base
  std::vector<Rational> omegas;            ///< 1 + alpha_mu
  std::vector<Rational> ground_energies;   ///< lambda + 1 entries, partial sums of omegas
  int truncation = 0;
  int interior_window = 0;

  std::vector<std::vector<Rational>> exact_diagonals;  ///< F(n + mu), n < K, mu = 0 ... lambda
  std::vector<Matrix> hamiltonians;         ///< the same diagonals as matrices
  std::vector<Matrix> ladder_hamiltonians;  ///< a^dag a for mu = 0, a_{mu-1} a^dag_{mu-1} + E0^(mu-1) otherwise
  std::vector<OperatorSet> shifted_ops;     ///< ladder matrices of each shifted algebra
  std::vector<SuperBlocks> blocks;          ///< lambda links

  int lambda() const { return base.lambda(); }
};

/// Throws WindowViolation naming the first omega_mu <= 0, and
/// std::invalid_argument if K < 2 lambda.
SusyHierarchy build_hierarchy(const AlgebraParams& p, int truncation);

struct SqmResidual {
  int mu = 0;
  std::string relation;
  double residual = 0.0;
  bool pass = false;

  friend bool operator==(const SqmResidual&, const SqmResidual&) = default;
};

struct SqmReport {
  double tolerance = 0.0;
  std::vector<SqmResidual> residuals;
  bool interlacing = false;
  bool top_shift_exact = false;       ///< H^(lambda) = H^(0) + Omega I on exact diagonals
  bool operator_periodicity = false;  ///< shifting by lambda returns the base algebra

  bool all_pass() const;
  double max_residual() const;
};

/// sqm(2) relations per link, agreement of the two constructions of H^(mu),
/// the top shift H^(lambda) = H^(0) + Omega I, interlacing and periodicity.
SqmReport verify_sqm(const SusyHierarchy& h, double tol);

/// E^(mu)_n = k Omega + omega_0 + ... + omega_{nu-1} with n + mu = lambda k + nu,
/// for n < M and mu = 0 ... lambda. Requires M <= K - lambda.
bool check_interlacing(const SusyHierarchy& h, int count);

/// H^(mu) = H_0^(mu) - 1/2 sum_nu (1 + alpha^(mu)_nu) P_nu + E0^(mu) I for every mu,
/// plus for lambda = 3 the rewrites of H^(0), H^(1), H^(2) through H_0^(0).
bool projection_shift_identity(const SusyHierarchy& h, double tol);

}  // namespace cext
