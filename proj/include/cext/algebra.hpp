#pragma once

#include <span>
#include <vector>

#include "cext/errors.hpp"
#include "cext/rational.hpp"

namespace cext {

/// Parameters of a C_lambda-extended oscillator algebra.
///
/// Holds the full vector alpha_0 ... alpha_{lambda-1} (summing to zero) and
/// the partial sums beta_mu = alpha_0 + ... + alpha_{mu-1}, beta_0 = 0.
/// Indices passed to alpha()/beta() are reduced mod lambda.
class AlgebraParams {
 public:
  /// Closes the head alpha_0 ... alpha_{lambda-2} with alpha_{lambda-1} = -sum
  /// and validates Fock existence. Throws ExistenceViolation naming the first
  /// mu with F(mu) <= 0.
  static AlgebraParams create(int lambda, std::span<const Rational> alphas_head);

  /// Full alpha vector; requires sum = 0. Fock existence is validated.
  static AlgebraParams from_alphas(std::vector<Rational> alphas);

  /// As from_alphas but skips the Fock-existence check. For probing the
  /// boundary of the parameter domain; most operations assume admissibility.
  static AlgebraParams unchecked(std::vector<Rational> alphas);

  int lambda() const { return static_cast<int>(alphas_.size()); }
  const std::vector<Rational>& alphas() const { return alphas_; }
  const std::vector<Rational>& betas() const { return betas_; }

  const Rational& alpha(long mu) const { return alphas_[wrap(mu)]; }
  const Rational& beta(long mu) const { return betas_[wrap(mu)]; }

  /// F(mu) > 0 for mu = 1 ... lambda-1.
  bool admissible() const;

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  explicit AlgebraParams(std::vector<Rational> alphas);
  std::size_t wrap(long mu) const;

  std::vector<Rational> alphas_;
  std::vector<Rational> betas_;
};

/// Convenience for lambda = 3: A^(3)_{alpha0 alpha1}.
AlgebraParams make_params3(const Rational& alpha0, const Rational& alpha1);

/// F(n) = n + beta_{n mod lambda}; F(0) = 0.
Rational structure_function(const AlgebraParams& p, long n);

/// G(n) = 1 + alpha_{n mod lambda} = F(n+1) - F(n).
Rational g_function(const AlgebraParams& p, long n);

/// gamma_mu = (beta_mu + beta_{mu+1}) / 2 with beta_lambda = 0.
///
/// For lambda = 3 this is gamma_0 = alpha_0/2, gamma_1 = (2 alpha_0 + alpha_1)/2,
/// gamma_2 = (alpha_0 + alpha_1)/2. The general form follows from
/// E_n = (F(n) + F(n+1)) / 2.
std::vector<Rational> gamma_coeffs(const AlgebraParams& p);

/// Eigenvalue of H_0 = {a, a^dagger}/2 on |n>: n + 1/2 + gamma_{n mod lambda}.
/// No positivity is implied.
Rational energy(const AlgebraParams& p, long n);

/// kappa_1 (kappa_2 = conj(kappa_1)) for lambda = 3. The imaginary part is
/// stored premultiplied by sqrt(3) so the map to alphas stays rational.
struct KappaPair {
  Rational re_kappa1;
  Rational im_kappa1_times_sqrt3;

  friend bool operator==(const KappaPair&, const KappaPair&) = default;
};

/// alpha_0 = 2 Re k, alpha_1 = -Re k - sqrt3 Im k, alpha_2 = -Re k + sqrt3 Im k.
AlgebraParams kappa_to_alpha(const KappaPair& k);
KappaPair alpha_to_kappa(const AlgebraParams& p);

}  // namespace cext
