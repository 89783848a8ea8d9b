#include "cext/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace cext {

AlgebraParams::AlgebraParams(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.size() < 2) {
    throw UnsupportedLambda(static_cast<int>(alphas_.size()), "lambda must be at least 2");
  }
  if (std::accumulate(alphas_.begin(), alphas_.end(), Rational(0)) != Rational(0)) {
    throw std::invalid_argument("alpha parameters must sum to zero");
  }
  betas_.reserve(alphas_.size());
  Rational partial(0);
  for (const auto& a : alphas_) {
    betas_.push_back(partial);
    partial += a;
  }
}

AlgebraParams AlgebraParams::create(int lambda, std::span<const Rational> alphas_head) {
  if (lambda < 2) throw UnsupportedLambda(lambda, "lambda must be at least 2");
  if (alphas_head.size() != static_cast<std::size_t>(lambda - 1)) {
    throw std::invalid_argument("expected " + std::to_string(lambda - 1) + " independent alpha parameters, got " +
                                std::to_string(alphas_head.size()));
  }
  std::vector<Rational> alphas(alphas_head.begin(), alphas_head.end());
  alphas.push_back(-std::accumulate(alphas_head.begin(), alphas_head.end(), Rational(0)));
  return from_alphas(std::move(alphas));
}

AlgebraParams AlgebraParams::from_alphas(std::vector<Rational> alphas) {
  AlgebraParams p(std::move(alphas));
  for (int mu = 1; mu < p.lambda(); ++mu) {
    Rational f = structure_function(p, mu);
    if (f.sign() <= 0) throw ExistenceViolation(mu, std::move(f));
  }
  return p;
}

AlgebraParams AlgebraParams::unchecked(std::vector<Rational> alphas) { return AlgebraParams(std::move(alphas)); }

bool AlgebraParams::admissible() const {
  for (int mu = 1; mu < lambda(); ++mu) {
    if (structure_function(*this, mu).sign() <= 0) return false;
  }
  return true;
}

std::size_t AlgebraParams::wrap(long mu) const {
  const long l = lambda();
  return static_cast<std::size_t>(((mu % l) + l) % l);
}

AlgebraParams make_params3(const Rational& alpha0, const Rational& alpha1) {
  const Rational head[] = {alpha0, alpha1};
  return AlgebraParams::create(3, head);
}

Rational structure_function(const AlgebraParams& p, long n) {
  if (n < 0) throw std::invalid_argument("structure function needs n >= 0");
  return Rational(n) + p.beta(n);
}

Rational g_function(const AlgebraParams& p, long n) {
  if (n < 0) throw std::invalid_argument("G(n) needs n >= 0");
  return Rational(1) + p.alpha(n);
}

std::vector<Rational> gamma_coeffs(const AlgebraParams& p) {
  std::vector<Rational> gamma;
  gamma.reserve(p.alphas().size());
  for (int mu = 0; mu < p.lambda(); ++mu) {
    // beta(lambda) wraps to beta_0 = 0
    gamma.push_back((p.beta(mu) + p.beta(mu + 1)) / Rational(2));
  }
  return gamma;
}

Rational energy(const AlgebraParams& p, long n) {
  if (n < 0) throw std::invalid_argument("energy needs n >= 0");
  return Rational(n) + Rational(1, 2) + (p.beta(n) + p.beta(n + 1)) / Rational(2);
}

AlgebraParams kappa_to_alpha(const KappaPair& k) {
  return AlgebraParams::from_alphas({Rational(2) * k.re_kappa1, -k.re_kappa1 - k.im_kappa1_times_sqrt3,
                                     -k.re_kappa1 + k.im_kappa1_times_sqrt3});
}

KappaPair alpha_to_kappa(const AlgebraParams& p) {
  if (p.lambda() != 3) throw UnsupportedLambda(p.lambda(), "kappa parametrisation exists only for C_3");
  const Rational re = p.alpha(0) / Rational(2);
  return {re, -p.alpha(1) - re};
}

}  // namespace cext
