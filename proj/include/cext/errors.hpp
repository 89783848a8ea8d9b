#pragma once

#include <stdexcept>
#include <string>

#include "cext/rational.hpp"

namespace cext {

/// Fock space does not exist: F(mu) <= 0 for the reported mu.
class ExistenceViolation : public std::domain_error {
 public:
  ExistenceViolation(int mu, Rational value)
      : std::domain_error("F(" + std::to_string(mu) + ") = " + value.str() + " must be > 0"),
        mu_(mu),
        value_(std::move(value)) {}

  int mu() const { return mu_; }
  const Rational& value() const { return value_; }

 private:
  int mu_;
  Rational value_;
};

class UnsupportedLambda : public std::invalid_argument {
 public:
  UnsupportedLambda(int lambda, const std::string& what)
      : std::invalid_argument(what + " (lambda = " + std::to_string(lambda) + ")"), lambda_(lambda) {}
  int lambda() const { return lambda_; }

 private:
  int lambda_;
};

class InadmissibleParams : public std::domain_error {
  using std::domain_error::domain_error;
};

/// F(n) < 0 inside the truncation, so sqrt(F(n)) has no real value.
class NegativeStructureValue : public std::domain_error {
 public:
  NegativeStructureValue(long n, const Rational& value)
      : std::domain_error("F(" + std::to_string(n) + ") = " + value.str() + " < 0"), n_(n) {}
  long n() const { return n_; }

 private:
  long n_;
};

/// Some omega_mu = 1 + alpha_mu is not strictly positive.
class WindowViolation : public std::domain_error {
 public:
  WindowViolation(int mu, Rational omega)
      : std::domain_error("\xcf\x89_" + std::to_string(mu) + " = " + omega.str() + " \xe2\x89\xa4 0"),
        mu_(mu),
        omega_(std::move(omega)) {}

  int mu() const { return mu_; }
  const Rational& omega() const { return omega_; }

 private:
  int mu_;
  Rational omega_;
};

/// The exact decision procedure produced a label whose printed window does
/// not contain the point. Raised instead of forcing a label.
class ClassificationGap : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cext
