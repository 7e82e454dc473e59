#pragma once

#include <memory>

#include "mlein/eval_result.hpp"

namespace mlein {

/// Si(x) = int_0^x sin(t)/t dt; odd in x.
EvalResult si_classic(double x, double tol = kDefaultTolerance);

/// si(x) = Si(x) - pi/2, x > 0.
EvalResult si_lower(double x, double tol = kDefaultTolerance);

/// Modified cosine integral Cin(x) = int_0^x (1 - cos t)/t dt; even in x.
EvalResult cin(double x, double tol = kDefaultTolerance);

/// Ci(x) = C + log x - Cin(x), x > 0.
EvalResult ci(double x, double tol = kDefaultTolerance);

/// sin_nu(x) = x^nu E_{2nu,1+nu}(-x^{2nu}), nu in (0, 1], x >= 0.
EvalResult sin_frac(double nu, double x, double tol = kDefaultTolerance);

/// cos_nu(x) = E_{2nu,1}(-x^{2nu}), nu in (0, 1], x >= 0.
EvalResult cos_frac(double nu, double x, double tol = kDefaultTolerance);

/// Sin_nu(x) = int_0^x sin_nu(t)/t^nu dt.
EvalResult sin_integral_nu(double nu, double x, double tol = kDefaultTolerance);

/// Cin_nu(x) = int_0^x (1 - cos_nu(t))/t^nu dt.
EvalResult cin_integral_nu(double nu, double x, double tol = kDefaultTolerance);

/// The four fractional circular functions at a fixed order with their
/// series tables built once. Immutable.
class FractionalCircular {
public:
    explicit FractionalCircular(double nu);

    EvalResult sin(double x, double tol = kDefaultTolerance) const;
    EvalResult cos(double x, double tol = kDefaultTolerance) const;
    EvalResult sin_integral(double x, double tol = kDefaultTolerance) const;
    EvalResult cin_integral(double x, double tol = kDefaultTolerance) const;

    double nu() const noexcept { return nu_; }

private:
    struct Impl;
    double nu_;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace mlein
