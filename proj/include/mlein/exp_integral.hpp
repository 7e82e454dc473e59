#pragma once

#include <complex>
#include <numbers>

#include "mlein/eval_result.hpp"

namespace mlein {

/// Euler-Mascheroni constant C = -Gamma'(1).
inline constexpr double kEulerGamma = std::numbers::egamma;

using ComplexPoint = std::complex<double>;

struct ComplexEvalResult {
    ComplexPoint value;
    double abs_err_estimate = 0.0;
    int terms_used = 0;
    Method method = Method::TaylorSeries;
};

/// Schelkunoff's entire function Ein(t) = int_0^t (1 - e^-u)/u du.
/// For t > 40 it is assembled as C + log t + E1(t).
EvalResult ein(double t, double tol = kDefaultTolerance);

/// Ein on the complex plane via its power series.
ComplexEvalResult ein(ComplexPoint z, double tol = kDefaultTolerance);

/// E1(x) = Gamma(0, x), x > 0.
EvalResult e1(double x, double tol = kDefaultTolerance);

/// Ei(x), principal value for x > 0.
EvalResult ei(double x, double tol = kDefaultTolerance);

/// Generalized exponential integral E_nu(x) = int_1^inf e^{-xt} t^{-nu} dt.
EvalResult e_nu(double nu, double x, double tol = kDefaultTolerance);

/// Laplace transform of E1(t): log(1 + s)/s on the cut plane.
ComplexPoint laplace_phi(ComplexPoint s);

/// Laplace transform of Ein(t): log(1/s + 1)/s on the cut plane.
ComplexPoint laplace_psi(ComplexPoint s);

/// The causal pair of the Becker model: phi(t) = E1(t), psi(t) = Ein(t).
inline EvalResult phi(double t, double tol = kDefaultTolerance) { return e1(t, tol); }
inline EvalResult psi(double t, double tol = kDefaultTolerance) { return ein(t, tol); }

}  // namespace mlein
