#pragma once

#include <memory>

#include "mlein/eval_result.hpp"
#include "mlein/special_core.hpp"

namespace mlein {

/// One summand of the Ein_nu series:
/// (-1)^(n-1) t^exponent / (exponent * Gamma(n nu + 1)), exponent = nu n - nu + 1.
struct EinSeriesTerm {
    int n = 1;
    double exponent = 1.0;
    double coefficient = 1.0;
};

EinSeriesTerm ein_series_term(double nu, int n);

/// Ein_nu(t) = int_0^t (1 - E_nu(-u^nu))/u^nu du for nu in (0, 1], and the
/// Grandi-regularized Ein_0(t) = t/2.
EvalResult ein_nu(double nu, double t, double tol = kDefaultTolerance);

/// (1 - E_nu(-u^nu))/u^nu = E_{nu,1+nu}(-u^nu), with limit 1/Gamma(1 + nu) at 0.
EvalResult ein_nu_integrand(double nu, double u, double tol = kDefaultTolerance);

/// Reusable evaluator of Ein_nu for a fixed order; the series coefficients
/// are tabulated once. Immutable.
class EinNu {
public:
    explicit EinNu(double nu);

    EvalResult operator()(double t, double tol = kDefaultTolerance) const;
    EvalResult integrand(double u, double tol = kDefaultTolerance) const;

    double nu() const noexcept { return nu_; }

private:
    struct Impl;
    double nu_;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace mlein
