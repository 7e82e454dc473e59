#pragma once

#include <memory>

#include "mlein/eval_result.hpp"

namespace mlein {

/// Fractional order: `nu` is the Mittag-Leffler index, `mu` the second
/// parameter of the two-parameter function.
struct Order {
    double nu = 1.0;
    double mu = 1.0;
};

/// Radius, in the natural variable |z|^(1/alpha), below which the Taylor
/// series is summed and above which the asymptotic expansion is used.
inline constexpr double kMittagLefflerSwitch = 40.0;

/// E_{alpha,beta}(z) on the real axis.
///
/// Below the switch radius the Taylor series is summed in quad precision
/// with coefficients 1/Gamma(alpha k + beta) tabulated once at
/// construction; above it the Poincare expansion is used, including the
/// residue (exponential) terms of every pole on the principal sheet.
/// Instances are immutable and may be shared across threads.
class MittagLeffler {
public:
    /// Tabulates enough coefficients to sum the series for
    /// |z|^(1/alpha) <= min(max_radius, kMittagLefflerSwitch).
    MittagLeffler(double alpha, double beta, double max_radius = kMittagLefflerSwitch);

    EvalResult operator()(double z, double tol = kDefaultTolerance) const;

    /// Forces a regime; used by seam-continuity checks.
    EvalResult taylor(double z) const;
    EvalResult asymptotic(double z) const;

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

private:
    struct Table;
    double alpha_;
    double beta_;
    std::shared_ptr<const Table> table_;
};

/// E_nu(z) = sum z^k / Gamma(nu k + 1).
EvalResult ml_one(const Order& order, double z, double tol = kDefaultTolerance);

/// E_{nu,mu}(z) = sum z^k / Gamma(nu k + mu).
EvalResult ml_two(const Order& order, double z, double tol = kDefaultTolerance);

/// E_nu(-t^nu) for nu in (0, 1], t >= 0. Completely monotone in t.
EvalResult ml_neg_power(const Order& order, double t, double tol = kDefaultTolerance);

/// Upper incomplete gamma Gamma(a, x) for x > 0, by adaptive quadrature on
/// [x, x + 50 max(1, |a|)] with an analytic bound on the remaining tail.
EvalResult gamma_upper(double a, double x, double tol = kDefaultTolerance);

/// 1/Gamma(x), exactly zero at the poles.
double rgamma(double x);

}  // namespace mlein
