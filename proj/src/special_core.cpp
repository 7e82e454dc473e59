#include "mlein/special_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/special_functions/sin_pi.hpp>

#include "detail/asymptotic.hpp"
#include "detail/power_series.hpp"
#include "detail/quad.hpp"
#include "mlein/quadrature.hpp"

namespace mlein {

using detail::quad;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_parameters(double alpha, double beta)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw Error(ErrorCode::InvalidOrder, "Mittag-Leffler order must satisfy nu > 0");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw Error(ErrorCode::InvalidOrder, "Mittag-Leffler second parameter must satisfy mu > 0");
    }
}

detail::CoefficientSeries ml_coefficients(double alpha, double beta, double radius)
{
    const quad a = alpha;
    const quad b = beta;
    const quad y_max = powq(static_cast<quad>(radius), a);
    return detail::CoefficientSeries::build(
        [&](int k) { return detail::inv_gamma_q(a * k + b); }, y_max);
}

EvalResult from_series(const detail::SeriesSum& sum, const char* what)
{
    if (!sum.converged) {
        throw Error(ErrorCode::NonConvergent, std::string(what) + ": series did not converge");
    }
    const double value = detail::to_double(sum.value);
    return {value, sum.abs_err + kEps * std::abs(value), sum.terms, Method::TaylorSeries};
}

}  // namespace

double rgamma(double x)
{
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x < 0.5) return boost::math::sin_pi(x) * std::tgamma(1.0 - x) / std::numbers::pi;
    if (x > 171.0) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
}

struct MittagLeffler::Table {
    detail::CoefficientSeries series;
    double radius = 0.0;
};

MittagLeffler::MittagLeffler(double alpha, double beta, double max_radius)
    : alpha_(alpha), beta_(beta)
{
    check_parameters(alpha, beta);
    auto table = std::make_shared<Table>();
    table->radius = std::clamp(max_radius, 0.0, kMittagLefflerSwitch);
    table->series = ml_coefficients(alpha, beta, table->radius);
    table_ = std::move(table);

    if (table_->radius == kMittagLefflerSwitch) {
        // Both regimes must agree where they meet.
        for (double sign : {-1.0, 1.0}) {
            const double z = sign * std::pow(kMittagLefflerSwitch, alpha_);
            const EvalResult lo = taylor(z);
            const EvalResult hi = asymptotic(z);
            const double scale = std::max(1.0, std::abs(lo.value));
            if (std::abs(lo.value - hi.value) > 10.0 * kDefaultTolerance * scale) {
                std::ostringstream msg;
                msg << "E_{" << alpha_ << "," << beta_ << "} series and asymptotic regimes disagree at z="
                    << z << " (" << lo.value << " vs " << hi.value << ")";
                throw Error(ErrorCode::ReducedAccuracy, msg.str());
            }
        }
    }
}

EvalResult MittagLeffler::taylor(double z) const
{
    const double radius = std::pow(std::abs(z), 1.0 / alpha_);
    if (radius > table_->radius) {
        // Pointwise extension beyond the tabulated range.
        const auto series = ml_coefficients(alpha_, beta_, radius);
        return from_series(series.sum(std::abs(static_cast<quad>(z)), z < 0.0), "E_{alpha,beta}");
    }
    return from_series(table_->series.sum(std::abs(static_cast<quad>(z)), z < 0.0),
                       "E_{alpha,beta}");
}

EvalResult MittagLeffler::asymptotic(double z) const
{
    const detail::MlExpansion expansion = detail::ml_expansion(alpha_, beta_, z);
    const double value = expansion.residues + expansion.algebraic;
    const double err = expansion.truncation + kEps * (std::abs(expansion.residues) +
                                                      expansion.algebraic_abs + std::abs(value));
    return {value, err, expansion.terms, Method::AsymptoticExpansion};
}

EvalResult MittagLeffler::operator()(double z, double tol) const
{
    if (!std::isfinite(z)) throw Error(ErrorCode::DomainError, "argument must be finite");
    if (z == 0.0) return {rgamma(beta_), kEps * std::abs(rgamma(beta_)), 1, Method::ClosedForm};
    if (alpha_ == 1.0 && beta_ == 1.0) {
        const double value = std::exp(z);
        return require_tolerance({value, kEps * value, 0, Method::ClosedForm}, tol, "E_1");
    }
    const double radius = std::pow(std::abs(z), 1.0 / alpha_);
    const EvalResult result = radius <= kMittagLefflerSwitch ? taylor(z) : asymptotic(z);
    return require_tolerance(result, tol, "E_{alpha,beta}");
}

EvalResult ml_one(const Order& order, double z, double tol)
{
    return ml_two({order.nu, 1.0}, z, tol);
}

EvalResult ml_two(const Order& order, double z, double tol)
{
    check_parameters(order.nu, order.mu);
    if (!std::isfinite(z)) throw Error(ErrorCode::DomainError, "argument must be finite");
    const double radius = std::pow(std::abs(z), 1.0 / order.nu);
    // Size the table to this argument only, or skip it past the switch where
    // the expansion is used; either way no seam check runs.
    const double table_radius = radius <= kMittagLefflerSwitch ? radius : 0.0;
    return MittagLeffler(order.nu, order.mu, table_radius)(z, tol);
}

EvalResult ml_neg_power(const Order& order, double t, double tol)
{
    if (!(order.nu > 0.0 && order.nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "E_nu(-t^nu) requires nu in (0, 1]");
    }
    if (!(t >= 0.0)) throw Error(ErrorCode::DomainError, "E_nu(-t^nu) requires t >= 0");
    if (t == 0.0) return {1.0, 0.0, 1, Method::ClosedForm};
    EvalResult result = ml_two({order.nu, 1.0}, -std::pow(t, order.nu), tol);
    result.value = std::clamp(result.value, 0.0, 1.0);
    return result;
}

EvalResult gamma_upper(double a, double x, double tol)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::DomainError, "Gamma(a, x) requires x > 0");
    }
    if (!std::isfinite(a)) throw Error(ErrorCode::DomainError, "Gamma(a, x) requires finite a");

    const double upper = x + 50.0 * std::max(1.0, std::abs(a));
    const double log_x = std::log(x);
    // u = x e^s turns u^(a-1) e^-u du into u^a e^-u ds.
    auto integrand = [&](double s) {
        const double u = x * std::exp(s);
        return std::exp(a * (log_x + s) - u);
    };
    quadrature::Options options;
    options.abs_tol = 0.0;
    options.rel_tol = 1e-13;
    options.max_subdivisions = 4000;
    const quadrature::Integral integral =
        quadrature::adaptive(integrand, 0.0, std::log(upper / x), options);

    // Gamma(a, U) <= U^(a-1) e^-U / (1 - (a-1)/U) for U > a - 1.
    const double tail = std::exp((a - 1.0) * std::log(upper) - upper) /
                        (1.0 - std::max(0.0, a - 1.0) / upper);
    EvalResult result{integral.value, integral.abs_error + tail + kEps * std::abs(integral.value),
                      integral.evaluations, Method::Quadrature};
    if (!integral.converged) {
        throw Error(ErrorCode::NonConvergent, "Gamma(a, x) quadrature did not converge");
    }
    // Relative contract: Gamma(a, x) can be far below the absolute tolerance.
    if (result.abs_err_estimate > tol * std::max(std::abs(result.value), 1e-300) &&
        result.abs_err_estimate > tol) {
        throw Error(ErrorCode::ReducedAccuracy, "Gamma(a, x) error estimate exceeds tolerance");
    }
    return result;
}

}  // namespace mlein
