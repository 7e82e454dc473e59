#include "mlein/trig_integral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "detail/asymptotic.hpp"
#include "detail/power_series.hpp"
#include "detail/quad.hpp"
#include "mlein/exp_integral.hpp"
#include "mlein/quadrature.hpp"
#include "mlein/special_core.hpp"

namespace mlein {

using detail::quad;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kSwitch = kMittagLefflerSwitch;
constexpr int kTermCap = 20000;

struct QuadSum {
    quad value = 0;
    quad abs_sum = 0;
    quad last = 0;
    int terms = 0;
};

// Si: sum (-1)^(n-1) x^(2n-1) / ((2n-1) (2n-1)!)
// Cin: sum (-1)^(n-1) x^(2n) / ((2n) (2n)!)
QuadSum classic_series(quad x, bool sine)
{
    QuadSum out;
    const quad x2 = x * x;
    quad p = sine ? x : x2 / 2;  // x^m / m!
    int m = sine ? 1 : 2;
    for (int n = 1; n <= kTermCap; ++n, m += 2) {
        const quad term = p / m;
        out.value += (n % 2 == 1) ? term : -term;
        out.abs_sum += term;
        out.last = term;
        out.terms = n;
        if (m > x && term <= 1e-36Q * out.abs_sum) return out;
        p *= x2 / ((m + 1) * static_cast<quad>(m + 2));
    }
    throw Error(ErrorCode::NonConvergent, "trigonometric integral series reached the term cap");
}

double series_error(const QuadSum& sum)
{
    return detail::to_double(sum.last + 4 * detail::kQuadEpsilon * sum.abs_sum);
}

quadrature::Integral oscillatory_tail(double (*f)(double), double a, double b)
{
    quadrature::Options options;
    options.abs_tol = 1e-17;
    options.rel_tol = 1e-13;
    const quadrature::Integral integral =
        quadrature::panelled([f](double t) { return f(t); }, a, b, kPi, options);
    if (!integral.converged) {
        throw Error(ErrorCode::NonConvergent, "oscillatory tail quadrature did not converge");
    }
    return integral;
}

double sin_over_t(double t) { return std::sin(t) / t; }
double cos_over_t(double t) { return std::cos(t) / t; }

EvalResult si_nonnegative(double x)
{
    if (x == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
    const QuadSum at = classic_series(std::min(x, kSwitch), true);
    const double base = detail::to_double(at.value);
    if (x <= kSwitch) {
        return {base, series_error(at) + kEps * std::abs(base), at.terms, Method::TaylorSeries};
    }
    const quadrature::Integral tail = oscillatory_tail(sin_over_t, kSwitch, x);
    const double value = base + tail.value;
    return {value, series_error(at) + tail.abs_error + kEps * std::abs(value),
            at.terms + tail.evaluations, Method::Quadrature};
}

EvalResult cin_nonnegative(double x)
{
    if (x == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
    const QuadSum at = classic_series(std::min(x, kSwitch), false);
    const double base = detail::to_double(at.value);
    if (x <= kSwitch) {
        return {base, series_error(at) + kEps * std::abs(base), at.terms, Method::TaylorSeries};
    }
    const quadrature::Integral tail = oscillatory_tail(cos_over_t, kSwitch, x);
    const double value = base + std::log(x / kSwitch) - tail.value;
    return {value, series_error(at) + tail.abs_error + kEps * std::abs(value),
            at.terms + tail.evaluations, Method::Quadrature};
}

void check_order(double nu)
{
    if (!(nu > 0.0 && nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "fractional circular functions need nu in (0, 1]");
    }
}

void check_argument(double x)
{
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::DomainError, "fractional circular functions need a finite x >= 0");
    }
}

// Sin_nu(x) = x sum_k (-1)^k y^k / (Gamma((2k+1)nu + 1) (2k nu + 1))
// Cin_nu(x) = x^(nu+1) sum_k (-1)^k y^k / (Gamma(2(k+1)nu + 1) ((2k+1)nu + 1))
// with y = x^(2 nu).
struct IntegralState {
    double nu = 1.0;
    detail::CoefficientSeries sin_series;
    detail::CoefficientSeries cin_series;
    std::optional<EvalResult> sin_at_switch;
    std::optional<EvalResult> cin_at_switch;

    IntegralState(double order, double radius) : nu(order)
    {
        const quad q = nu;
        const quad y_max = powq(static_cast<quad>(radius), 2 * q);
        sin_series = detail::CoefficientSeries::build(
            [&](int k) { return detail::inv_gamma_q((2 * k + 1) * q + 1) / (2 * k * q + 1); }, y_max);
        cin_series = detail::CoefficientSeries::build(
            [&](int k) { return detail::inv_gamma_q(2 * (k + 1) * q + 1) / ((2 * k + 1) * q + 1); },
            y_max);
        if (radius >= kSwitch) {
            sin_at_switch = series(sin_series, kSwitch, 1.0);
            cin_at_switch = series(cin_series, kSwitch, nu + 1.0);
        }
    }

    EvalResult series(const detail::CoefficientSeries& s, double x, double prefactor_power) const
    {
        const quad xq = x;
        const detail::SeriesSum sum = s.sum(powq(xq, 2 * static_cast<quad>(nu)), true);
        if (!sum.converged) {
            throw Error(ErrorCode::NonConvergent, "fractional integral series did not converge");
        }
        const double prefactor = std::pow(x, prefactor_power);
        const double value = detail::to_double(powq(xq, static_cast<quad>(prefactor_power)) * sum.value);
        return {value, prefactor * sum.abs_err + kEps * std::abs(value), sum.terms,
                Method::TaylorSeries};
    }

    EvalResult sin_integral(double x, double tol) const
    {
        check_argument(x);
        if (x == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
        if (x <= kSwitch) return require_tolerance(series(sin_series, x, 1.0), tol, "Sin_nu");
        const detail::TailIntegral tail = detail::ml_tail_integral(2 * nu, 1 + nu, 0.0, kSwitch, x);
        const double value = sin_at_switch->value + tail.value;
        return require_tolerance({value, sin_at_switch->abs_err_estimate + tail.abs_err + kEps * std::abs(value),
                                  sin_at_switch->terms_used + tail.evaluations, Method::AsymptoticExpansion},
                                 tol, "Sin_nu");
    }

    EvalResult cin_integral(double x, double tol) const
    {
        check_argument(x);
        if (x == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
        if (x <= kSwitch) return require_tolerance(series(cin_series, x, nu + 1.0), tol, "Cin_nu");
        // int t^-nu dt minus the integral of t^-nu cos_nu(t).
        const double power = nu == 1.0 ? std::log(x / kSwitch)
                                       : (std::pow(x, 1.0 - nu) - std::pow(kSwitch, 1.0 - nu)) / (1.0 - nu);
        const detail::TailIntegral tail = detail::ml_tail_integral(2 * nu, 1.0, -nu, kSwitch, x);
        const double value = cin_at_switch->value + power - tail.value;
        return require_tolerance({value,
                                  cin_at_switch->abs_err_estimate + tail.abs_err +
                                      kEps * (std::abs(value) + std::abs(power)),
                                  cin_at_switch->terms_used + tail.evaluations, Method::AsymptoticExpansion},
                                 tol, "Cin_nu");
    }
};

double table_radius(double x) { return x > kSwitch ? kSwitch : x; }

EvalResult sin_from_ml(double nu, double x, const EvalResult& ml)
{
    const double scale = std::pow(x, nu);
    return {scale * ml.value, scale * ml.abs_err_estimate, ml.terms_used, ml.method};
}

}  // namespace

EvalResult si_classic(double x, double tol)
{
    if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "Si requires a finite argument");
    EvalResult result = si_nonnegative(std::abs(x));
    if (x < 0.0) result.value = -result.value;
    return require_tolerance(result, tol, "Si");
}

EvalResult si_lower(double x, double tol)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::DomainError, "si requires x > 0");
    EvalResult result = si_nonnegative(x);
    result.value -= kPi / 2;
    result.abs_err_estimate += kEps * kPi;
    return require_tolerance(result, tol, "si");
}

EvalResult cin(double x, double tol)
{
    if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "Cin requires a finite argument");
    return require_tolerance(cin_nonnegative(std::abs(x)), tol, "Cin");
}

EvalResult ci(double x, double tol)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::DomainError, "Ci requires x > 0");
    const quad x0 = std::min(x, kSwitch);
    const QuadSum at = classic_series(x0, false);
    const double base = detail::to_double(detail::kQuadEulerGamma + logq(x0) - at.value);
    if (x <= kSwitch) {
        return require_tolerance(
            {base, series_error(at) + kEps * std::abs(base), at.terms, Method::TaylorSeries}, tol,
            "Ci");
    }
    const quadrature::Integral tail = oscillatory_tail(cos_over_t, kSwitch, x);
    const double value = base + tail.value;
    return require_tolerance({value, series_error(at) + tail.abs_error + kEps * std::abs(value),
                              at.terms + tail.evaluations, Method::Quadrature},
                             tol, "Ci");
}

EvalResult sin_frac(double nu, double x, double tol)
{
    check_order(nu);
    check_argument(x);
    if (x == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
    return require_tolerance(sin_from_ml(nu, x, ml_two({2 * nu, 1 + nu}, -std::pow(x, 2 * nu), tol)),
                             tol, "sin_nu");
}

EvalResult cos_frac(double nu, double x, double tol)
{
    check_order(nu);
    check_argument(x);
    if (x == 0.0) return {1.0, 0.0, 0, Method::ClosedForm};
    return ml_two({2 * nu, 1.0}, -std::pow(x, 2 * nu), tol);
}

EvalResult sin_integral_nu(double nu, double x, double tol)
{
    check_order(nu);
    check_argument(x);
    return IntegralState(nu, table_radius(x)).sin_integral(x, tol);
}

EvalResult cin_integral_nu(double nu, double x, double tol)
{
    check_order(nu);
    check_argument(x);
    return IntegralState(nu, table_radius(x)).cin_integral(x, tol);
}

struct FractionalCircular::Impl {
    IntegralState integrals;
    MittagLeffler sin_ml;
    MittagLeffler cos_ml;
};

FractionalCircular::FractionalCircular(double nu) : nu_(nu)
{
    check_order(nu);
    impl_ = std::make_shared<Impl>(
        Impl{IntegralState(nu, kSwitch), MittagLeffler(2 * nu, 1 + nu), MittagLeffler(2 * nu, 1.0)});
}

EvalResult FractionalCircular::sin(double x, double tol) const
{
    check_argument(x);
    if (x == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
    return require_tolerance(sin_from_ml(nu_, x, impl_->sin_ml(-std::pow(x, 2 * nu_), tol)), tol,
                             "sin_nu");
}

EvalResult FractionalCircular::cos(double x, double tol) const
{
    check_argument(x);
    if (x == 0.0) return {1.0, 0.0, 0, Method::ClosedForm};
    return impl_->cos_ml(-std::pow(x, 2 * nu_), tol);
}

EvalResult FractionalCircular::sin_integral(double x, double tol) const
{
    return impl_->integrals.sin_integral(x, tol);
}

EvalResult FractionalCircular::cin_integral(double x, double tol) const
{
    return impl_->integrals.cin_integral(x, tol);
}

}  // namespace mlein
