#include "mlein/ein_generalized.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "detail/asymptotic.hpp"
#include "detail/power_series.hpp"
#include "detail/quad.hpp"

namespace mlein {

using detail::quad;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_order(double nu)
{
    if (!(nu >= 0.0 && nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "Ein_nu is implemented for nu in [0, 1]");
    }
}

void check_argument(double t)
{
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw Error(ErrorCode::DomainError, "Ein_nu requires a finite t >= 0");
    }
}

// Ein_nu(t) = t sum_k (-t^nu)^k / ((nu k + 1) Gamma(nu k + nu + 1)).
struct EinNuState {
    double nu = 0.0;
    double radius = 0.0;
    detail::CoefficientSeries series;
    std::optional<EvalResult> at_switch;

    EinNuState(double order, double max_radius) : nu(order), radius(max_radius)
    {
        if (nu == 0.0) return;
        const quad q = nu;
        series = detail::CoefficientSeries::build(
            [&](int k) { return detail::inv_gamma_q(q * k + q + 1) / (q * k + 1); },
            powq(static_cast<quad>(radius), q));
        if (radius >= kMittagLefflerSwitch) at_switch = sum(kMittagLefflerSwitch);
    }

    EvalResult sum(double t) const
    {
        const detail::SeriesSum s = series.sum(powq(static_cast<quad>(t), static_cast<quad>(nu)), true);
        if (!s.converged) throw Error(ErrorCode::NonConvergent, "Ein_nu series did not converge");
        const double value = detail::to_double(t * s.value);
        return {value, t * s.abs_err + kEps * std::abs(value), s.terms, Method::TaylorSeries};
    }

    EvalResult operator()(double t, double tol) const
    {
        check_argument(t);
        if (nu == 0.0) return {0.5 * t, 0.0, 0, Method::Regularized};
        if (t == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
        if (t <= kMittagLefflerSwitch) return require_tolerance(sum(t), tol, "Ein_nu");

        // Past the switch: Ein_nu(40) plus the integral of E_{nu,1+nu}(-u^nu).
        const detail::TailIntegral tail =
            detail::ml_tail_integral(nu, 1.0 + nu, 0.0, kMittagLefflerSwitch, t);
        const double value = at_switch->value + tail.value;
        return require_tolerance({value, at_switch->abs_err_estimate + tail.abs_err + kEps * value,
                                  at_switch->terms_used + tail.evaluations,
                                  Method::AsymptoticExpansion},
                                 tol, "Ein_nu");
    }
};

EvalResult integrand_at_zero(double nu)
{
    const double value = rgamma(1.0 + nu);
    return {value, kEps * value, 1, Method::ClosedForm};
}

}  // namespace

EinSeriesTerm ein_series_term(double nu, int n)
{
    if (!(nu > 0.0 && nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "Ein_nu series terms need nu in (0, 1]");
    }
    if (n < 1) throw Error(ErrorCode::DomainError, "Ein_nu series index starts at 1");
    EinSeriesTerm term;
    term.n = n;
    term.exponent = nu * n - nu + 1.0;
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    term.coefficient = sign * rgamma(n * nu + 1.0) / term.exponent;
    return term;
}

EvalResult ein_nu(double nu, double t, double tol)
{
    check_order(nu);
    check_argument(t);
    const double radius = t > kMittagLefflerSwitch ? kMittagLefflerSwitch : t;
    return EinNuState(nu, radius)(t, tol);
}

EvalResult ein_nu_integrand(double nu, double u, double tol)
{
    if (!(nu > 0.0 && nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "Ein_nu integrand needs nu in (0, 1]");
    }
    if (!(u >= 0.0) || !std::isfinite(u)) {
        throw Error(ErrorCode::DomainError, "Ein_nu integrand requires u >= 0");
    }
    if (u == 0.0) return integrand_at_zero(nu);
    return ml_two({nu, 1.0 + nu}, -std::pow(u, nu), tol);
}

struct EinNu::Impl {
    EinNuState state;
    std::optional<MittagLeffler> integrand;
};

EinNu::EinNu(double nu) : nu_(nu)
{
    check_order(nu);
    auto impl = std::make_shared<Impl>(Impl{EinNuState(nu, kMittagLefflerSwitch), std::nullopt});
    if (nu > 0.0) impl->integrand.emplace(nu, 1.0 + nu);
    impl_ = std::move(impl);
}

EvalResult EinNu::operator()(double t, double tol) const { return impl_->state(t, tol); }

EvalResult EinNu::integrand(double u, double tol) const
{
    if (nu_ == 0.0) throw Error(ErrorCode::InvalidOrder, "Ein_nu integrand needs nu in (0, 1]");
    if (!(u >= 0.0) || !std::isfinite(u)) {
        throw Error(ErrorCode::DomainError, "Ein_nu integrand requires u >= 0");
    }
    if (u == 0.0) return integrand_at_zero(nu_);
    return (*impl_->integrand)(-std::pow(u, nu_), tol);
}

}  // namespace mlein
