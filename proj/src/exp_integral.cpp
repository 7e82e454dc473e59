#include "mlein/exp_integral.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "detail/quad.hpp"
#include "mlein/special_core.hpp"

namespace mlein {

using detail::quad;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kTermCap = 20000;
constexpr double kAsymptoticSwitch = 40.0;

struct QuadSum {
    quad value = 0;
    quad abs_sum = 0;
    quad last = 0;
    int terms = 0;
};

// sum_{n>=1} s^(n-1) y^n / (n n!), s = -1 when alternating.
QuadSum ein_series(quad y, bool alternating)
{
    QuadSum out;
    quad power_over_factorial = 1;  // y^n / n!
    for (int n = 1; n <= kTermCap; ++n) {
        power_over_factorial *= y / n;
        const quad term = power_over_factorial / n;
        out.value += (alternating && n % 2 == 0) ? -term : term;
        out.abs_sum += term;
        out.last = term;
        out.terms = n;
        if (n > y && term <= 1e-36Q * out.abs_sum) return out;
    }
    throw Error(ErrorCode::NonConvergent, "Ein series reached the term cap");
}

double series_error(const QuadSum& sum)
{
    return detail::to_double(sum.last + 4 * detail::kQuadEpsilon * sum.abs_sum);
}

// e^-x/x sum (-1)^k k!/x^k, stopped at the smallest term.
EvalResult e1_asymptotic(double x)
{
    const double prefactor = std::exp(-x) / x;
    double sum = 1.0;
    double term = 1.0;
    int k = 1;
    for (;; ++k) {
        const double next = -term * k / x;
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < kEps * std::abs(sum) * 1e-3) break;
    }
    const double value = prefactor * sum;
    return {value, prefactor * (std::abs(term) + 2 * kEps * std::abs(sum)), k,
            Method::AsymptoticExpansion};
}

// Continued fraction e^-x / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))), modified
// Lentz. Keeps full relative precision where Ein - log x cancels.
EvalResult e1_continued_fraction(double x)
{
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    int i = 1;
    for (; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    const double value = h * std::exp(-x);
    return {value, 8 * kEps * value, i, Method::AsymptoticExpansion};
}

bool on_cut(ComplexPoint s) { return s.imag() == 0.0 && s.real() <= 0.0; }

// log(1 + w), accurate for small |w|.
ComplexPoint log1p(ComplexPoint w)
{
    if (std::abs(w) >= 0.1) return std::log(1.0 + w);
    ComplexPoint sum = 0.0;
    ComplexPoint power = w;
    for (int n = 1; n <= 40; ++n) {
        sum += ((n % 2 == 1) ? 1.0 : -1.0) * power / static_cast<double>(n);
        power *= w;
    }
    return sum;
}

}  // namespace

EvalResult ein(double t, double tol)
{
    if (!std::isfinite(t)) throw Error(ErrorCode::DomainError, "Ein requires a finite argument");
    if (t == 0.0) return {0.0, 0.0, 0, Method::ClosedForm};
    if (t > kAsymptoticSwitch) {
        const EvalResult tail = e1_asymptotic(t);
        const double value = kEulerGamma + std::log(t) + tail.value;
        return require_tolerance(
            {value, tail.abs_err_estimate + kEps * value, tail.terms_used, tail.method}, tol, "Ein");
    }
    // For t < 0 every term has the same sign and the series is stable.
    const QuadSum sum = ein_series(std::abs(static_cast<quad>(t)), t > 0.0);
    const double value = t > 0.0 ? detail::to_double(sum.value) : -detail::to_double(sum.value);
    return require_tolerance(
        {value, series_error(sum) + kEps * std::abs(value), sum.terms, Method::TaylorSeries}, tol,
        "Ein");
}

ComplexEvalResult ein(ComplexPoint z, double tol)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::DomainError, "Ein requires a finite argument");
    }
    __complex128 w;
    __real__ w = z.real();
    __imag__ w = z.imag();
    __complex128 power_over_factorial = 1;
    __complex128 sum = 0;
    quad abs_sum = 0;
    quad last = 0;
    const quad radius = cabsq(w);
    int n = 1;
    for (; n <= kTermCap; ++n) {
        power_over_factorial *= w / static_cast<quad>(n);
        const __complex128 term = power_over_factorial / static_cast<quad>(n);
        sum += (n % 2 == 0) ? -term : term;
        last = cabsq(term);
        abs_sum += last;
        if (n > radius && last <= 1e-36Q * abs_sum) break;
    }
    if (n > kTermCap) throw Error(ErrorCode::NonConvergent, "Ein series reached the term cap");
    ComplexEvalResult out;
    out.value = {detail::to_double(crealq(sum)), detail::to_double(cimagq(sum))};
    out.abs_err_estimate =
        detail::to_double(last + 4 * detail::kQuadEpsilon * abs_sum) + kEps * std::abs(out.value);
    out.terms_used = std::min(n, kTermCap);
    out.method = Method::TaylorSeries;
    if (!std::isfinite(std::abs(out.value))) {
        throw Error(ErrorCode::DomainError, "Ein is not representable in double at this argument");
    }
    if (out.abs_err_estimate > tol * std::max(1.0, std::abs(out.value))) {
        throw Error(ErrorCode::ReducedAccuracy, "complex Ein error estimate exceeds tolerance");
    }
    return out;
}

EvalResult e1(double x, double tol)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::DomainError, "E1 requires x > 0");
    if (x > kAsymptoticSwitch) return require_tolerance(e1_asymptotic(x), tol, "E1");
    if (x > 2.0) return require_tolerance(e1_continued_fraction(x), tol, "E1");
    const quad xq = x;
    const QuadSum sum = ein_series(xq, true);
    const quad value = sum.value - detail::kQuadEulerGamma - logq(xq);
    const double v = detail::to_double(value);
    return require_tolerance({v, series_error(sum) + kEps * std::abs(v), sum.terms,
                              Method::TaylorSeries},
                             tol, "E1");
}

EvalResult ei(double x, double tol)
{
    if (x == 0.0 || !std::isfinite(x)) {
        throw Error(ErrorCode::DomainError, "Ei requires a finite x != 0");
    }
    if (x < 0.0) {
        EvalResult result = e1(-x, tol);
        result.value = -result.value;
        return result;
    }
    if (x > 720.0) throw Error(ErrorCode::DomainError, "Ei(x) overflows double for x > 720");
    const quad xq = x;
    const QuadSum sum = ein_series(xq, false);
    const quad value = detail::kQuadEulerGamma + logq(xq) + sum.value;
    const double v = detail::to_double(value);
    return require_tolerance(
        {v, series_error(sum) + kEps * std::abs(v), sum.terms, Method::TaylorSeries}, tol, "Ei");
}

EvalResult e_nu(double nu, double x, double tol)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::DomainError, "E_nu(x) requires x > 0");
    }
    if (!std::isfinite(nu)) throw Error(ErrorCode::InvalidOrder, "E_nu requires a finite order");
    if (nu == 1.0) return e1(x, tol);
    if (nu == 0.0) {
        const double value = std::exp(-x) / x;
        return require_tolerance({value, kEps * value, 0, Method::ClosedForm}, tol, "E_nu");
    }
    const EvalResult gamma = gamma_upper(1.0 - nu, x, tol);
    const double scale = std::pow(x, nu - 1.0);
    return require_tolerance({scale * gamma.value, scale * gamma.abs_err_estimate,
                              gamma.terms_used, gamma.method},
                             tol, "E_nu");
}

ComplexPoint laplace_phi(ComplexPoint s)
{
    if (on_cut(s)) throw Error(ErrorCode::CutViolation, "log(1 + s)/s needs s off (-inf, 0]");
    return log1p(s) / s;
}

ComplexPoint laplace_psi(ComplexPoint s)
{
    if (on_cut(s)) throw Error(ErrorCode::CutViolation, "log(1/s + 1)/s needs s off (-inf, 0]");
    return log1p(1.0 / s) / s;
}

}  // namespace mlein
