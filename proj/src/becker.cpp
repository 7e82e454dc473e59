#include "mlein/becker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include "mlein/quadrature.hpp"

namespace mlein {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
constexpr double kLaplaceMargin = 0.05;
constexpr int kLaplaceTermCap = 1000000;
constexpr int kSpectrumTerms = 400;

void check_closed_order(double nu)
{
    if (!(nu >= 0.0 && nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "creep model requires nu in [0, 1]");
    }
}

void check_open_order(double nu)
{
    if (!(nu > 0.0 && nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "this operation requires nu in (0, 1]");
    }
}

void check_time(double t)
{
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw Error(ErrorCode::DomainError, "creep functions require a finite t >= 0");
    }
}

EvalResult scaled(EvalResult result, double factor)
{
    result.value *= factor;
    result.abs_err_estimate = std::abs(factor) * result.abs_err_estimate + kEps * std::abs(result.value);
    return result;
}

EvalResult rate_from_ml(double nu, const EvalResult& ml)
{
    return scaled(ml, std::tgamma(1.0 + nu));
}

// Sum of Gamma(1+nu) sum_{n>=1} (-1)^(n-1) s^(nu - nu n - 1 - extra) c_n, with
// c_n = Gamma(n nu - nu + 1 + extra) / (Gamma(1 + n nu) (nu n - nu + 1)^extra).
EvalResult laplace_series(double nu, double s, bool integrated, double tol)
{
    check_open_order(nu);
    if (!std::isfinite(s)) throw Error(ErrorCode::DomainError, "Laplace variable must be finite");
    if (s <= 1.0 + kLaplaceMargin) {
        throw Error(ErrorCode::SeriesDivergent,
                    "descending Laplace series needs s > 1.05");
    }
    const double log_s = std::log(s);
    double sum = 0.0;
    double compensation = 0.0;
    double abs_sum = 0.0;
    double next = 0.0;
    int n = 1;
    for (; n <= kLaplaceTermCap; ++n) {
        const double a = n * nu - nu + 1.0;
        double c;
        if (integrated) {
            c = boost::math::tgamma_delta_ratio(a + 1.0, nu - 1.0) / a;
        } else {
            c = boost::math::tgamma_delta_ratio(a, nu);
        }
        const double exponent = nu - nu * n - 1.0 - (integrated ? 1.0 : 0.0);
        const double magnitude = c * std::exp(exponent * log_s);
        if (n > 1 && magnitude <= 1e-17 * std::abs(sum + compensation)) {
            next = magnitude;
            break;
        }
        const double term = (n % 2 == 1) ? magnitude : -magnitude;
        const double t = sum + term;
        compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        abs_sum += magnitude;
    }
    if (n > kLaplaceTermCap) {
        throw Error(ErrorCode::NonConvergent, "Laplace series reached the term cap");
    }
    const double g = std::tgamma(1.0 + nu);
    const double value = g * (sum + compensation);
    return require_tolerance({value, g * (next + 4 * kEps * abs_sum) + kEps * std::abs(value), n - 1,
                              Method::AsymptoticExpansion},
                             tol, "Laplace series");
}

EvalResult box_spectrum(double r)
{
    const double value = r < 1.0 ? 1.0 : (r > 1.0 ? 0.0 : 0.5);
    return {value, 0.0, 0, Method::ClosedForm};
}

// K_nu(r), 0 < nu < 1, by three representations:
//   r^nu <= q:     ascending series  Gamma(1+nu) sum_k (-1)^(k+1) r^(nu k - 1) / (Gamma(nu k) Gamma(1 + nu - nu k))
//   r^-nu <= q:    descending series (Gamma(1+nu)/pi) sum_n (-1)^(n-1) Gamma(a_n)/Gamma(1 + n nu) r^-a_n sin(pi a_n)
//   otherwise:     nu [r^(nu-1) - int_0^r (r - p)^(nu-1) k(p) dp], k the spectrum of E_nu(-t^nu)
// with a_n = n nu - nu + 1 and q the switch ratio.
class SpectrumEvaluator {
public:
    SpectrumEvaluator(double nu, bool check_seams) : nu_(nu), gamma_(std::tgamma(1.0 + nu))
    {
        ascending_.reserve(kSpectrumTerms);
        ascending_envelope_.reserve(kSpectrumTerms);
        descending_.reserve(kSpectrumTerms);
        descending_envelope_.reserve(kSpectrumTerms);
        for (int k = 1; k <= kSpectrumTerms; ++k) {
            if (k == 1) {
                ascending_envelope_.push_back(1.0 / std::tgamma(nu));
                ascending_.push_back(ascending_envelope_.back());
            } else {
                // 1/Gamma(1 + nu - nu k) = Gamma(nu k - nu) sin(pi (nu k - nu)) / pi
                const double x = nu * k - nu;
                const double ratio = boost::math::tgamma_delta_ratio(x, nu) / kPi;
                ascending_envelope_.push_back(ratio);
                ascending_.push_back(((k % 2 == 1) ? 1.0 : -1.0) * ratio *
                                     boost::math::sin_pi(x));
            }
            const double a = nu * k - nu + 1.0;
            const double ratio = boost::math::tgamma_delta_ratio(a, nu);
            descending_envelope_.push_back(ratio);
            descending_.push_back(((k % 2 == 1) ? 1.0 : -1.0) * ratio * boost::math::sin_pi(a));
        }
        if (check_seams) {
            verify_seam(std::pow(kSpectrumSeriesRatio, 1.0 / nu_), true);
            verify_seam(std::pow(kSpectrumSeriesRatio, -1.0 / nu_), false);
        }
    }

    EvalResult operator()(double r) const
    {
        const double q = std::pow(r, nu_);
        if (q <= kSpectrumSeriesRatio) return ascending(r);
        if (1.0 / q <= kSpectrumSeriesRatio) return descending(r);
        return convolution(r);
    }

    EvalResult ascending(double r) const
    {
        const double q = std::pow(r, nu_);
        EvalResult series = sum_series(ascending_, ascending_envelope_, q);
        return finish(scaled(series, gamma_ * q / r), Method::TaylorSeries);
    }

    EvalResult descending(double r) const
    {
        EvalResult series = sum_series(descending_, descending_envelope_, std::pow(r, -nu_));
        return finish(scaled(series, gamma_ / (kPi * r)), Method::AsymptoticExpansion);
    }

    EvalResult convolution(double r) const
    {
        const double c = std::sin(nu_ * kPi) / kPi;
        const double cos_nu = std::cos(nu_ * kPi);
        const double inv = 1.0 / nu_;
        const double upper = std::pow(0.5 * r, nu_);
        // p = v^(1/nu) on [0, r/2] and r - p = w^(1/nu) on [r/2, r]; both
        // make the integrand smooth.
        auto near_origin = [&](double v) {
            return std::pow(r - std::pow(v, inv), nu_ - 1.0) * c / (v * v + 2.0 * v * cos_nu + 1.0) *
                   inv;
        };
        auto near_r = [&](double w) {
            const double p = r - std::pow(w, inv);
            const double pn = std::pow(p, nu_);
            return c * pn / p / (pn * pn + 2.0 * pn * cos_nu + 1.0) * inv;
        };
        quadrature::Options options;
        options.abs_tol = 1e-16;
        options.rel_tol = 1e-13;
        const quadrature::Integral first = quadrature::adaptive(near_origin, 0.0, upper, options);
        const quadrature::Integral second = quadrature::adaptive(near_r, 0.0, upper, options);
        if (!first.converged || !second.converged) {
            throw Error(ErrorCode::NonConvergent, "spectrum convolution integral did not converge");
        }
        const double lead = std::pow(r, nu_ - 1.0);
        const double value = nu_ * (lead - first.value - second.value);
        const double err = nu_ * (first.abs_error + second.abs_error) + 4 * kEps * nu_ * lead;
        return {value, err, first.evaluations + second.evaluations, Method::Quadrature};
    }

    // Term-wise integral of the ascending series against e^{-rt} on [0, r0].
    EvalResult low_frequency_integral(double r0, double t) const
    {
        const double q = std::pow(r0, nu_);
        const double x = r0 * t;
        double sum = 0.0;
        double abs_sum = 0.0;
        double power = q;
        for (std::size_t k = 0; k < ascending_.size(); ++k) {
            const double exponent = nu_ * static_cast<double>(k + 1);
            if (k > 0 && ascending_envelope_[k] * power <= 1e-18 * std::abs(sum)) {
                const double bound = ascending_envelope_[k] * power / (1.0 - q) / exponent;
                return {gamma_ * sum, gamma_ * (bound + 4 * kEps * abs_sum), static_cast<int>(k),
                        Method::TaylorSeries};
            }
            // int_0^r0 r^(e-1) e^{-rt} dr = r0^e sum_m (-x)^m / (m! (e + m))
            double inner = 0.0;
            double factor = 1.0;
            for (int m = 0; m < 40; ++m) {
                inner += factor / (exponent + m);
                factor *= -x / (m + 1);
                if (std::abs(factor) < 1e-18) break;
            }
            const double term = ascending_[k] * power * inner;
            sum += term;
            abs_sum += std::abs(term);
            power *= q;
        }
        throw Error(ErrorCode::NonConvergent, "low-frequency spectrum integral did not converge");
    }

private:
    EvalResult sum_series(const std::vector<double>& coefficients,
                          const std::vector<double>& envelope, double q) const
    {
        double sum = 0.0;
        double abs_sum = 0.0;
        double power = 1.0;
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            const double bound = envelope[k] * power;
            if (k > 0 && bound <= 1e-18 * std::abs(sum)) {
                // Envelope decreases, so the tail is below a geometric series.
                return {sum, bound / (1.0 - q) + 4 * kEps * abs_sum, static_cast<int>(k),
                        Method::TaylorSeries};
            }
            const double term = coefficients[k] * power;
            sum += term;
            abs_sum += std::abs(term);
            power *= q;
        }
        throw Error(ErrorCode::NonConvergent, "spectrum series did not converge");
    }

    EvalResult finish(EvalResult result, Method method) const
    {
        result.method = method;
        return result;
    }

    void verify_seam(double r, bool lower) const
    {
        const EvalResult series = lower ? ascending(r) : descending(r);
        const EvalResult integral = convolution(r);
        if (std::abs(series.value - integral.value) > 1e-6 * std::abs(integral.value)) {
            std::ostringstream msg;
            msg << "spectrum representations disagree at r=" << r << " for nu=" << nu_ << " ("
                << series.value << " vs " << integral.value << ")";
            throw Error(ErrorCode::ReducedAccuracy, msg.str());
        }
    }

    double nu_;
    double gamma_;
    std::vector<double> ascending_;
    std::vector<double> ascending_envelope_;
    std::vector<double> descending_;
    std::vector<double> descending_envelope_;
};

void check_abscissa(double x, const char* what)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::DomainError, std::string(what) + " must be finite and > 0");
    }
}

EvalResult time_from_frequency(const EvalResult& k, double tau)
{
    return scaled(k, 1.0 / (tau * tau));
}

}  // namespace

EvalResult creep_psi(double nu, double t, double tol)
{
    check_closed_order(nu);
    check_time(t);
    if (nu == 0.0) return {0.5 * t, 0.0, 0, Method::Regularized};
    return require_tolerance(scaled(ein_nu(nu, t, tol), std::tgamma(1.0 + nu)), tol, "psi_nu");
}

EvalResult creep_rate(double nu, double t, double tol)
{
    check_open_order(nu);
    check_time(t);
    if (t == 0.0) return {1.0, 0.0, 0, Method::ClosedForm};
    return require_tolerance(rate_from_ml(nu, ml_two({nu, 1.0 + nu}, -std::pow(t, nu), tol)), tol,
                             "psi'_nu");
}

EvalResult laplace_psi_series(double nu, double s, double tol)
{
    return laplace_series(nu, s, true, tol);
}

EvalResult laplace_rate_series(double nu, double s, double tol)
{
    return laplace_series(nu, s, false, tol);
}

EvalResult spectrum_frequency(double nu, double r, double tol)
{
    check_open_order(nu);
    check_abscissa(r, "r");
    if (nu == 1.0) return box_spectrum(r);
    return require_tolerance(SpectrumEvaluator(nu, false)(r), tol, "K_nu");
}

EvalResult spectrum_time(double nu, double tau, double tol)
{
    check_open_order(nu);
    check_abscissa(tau, "tau");
    return require_tolerance(time_from_frequency(spectrum_frequency(nu, 1.0 / tau, tol), tau), tol,
                             "H_nu");
}

EvalResult spectrum_low_frequency_integral(double nu, double r0, double t)
{
    check_open_order(nu);
    check_abscissa(r0, "r0");
    if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::DomainError, "t must be >= 0");
    if (std::pow(r0, nu) > kSpectrumSeriesRatio || r0 * t > 0.05) {
        throw Error(ErrorCode::DomainError, "r0 lies outside the ascending-series region");
    }
    if (nu == 1.0) {
        const double value = t == 0.0 ? r0 : -std::expm1(-r0 * t) / t;
        return {value, kEps * value, 0, Method::ClosedForm};
    }
    return SpectrumEvaluator(nu, false).low_frequency_integral(r0, t);
}

struct BeckerModel::Spectrum {
    SpectrumEvaluator evaluator;
};

BeckerModel::BeckerModel(double nu) : nu_(nu), ein_((check_closed_order(nu), nu))
{
    if (nu > 0.0) rate_.emplace(nu, 1.0 + nu);
    if (nu > 0.0 && nu < 1.0) spectrum_ = std::make_shared<Spectrum>(Spectrum{SpectrumEvaluator(nu, true)});
}

EvalResult BeckerModel::psi(double t, double tol) const
{
    check_time(t);
    if (nu_ == 0.0) return {0.5 * t, 0.0, 0, Method::Regularized};
    return require_tolerance(scaled(ein_(t, tol), std::tgamma(1.0 + nu_)), tol, "psi_nu");
}

EvalResult BeckerModel::rate(double t, double tol) const
{
    check_time(t);
    if (nu_ == 0.0) return {0.5, 0.0, 0, Method::Regularized};
    if (t == 0.0) return {1.0, 0.0, 0, Method::ClosedForm};
    return require_tolerance(rate_from_ml(nu_, (*rate_)(-std::pow(t, nu_), tol)), tol, "psi'_nu");
}

EvalResult BeckerModel::spectrum_frequency(double r, double tol) const
{
    check_open_order(nu_);
    check_abscissa(r, "r");
    if (nu_ == 1.0) return box_spectrum(r);
    return require_tolerance(spectrum_->evaluator(r), tol, "K_nu");
}

EvalResult BeckerModel::spectrum_time(double tau, double tol) const
{
    check_abscissa(tau, "tau");
    return require_tolerance(time_from_frequency(spectrum_frequency(1.0 / tau, tol), tau), tol,
                             "H_nu");
}

std::vector<CreepSample> creep_table(double nu, const std::vector<double>& times, double tol)
{
    const BeckerModel model(nu);
    std::vector<CreepSample> out;
    out.reserve(times.size());
    for (double t : times) out.push_back({t, model.psi(t, tol).value, model.rate(t, tol).value});
    return out;
}

SpectrumTable spectrum_table(double nu, SpectrumKind kind, const std::vector<double>& abscissae,
                             double tol)
{
    const BeckerModel model(nu);
    SpectrumTable table;
    table.kind = kind;
    table.nu = nu;
    table.points.reserve(abscissae.size());
    table.min_density = std::numeric_limits<double>::infinity();
    for (double x : abscissae) {
        const EvalResult density = kind == SpectrumKind::Frequency ? model.spectrum_frequency(x, tol)
                                                                   : model.spectrum_time(x, tol);
        table.points.push_back({x, density.value});
        table.min_density = std::min(table.min_density, density.value);
    }
    if (table.points.empty()) table.min_density = 0.0;
    table.non_negative = table.min_density >= -1e-9;
    return table;
}

}  // namespace mlein
