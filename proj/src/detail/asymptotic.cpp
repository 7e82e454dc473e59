#include "detail/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mlein/quadrature.hpp"
#include "mlein/special_core.hpp"

namespace mlein::detail {

namespace {

constexpr double kPi = std::numbers::pi;

// Poles on the cut itself (alpha = 1, z < 0) contribute e^-X and are left
// to the error estimate.
template <class Visit>
void for_each_pole(double alpha, bool negative, Visit&& visit)
{
    const double arg = negative ? kPi : 0.0;
    const int lo = static_cast<int>(std::floor((-alpha * kPi - arg) / (2.0 * kPi)));
    const int hi = static_cast<int>(std::ceil((alpha * kPi - arg) / (2.0 * kPi)));
    for (int j = lo; j <= hi; ++j) {
        const double theta = (arg + 2.0 * kPi * j) / alpha;
        if (std::abs(theta) < kPi * (1.0 - 1e-14)) visit(theta);
    }
}

double residue_sum(double alpha, double beta, double radius, bool negative)
{
    double sum = 0.0;
    const double log_radius = std::log(radius);
    for_each_pole(alpha, negative, [&](double theta) {
        const double magnitude = std::exp((1.0 - beta) * log_radius + radius * std::cos(theta));
        sum += magnitude * std::cos((1.0 - beta) * theta + radius * std::sin(theta)) / alpha;
    });
    return sum;
}

struct Truncation {
    int last = 0;              // highest k kept
    double next = 0.0;         // |coefficient| of the first dropped term
    int next_index = 0;
};

// |1/Gamma(x)| oscillates through zeros for x < 0; the truncation point is
// chosen on its envelope Gamma(1 - x)/pi instead.
double rgamma_envelope(double x)
{
    if (x >= 0.5) return std::abs(rgamma(x));
    return std::exp(std::lgamma(1.0 - x)) / kPi;
}

// Optimal truncation of the algebraic tail at |z|.
Truncation truncate(double alpha, double beta, double abs_z)
{
    Truncation out;
    const double radius = std::pow(abs_z, 1.0 / alpha);
    const int cap = static_cast<int>(std::min(2.0 * radius / alpha + 20.0, 1e5));
    const double log_z = std::log(abs_z);
    double previous = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int k = 1; k <= cap; ++k) {
        const double envelope = rgamma_envelope(beta - alpha * k);
        const double magnitude = envelope * std::exp(-k * log_z);
        if (magnitude > previous || !std::isfinite(magnitude)) {
            out.next = envelope;
            out.next_index = k;
            return out;
        }
        out.last = k;
        sum += magnitude;
        previous = magnitude;
        if (magnitude <= 1e-18 * sum) {
            out.next = envelope;
            out.next_index = k + 1;
            return out;
        }
    }
    return out;
}

}  // namespace

bool ml_has_residues(double alpha, bool negative)
{
    bool any = false;
    for_each_pole(alpha, negative, [&](double) { any = true; });
    return any;
}

double ml_residues(double alpha, double beta, double z)
{
    const double radius = std::pow(std::abs(z), 1.0 / alpha);
    return residue_sum(alpha, beta, radius, z < 0.0);
}

MlExpansion ml_expansion(double alpha, double beta, double z)
{
    MlExpansion out;
    const double abs_z = std::abs(z);
    const double radius = std::pow(abs_z, 1.0 / alpha);
    out.residues = residue_sum(alpha, beta, radius, z < 0.0);

    const Truncation cut = truncate(alpha, beta, abs_z);
    const double w = 1.0 / z;
    double power = 1.0;
    for (int k = 1; k <= cut.last; ++k) {
        power *= w;
        const double term = -power * rgamma(beta - alpha * k);
        out.algebraic += term;
        out.algebraic_abs += std::abs(term);
    }
    out.terms = cut.last;
    if (cut.next_index > 0) out.truncation = cut.next * std::pow(abs_z, -cut.next_index);
    out.truncation +=
        std::exp(-radius) * std::max(1.0, std::pow(radius, 1.0 - beta)) / alpha;
    return out;
}

TailIntegral ml_tail_integral(double alpha, double beta, double gamma, double a, double b)
{
    TailIntegral out;
    if (b <= a) return out;

    // u^gamma (-u^alpha)^-k = (-1)^k u^(gamma - alpha k)
    auto integrated = [&](int k) {
        const double p = gamma - alpha * k;
        if (std::abs(p + 1.0) < 1e-14) return std::log(b / a);
        return (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / (p + 1.0);
    };
    const Truncation cut = truncate(alpha, beta, std::pow(a, alpha));
    double compensation = 0.0;
    for (int k = 1; k <= cut.last; ++k) {
        const double c = rgamma(beta - alpha * k);
        if (c == 0.0) continue;
        const double term = -((k & 1) ? -1.0 : 1.0) * c * integrated(k);
        const double t = out.value + term;
        compensation += std::abs(out.value) >= std::abs(term) ? (out.value - t) + term
                                                              : (term - t) + out.value;
        out.value = t;
        out.abs_err += std::numeric_limits<double>::epsilon() * std::abs(term);
    }
    out.value += compensation;
    if (cut.next_index > 0) out.abs_err += cut.next * std::abs(integrated(cut.next_index));
    out.abs_err += std::exp(-a) * std::max(1.0, std::pow(a, 1.0 - beta + gamma)) / alpha;

    if (ml_has_residues(alpha, true)) {
        auto f = [&](double u) {
            return std::pow(u, gamma) * residue_sum(alpha, beta, u, true);
        };
        quadrature::Options options;
        options.abs_tol = 1e-17;
        options.rel_tol = 1e-14;
        const quadrature::Integral oscillatory = quadrature::panelled(f, a, b, kPi, options);
        out.value += oscillatory.value;
        out.abs_err += oscillatory.abs_error;
        out.evaluations += oscillatory.evaluations;
    }
    return out;
}

}  // namespace mlein::detail
