#include "mlein/cm_verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mlein/becker.hpp"
#include "mlein/eval_result.hpp"
#include "mlein/kernels.hpp"
#include "mlein/quadrature.hpp"

namespace mlein {

namespace {

constexpr int kGaussPoints = 20;
constexpr int kPanelsPerDecade = 4;

std::vector<double> evaluate(const ScalarFunction& f, const std::vector<double>& x)
{
    std::vector<double> values;
    values.reserve(x.size());
    for (double point : x) {
        double value;
        try {
            value = f(point);
        } catch (const std::exception& e) {
            std::ostringstream msg;
            msg << "function failed at x=" << point << ": " << e.what();
            throw Error(ErrorCode::EvaluationFailure, msg.str());
        }
        if (!std::isfinite(value)) {
            std::ostringstream msg;
            msg << "function is not finite at x=" << point;
            throw Error(ErrorCode::EvaluationFailure, msg.str());
        }
        values.push_back(value);
    }
    return values;
}

void check_order(int max_order, const Grid& grid, int highest)
{
    if (max_order < 0 || max_order > kMaxCMOrder) {
        throw Error(ErrorCode::DomainError, "max_order must lie in [0, 10]");
    }
    if (grid.count <= highest) {
        throw Error(ErrorCode::DomainError, "grid has too few points for the requested order");
    }
}

// Scans divided differences of orders 1..highest. Order k must satisfy
// sign(k) * D^k >= -tol * S^k, S^k the same recursion on |f| with sums.
void scan_differences(const std::vector<double>& x, const std::vector<double>& values, int highest,
                      int sign_offset, CMReport& report)
{
    std::vector<double> difference = values;
    std::vector<double> scale(values.size());
    std::transform(values.begin(), values.end(), scale.begin(), [](double v) { return std::abs(v); });
    std::vector<double> next(values.size());
    std::vector<double> next_scale(values.size());
    for (int k = 1; k <= highest; ++k) {
        const std::size_t n = difference.size() - 1;
        kernels::divided_difference_step(difference, x, k, std::span<double>(next.data(), n));
        kernels::divided_scale_step(scale, x, k, std::span<double>(next_scale.data(), n));
        difference.assign(next.begin(), next.begin() + static_cast<std::ptrdiff_t>(n));
        scale.assign(next_scale.begin(), next_scale.begin() + static_cast<std::ptrdiff_t>(n));
        const double sign = ((k + sign_offset) % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double signed_value = sign * difference[i];
            if (signed_value < -kCMTolerance * scale[i]) {
                report.violations.push_back({k, x[i], signed_value});
            }
        }
    }
}

}  // namespace

Grid Grid::linear(double start, double stop, int count)
{
    Grid grid{GridKind::Linear, start, stop, count};
    grid.validate();
    return grid;
}

Grid Grid::logarithmic(double start, double stop, int count)
{
    Grid grid{GridKind::Logarithmic, start, stop, count};
    grid.validate();
    return grid;
}

void Grid::validate() const
{
    if (!(std::isfinite(start) && std::isfinite(stop) && start < stop)) {
        throw Error(ErrorCode::DomainError, "grid needs finite start < stop");
    }
    if (count < 2) throw Error(ErrorCode::DomainError, "grid needs at least 2 points");
    if (kind == GridKind::Logarithmic && !(start > 0.0)) {
        throw Error(ErrorCode::DomainError, "logarithmic grid needs start > 0");
    }
}

std::vector<double> Grid::points() const
{
    validate();
    std::vector<double> out(static_cast<std::size_t>(count));
    const double last = count - 1;
    if (kind == GridKind::Linear) {
        for (int i = 0; i < count; ++i) out[i] = start + (stop - start) * (i / last);
    } else {
        const double lo = std::log10(start);
        const double hi = std::log10(stop);
        for (int i = 0; i < count; ++i) out[i] = std::pow(10.0, lo * (1.0 - i / last) + hi * (i / last));
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

Grid default_cm_grid() { return Grid::logarithmic(1e-2, 1e2, 200); }

CMReport check_cm(const ScalarFunction& f, const Grid& grid, int max_order, const std::string& id)
{
    grid.validate();
    check_order(max_order, grid, max_order);
    CMReport report{id, grid, max_order, {}, false, 0.0};
    const std::vector<double> x = grid.points();
    const std::vector<double> values = evaluate(f, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (values[i] < 0.0) report.violations.push_back({0, x[i], values[i]});
    }
    scan_differences(x, values, max_order, 0, report);
    report.passed = report.violations.empty();
    return report;
}

CMReport check_bernstein(const ScalarFunction& f, const Grid& grid, int max_order,
                         const std::string& id)
{
    grid.validate();
    check_order(max_order, grid, max_order + 1);
    CMReport report{id, grid, max_order + 1, {}, false, 0.0};
    const std::vector<double> x = grid.points();
    const std::vector<double> values = evaluate(f, x);
    double largest = 0.0;
    for (double v : values) largest = std::max(largest, std::abs(v));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (values[i] < -kCMTolerance * largest) report.violations.push_back({0, x[i], values[i]});
    }
    scan_differences(x, values, max_order + 1, 1, report);
    report.passed = report.violations.empty();
    return report;
}

CMReport check_reconstruction(double nu, const Grid& t_grid, double tolerance)
{
    t_grid.validate();
    if (!(t_grid.start > 0.0)) {
        throw Error(ErrorCode::DomainError, "reconstruction needs t > 0 on the grid");
    }
    if (!(nu > 0.0 && nu <= 1.0)) {
        throw Error(ErrorCode::InvalidOrder, "reconstruction needs nu in (0, 1]");
    }
    const BeckerModel model(nu);

    // Panels of equal width in log r, kPanelsPerDecade per decade, aligned so
    // that r = 1 is a panel edge. Below r0 the spectrum is integrated term by
    // term; above R = 50/t_min the kernel is below e^-50.
    double r0 = 1e-6;
    if (std::pow(r0, nu) > 0.5) r0 = std::pow(0.5, 1.0 / nu);
    const int lo = static_cast<int>(std::floor(kPanelsPerDecade * std::log10(r0)));
    const int hi = static_cast<int>(std::ceil(kPanelsPerDecade * std::log10(50.0 / t_grid.start)));
    r0 = std::pow(10.0, static_cast<double>(lo) / kPanelsPerDecade);

    const quadrature::Rule rule = quadrature::gauss_legendre(kGaussPoints);
    std::vector<double> nodes;
    std::vector<double> weights;
    nodes.reserve(static_cast<std::size_t>((hi - lo) * kGaussPoints));
    weights.reserve(nodes.capacity());
    for (int j = lo; j < hi; ++j) {
        const double a = std::log(10.0) * j / kPanelsPerDecade;
        const double b = std::log(10.0) * (j + 1) / kPanelsPerDecade;
        const double half = 0.5 * (b - a);
        const double center = 0.5 * (a + b);
        for (int i = 0; i < kGaussPoints; ++i) {
            const double r = std::exp(center + half * rule.nodes[i]);
            nodes.push_back(r);
            weights.push_back(rule.weights[i] * half * r * model.spectrum_frequency(r).value);
        }
    }

    CMReport report{"reconstruction(nu=" + std::to_string(nu) + ")", t_grid, 0, {}, false, 0.0};
    for (double t : t_grid.points()) {
        const double body = kernels::laplace_sum(nodes, weights, t);
        const double head = spectrum_low_frequency_integral(nu, r0, t).value;
        const double exact = model.rate(t).value;
        const double relative = std::abs(body + head - exact) / std::abs(exact);
        report.max_relative_error = std::max(report.max_relative_error, relative);
        if (!(relative <= tolerance)) report.violations.push_back({0, t, relative});
    }
    report.passed = report.violations.empty();
    return report;
}

}  // namespace mlein
