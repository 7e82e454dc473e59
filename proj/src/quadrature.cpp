#include "mlein/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace mlein::quadrature {

namespace {

// 21-point Kronrod abscissae (positive half); odd entries are the 10-point
// Gauss nodes.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077715213896283, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    double magnitude;  // integral of |f|

    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod21(const std::function<double(double)>& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_center = f(center);

    double kronrod = f_center * kKronrodWeights[10];
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    std::array<double, 10> f_left{};
    std::array<double, 10> f_right{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kKronrodNodes[j];
        f_left[j] = f(center - dx);
        f_right[j] = f(center + dx);
        const double pair = f_left[j] + f_right[j];
        kronrod += kKronrodWeights[j] * pair;
        abs_sum += kKronrodWeights[j] * (std::abs(f_left[j]) + std::abs(f_right[j]));
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }

    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[10] * std::abs(f_center - mean);
    for (int j = 0; j < 10; ++j)
        asc += kKronrodWeights[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));

    const double result = kronrod * half;
    const double res_abs = abs_sum * std::abs(half);
    const double res_asc = asc * std::abs(half);
    double error = std::abs((kronrod - gauss) * half);
    if (res_asc != 0.0 && error != 0.0)
        error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps))
        error = std::max(50.0 * eps * res_abs, error);
    return {a, b, result, error, res_abs};
}

}  // namespace

Integral adaptive(const std::function<double(double)>& f, double a, double b,
                  const Options& options)
{
    Integral out;
    constexpr double roundoff = 100.0 * std::numeric_limits<double>::epsilon();
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::priority_queue<Segment> heap;
    Segment first = kronrod21(f, a, b);
    out.evaluations = 21;
    double total = first.value;
    double error = first.error;
    double magnitude = first.magnitude;
    heap.push(first);

    // Cancelling integrands cannot be resolved below the roundoff of |f|.
    auto target = [&] {
        return std::max({options.abs_tol, options.rel_tol * std::abs(total), roundoff * magnitude});
    };
    int subdivisions = 1;
    while (error > target()) {
        if (subdivisions >= options.max_subdivisions) break;
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) break;  // interval exhausted
        heap.pop();
        const Segment left = kronrod21(f, worst.a, mid);
        const Segment right = kronrod21(f, mid, worst.b);
        out.evaluations += 42;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        magnitude += left.magnitude + right.magnitude - worst.magnitude;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    // Re-sum from the segments to drop the drift of the running updates.
    total = 0.0;
    error = 0.0;
    magnitude = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        magnitude += heap.top().magnitude;
        heap.pop();
    }
    out.value = total;
    out.abs_error = error;
    out.converged = error <= target();
    return out;
}

Integral panelled(const std::function<double(double)>& f, double a, double b, double panel,
                  const Options& options)
{
    Integral out;
    out.converged = true;
    const double width = b - a;
    if (width <= 0.0) return out;
    const auto panels = static_cast<long>(std::ceil(width / panel));
    double compensation = 0.0;
    for (long i = 0; i < panels; ++i) {
        const double lo = a + width * static_cast<double>(i) / static_cast<double>(panels);
        const double hi = (i + 1 == panels)
                              ? b
                              : a + width * static_cast<double>(i + 1) / static_cast<double>(panels);
        const Integral piece = adaptive(f, lo, hi, options);
        // Neumaier summation across panels.
        const double t = out.value + piece.value;
        if (std::abs(out.value) >= std::abs(piece.value))
            compensation += (out.value - t) + piece.value;
        else
            compensation += (piece.value - t) + out.value;
        out.value = t;
        out.abs_error += piece.abs_error;
        out.evaluations += piece.evaluations;
        out.converged = out.converged && piece.converged;
    }
    out.value += compensation;
    return out;
}

Rule gauss_legendre(int n)
{
    Rule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double derivative = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / derivative;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

}  // namespace mlein::quadrature
