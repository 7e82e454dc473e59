#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mlein/kernels.hpp"

using namespace mlein;

namespace {

std::vector<double> sorted_uniform(std::mt19937_64& rng, std::size_t n, double lo, double hi)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);
    std::sort(x.begin(), x.end());
    return x;
}

}  // namespace

TEST_SUITE("kernels")
{
    TEST_CASE("dispatch reports an isa")
    {
        const kernels::Isa isa = kernels::active_isa();
        CHECK((isa == kernels::Isa::Scalar || isa == kernels::Isa::Avx2));
        CHECK(kernels::to_string(isa).size() > 0);
        if (kernels::avx2::supported()) CHECK(isa == kernels::Isa::Avx2);
    }

    TEST_CASE("laplace_sum scalar against avx2")
    {
        if (!kernels::avx2::supported()) return;
        std::mt19937_64 rng(42);
        for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 33u, 1000u}) {
            const std::vector<double> nodes = sorted_uniform(rng, n, 1e-6, 800.0);
            const std::vector<double> weights = sorted_uniform(rng, n, -1.0, 2.0);
            for (double t : {0.0, 0.1, 1.0, 10.0, 700.0}) {
                const double a = kernels::scalar::laplace_sum(nodes, weights, t);
                const double b = kernels::avx2::laplace_sum(nodes, weights, t);
                double scale = 0.0;
                for (std::size_t i = 0; i < n; ++i) scale += std::abs(weights[i] * std::exp(-nodes[i] * t));
                CHECK(std::abs(a - b) <= 1e-13 * scale + 1e-300);
            }
        }
    }

    TEST_CASE("laplace_sum values")
    {
        const std::vector<double> nodes = {0.5, 1.0, 2.0, 800.0};
        const std::vector<double> weights = {1.0, -2.0, 0.25, 1.0};
        const double t = 1.5;
        const double expected = std::exp(-0.75) - 2 * std::exp(-1.5) + 0.25 * std::exp(-3.0);
        CHECK(kernels::laplace_sum(nodes, weights, t) == doctest::Approx(expected).epsilon(1e-14));
    }

    TEST_CASE("divided differences scalar against avx2")
    {
        if (!kernels::avx2::supported()) return;
        std::mt19937_64 rng(7);
        for (std::size_t n : {2u, 5u, 9u, 64u, 201u}) {
            const std::vector<double> x = sorted_uniform(rng, n, 0.01, 100.0);
            std::vector<double> f(n);
            for (std::size_t i = 0; i < n; ++i) f[i] = std::exp(-x[i]) + std::sin(x[i]);
            for (int order = 1; order <= 3 && static_cast<std::size_t>(order) < n; ++order) {
                const std::size_t m = n - static_cast<std::size_t>(order);
                std::vector<double> prev(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(m + 1));
                std::vector<double> a(m), b(m), sa(m), sb(m);
                kernels::scalar::divided_difference_step(prev, x, order, a);
                kernels::avx2::divided_difference_step(prev, x, order, b);
                kernels::scalar::divided_scale_step(prev, x, order, sa);
                kernels::avx2::divided_scale_step(prev, x, order, sb);
                for (std::size_t i = 0; i < m; ++i) {
                    CHECK(std::abs(a[i] - b[i]) <= 1e-13 * std::max(1.0, std::abs(a[i])));
                    CHECK(std::abs(sa[i] - sb[i]) <= 1e-13 * std::max(1.0, std::abs(sa[i])));
                }
            }
        }
    }

    TEST_CASE("divided difference of a quadratic")
    {
        const std::vector<double> x = {0.0, 1.0, 3.0, 4.0, 8.0};
        std::vector<double> f;
        for (double v : x) f.push_back(v * v);
        std::vector<double> d1(4), d2(3);
        kernels::divided_difference_step(f, x, 1, d1);
        kernels::divided_difference_step(d1, x, 2, d2);
        for (double v : d2) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
    }
}
