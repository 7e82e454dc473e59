#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracle.hpp"
#include "mlein/eval_result.hpp"
#include "mlein/exp_integral.hpp"
#include "mlein/special_core.hpp"

using namespace mlein;

TEST_SUITE("exp_integral")
{
    TEST_CASE("Euler constant")
    {
        CHECK(std::abs(kEulerGamma - 0.5772156649015329) < 1e-16);
    }

    TEST_CASE("ein examples")
    {
        CHECK(ein(0.0).value == 0.0);
        CHECK(std::abs(ein(50.0).value - (kEulerGamma + std::log(50.0))) <= 10 * std::exp(-50.0));
        const double quad = oracle::finite([](double u) { return -std::expm1(-u) / u; }, 0.0, 1.0);
        CHECK(std::abs(ein(1.0).value - quad) <= 1e-12);
        CHECK(std::abs(ein(1.0).value - 0.79659959929705313428) <= 1e-15);
    }

    TEST_CASE("ein is non-negative and non-decreasing")
    {
        double previous = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double v = ein(0.1 * i).value;
            CHECK(v >= previous);
            previous = v;
        }
    }

    TEST_CASE("ein near zero")
    {
        CHECK(std::abs(ein(1e-6).value / 1e-6 - 1.0) <= 1e-5);
        CHECK(ein(-2.0).value < 0.0);
    }

    TEST_CASE("complex ein")
    {
        const ComplexEvalResult a = ein(ComplexPoint(1.0, 2.0));
        CHECK(std::abs(a.value - ComplexPoint(1.2551503355270233748, 1.0720671348659034868)) <= 1e-14);
        const ComplexEvalResult b = ein(ComplexPoint(-3.0, 0.5));
        CHECK(std::abs(b.value - ComplexPoint(-7.6940760686672436582, 3.1056569462597961703)) <= 1e-13);
        const ComplexEvalResult c = ein(ComplexPoint(2.5, 0.0));
        CHECK(c.value.imag() == 0.0);
        CHECK(std::abs(c.value.real() - ein(2.5).value) <= 1e-15);
    }

    TEST_CASE("e1 examples")
    {
        CHECK(std::abs((e1(1e-6).value - std::log(1e6)) + kEulerGamma) <= 1e-5);
        const double leading = std::exp(-10.0) / 10.0;
        CHECK(std::abs(e1(10.0).value - leading) <= 0.1 * leading);
        CHECK(std::abs(e1(1.0).value - gamma_upper(0.0, 1.0).value) <= 1e-12);
        CHECK_THROWS_AS(e1(0.0), Error);
        CHECK_THROWS_AS(e1(-1.0), Error);
    }

    TEST_CASE("e1 relative accuracy across regimes")
    {
        for (double x : {0.5, 1.9, 2.1, 10.0, 39.0, 41.0, 100.0, 600.0}) {
            const double quad = oracle::half_line([](double u) { return std::exp(-u) / u; }, x);
            CHECK(std::abs(e1(x).value - quad) <= 1e-13 * quad);
        }
    }

    TEST_CASE("decomposition identity")
    {
        for (int i = 0; i <= 200; ++i) {
            const double x = 1e-3 * std::pow(5e4, i / 200.0);
            CHECK(std::abs(e1(x).value + kEulerGamma + std::log(x) - ein(x).value) <= 1e-12);
        }
    }

    TEST_CASE("ei examples")
    {
        CHECK(ei(-1.0).value == -e1(1.0).value);
        CHECK(std::abs(ei(-5.0).value + gamma_upper(0.0, 5.0).value) <= 1e-12);
        // principal value with the singularity excised symmetrically
        const double left = oracle::half_line([](double u) { return std::exp(-u) / u; }, 1.0);
        const double middle =
            oracle::finite([](double u) { return 2.0 * std::sinh(u) / u; }, 0.0, 1.0);
        CHECK(std::abs(ei(1.0).value - (middle - left)) <= 1e-10);
        CHECK(std::abs(ei(1.0).value - 1.8951178163559367555) <= 1e-14);
        CHECK_THROWS_AS(ei(0.0), Error);
    }

    TEST_CASE("e_nu examples")
    {
        for (double x : {0.3, 2.0, 15.0}) {
            CHECK(e_nu(1.0, x).value == e1(x).value);
            CHECK(std::abs(e_nu(0.0, x).value - std::exp(-x) / x) <= 1e-15);
        }
        const double quad =
            oracle::half_line([](double t) { return std::exp(-2.0 * t) / std::sqrt(t); }, 1.0);
        CHECK(std::abs(e_nu(0.5, 2.0).value - quad) <= 1e-11);
        CHECK(std::abs(e_nu(0.5, 2.0).value - 0.057026123992892048276) <= 1e-13);
        CHECK_THROWS_AS(e_nu(0.5, 0.0), Error);
    }

    TEST_CASE("laplace_phi")
    {
        CHECK(std::abs(laplace_phi(1.0) - std::log(2.0)) <= 1e-15);
        const double quad =
            oracle::half_line([](double t) { return std::exp(-2.0 * t) * e1(t).value; }, 0.0);
        CHECK(std::abs(laplace_phi(2.0) - quad) <= 1e-8);
        CHECK(laplace_phi(3.7).imag() == 0.0);
        CHECK(std::abs(laplace_phi(1e-12) - 1.0) <= 1e-12);
        CHECK_THROWS_AS(laplace_phi(-1.0), Error);
        CHECK_THROWS_AS(laplace_phi(0.0), Error);
        CHECK_NOTHROW(laplace_phi(ComplexPoint(-1.0, 1e-3)));
    }

    TEST_CASE("laplace_psi")
    {
        CHECK(std::abs(laplace_psi(1.0) - std::log(2.0)) <= 1e-15);
        CHECK(std::abs(laplace_psi(0.5) - 2.0 * std::log(3.0)) <= 1e-15);
        const double quad = oracle::half_line(
            [](double t) { return t == 0.0 ? 1.0 : std::exp(-3.0 * t) * -std::expm1(-t) / t; }, 0.0);
        CHECK(std::abs(3.0 * laplace_psi(3.0) - quad) <= 1e-10);
        try {
            laplace_psi(-2.0);
            FAIL("expected a cut violation");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::CutViolation);
        }
    }

    TEST_CASE("aliases")
    {
        CHECK(phi(2.0).value == e1(2.0).value);
        CHECK(psi(2.0).value == ein(2.0).value);
    }
}
