#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

#include "oracle.hpp"
#include "mlein/eval_result.hpp"
#include "mlein/special_core.hpp"

using namespace mlein;

TEST_SUITE("special_core")
{
    TEST_CASE("ml_one at zero is one")
    {
        CHECK(ml_one({1.0, 1.0}, 0.0).value == 1.0);
        CHECK(ml_one({0.3, 1.0}, 0.0).value == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("ml_one with nu=1 is the exponential")
    {
        for (double x = -20.0; x <= 5.0; x += 0.25) {
            const double exact = std::exp(x);
            CHECK(std::abs(ml_one({1.0, 1.0}, x).value - exact)
                  <= 1e-13 * std::max(1.0, exact));
        }
    }

    TEST_CASE("ml_one(0.5, -2) against erfc form")
    {
        // e^4 erfc(2), 40 digit reference
        const double ref = 0.25539567631050574387;
        CHECK(std::abs(ml_one({0.5, 1.0}, -2.0).value - ref) <= 1e-10);
        CHECK(std::abs(ml_one({0.5, 1.0}, -2.0).value - std::exp(4.0) * std::erfc(2.0)) <= 1e-10);
    }

    TEST_CASE("ml_one(0.5, -2) against the integral representation")
    {
        // E_{1/2}(-x) = (2/sqrt(pi)) int_0^inf exp(-u^2 - 2 x u) du
        const double integral = oracle::half_line(
            [](double u) { return 2.0 / std::sqrt(M_PI) * std::exp(-u * u - 4.0 * u); }, 0.0);
        CHECK(std::abs(ml_one({0.5, 1.0}, -2.0).value - integral) <= 1e-10);
    }

    TEST_CASE("ml_two basic values")
    {
        CHECK(ml_two({2.0, 1.0}, 0.0).value == doctest::Approx(1.0).epsilon(1e-15));
        for (double z : {-7.0, -1.5, 0.0, 0.5, 3.0}) {
            CHECK(ml_two({1.0, 1.0}, z).value == ml_one({1.0, 1.0}, z).value);
        }
        const double ref = 0.39185512459999274764;  // 300 term series in 40 digits
        CHECK(std::abs(ml_two({1.5, 2.5}, -3.0).value - ref) <= 1e-10);
    }

    TEST_CASE("ml_two against a long double series")
    {
        const double z = -3.0;
        long double sum = 0.0L;
        long double power = 1.0L;
        for (int k = 0; k < 300; ++k) {
            sum += power / std::tgamma(static_cast<long double>(1.5L * k + 2.5L));
            power *= z;
            if (std::abs(power) > 1e300L) break;
        }
        CHECK(std::abs(ml_two({1.5, 2.5}, z).value - static_cast<double>(sum)) <= 1e-10);
    }

    TEST_CASE("two parameter consistency with mu=1")
    {
        for (double nu : {0.2, 0.5, 0.8, 1.3}) {
            for (double z : {-30.0, -4.0, -0.5, 0.7, 2.0}) {
                const double a = ml_two({nu, 1.0}, z).value;
                const double b = ml_one({nu, 1.0}, z).value;
                CHECK(std::abs(a - b) <= 1e-14 * std::abs(b));
            }
        }
    }

    TEST_CASE("ml rejects non-positive orders")
    {
        CHECK_THROWS_AS(ml_one({0.0, 1.0}, 1.0), Error);
        CHECK_THROWS_AS(ml_two({0.5, 0.0}, 1.0), Error);
        try {
            ml_one({-1.0, 1.0}, 1.0);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidOrder);
        }
    }

    TEST_CASE("ml_neg_power examples")
    {
        for (double t : {0.0, 0.1, 1.0, 5.0, 30.0}) {
            CHECK(std::abs(ml_neg_power({1.0, 1.0}, t).value - std::exp(-t)) <= 1e-14);
        }
        CHECK(ml_neg_power({0.5, 1.0}, 0.0).value == 1.0);
        // three leading terms of the large argument expansion of E_nu(-x)
        const double nu = 0.25;
        const double x = std::pow(100.0, nu);
        double approx = 0.0;
        for (int k = 1; k <= 3; ++k) {
            approx += ((k % 2 == 1) ? 1.0 : -1.0) * std::pow(x, -k) / std::tgamma(1.0 - nu * k);
        }
        const double value = ml_neg_power({nu, 1.0}, 100.0).value;
        CHECK(std::abs(value - approx) <= 0.01 * std::abs(approx));
        CHECK_THROWS_AS(ml_neg_power({1.5, 1.0}, 1.0), Error);
    }

    TEST_CASE("ml_neg_power stays in [0,1] and decreases")
    {
        for (double nu : {0.05, 0.25, 0.5, 0.75, 1.0}) {
            double previous = 1.0;
            for (int i = 0; i <= 400; ++i) {
                const double t = 0.25 * i;
                const double v = ml_neg_power({nu, 1.0}, t).value;
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
                CHECK(v <= previous);
                previous = v;
            }
        }
    }

    TEST_CASE("series and asymptotic regimes agree at the switch")
    {
        for (double alpha : {0.25, 0.5, 0.75, 1.0, 1.5}) {
            for (double beta : {1.0, 1.25, 1.75}) {
                const MittagLeffler f(alpha, beta);
                const double z = -std::pow(kMittagLefflerSwitch, alpha);
                const double lo = f.taylor(z).value;
                const double hi = f.asymptotic(z).value;
                CHECK(std::abs(lo - hi) <= 10 * kDefaultTolerance * std::max(1.0, std::abs(lo)));
            }
        }
    }

    TEST_CASE("gamma_upper examples")
    {
        for (double x : {0.1, 1.0, 3.0, 20.0}) {
            CHECK(std::abs(gamma_upper(1.0, x).value - std::exp(-x)) <= 1e-14);
        }
        const double e1_quad =
            oracle::half_line([](double u) { return std::exp(-u) / u; }, 1.0);
        CHECK(std::abs(gamma_upper(0.0, 1.0).value - e1_quad) <= 1e-12);
        CHECK(std::abs(gamma_upper(0.0, 1.0).value - 0.21938393439552027368) <= 1e-12);
        const double half_quad =
            oracle::half_line([](double u) { return std::exp(-u) / std::sqrt(u); }, 2.0);
        CHECK(std::abs(gamma_upper(0.5, 2.0).value - half_quad) <= 1e-12);
        CHECK(std::abs(gamma_upper(0.5, 2.0).value - boost::math::tgamma(0.5, 2.0)) <= 1e-12);
    }

    TEST_CASE("gamma_upper recurrence")
    {
        for (double a : {-0.7, -0.25, 0.3, 1.5, 2.5}) {
            for (double x : {0.2, 1.0, 4.0, 12.0}) {
                const double lhs = gamma_upper(a + 1.0, x).value;
                const double rhs = a * gamma_upper(a, x).value + std::pow(x, a) * std::exp(-x);
                CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(lhs));
            }
        }
    }

    TEST_CASE("gamma_upper domain")
    {
        CHECK_THROWS_AS(gamma_upper(0.5, 0.0), Error);
        CHECK_THROWS_AS(gamma_upper(0.5, -1.0), Error);
    }

    TEST_CASE("rgamma")
    {
        CHECK(rgamma(1.0) == doctest::Approx(1.0));
        CHECK(rgamma(0.0) == 0.0);
        CHECK(rgamma(-2.0) == 0.0);
        CHECK(rgamma(1.5) == doctest::Approx(2.0 / std::sqrt(M_PI)).epsilon(1e-15));
    }
}
