#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "mlein/ein_generalized.hpp"
#include "mlein/eval_result.hpp"
#include "mlein/exp_integral.hpp"
#include "mlein/special_core.hpp"

using namespace mlein;

namespace {

// u = v^(1/nu) keeps the integrand smooth enough near the origin
double integral_definition(double nu, double t)
{
    return oracle::finite(
        [nu](double v) {
            if (v == 0.0) return nu == 1.0 ? 1.0 : 0.0;
            const double u = std::pow(v, 1.0 / nu);
            return (1.0 - ml_neg_power({nu, 1.0}, u).value) / v * std::pow(v, 1.0 / nu - 1.0) / nu;
        },
        0.0, std::pow(t, nu));
}

}  // namespace

TEST_SUITE("ein_generalized")
{
    TEST_CASE("series terms")
    {
        for (double nu : {0.1, 0.5, 1.0}) {
            double previous_exponent = 0.0;
            for (int n = 1; n <= 20; ++n) {
                const EinSeriesTerm term = ein_series_term(nu, n);
                CHECK(term.exponent > 0.0);
                CHECK(term.exponent > previous_exponent);
                CHECK((term.coefficient > 0.0) == (n % 2 == 1));
                CHECK(std::abs(term.coefficient)
                      == doctest::Approx(1.0 / (term.exponent * std::tgamma(n * nu + 1.0))));
                previous_exponent = term.exponent;
            }
        }
        CHECK_THROWS_AS(ein_series_term(0.0, 1), Error);
        CHECK_THROWS_AS(ein_series_term(0.5, 0), Error);
    }

    TEST_CASE("nu=1 reduces to ein")
    {
        for (int i = 0; i <= 500; ++i) {
            const double t = 0.1 * i;
            CHECK(std::abs(ein_nu(1.0, t).value - ein(t).value) <= 1e-13);
        }
    }

    TEST_CASE("nu=0 branch")
    {
        const EvalResult r = ein_nu(0.0, 4.0);
        CHECK(r.value == 2.0);
        CHECK(r.method == Method::Regularized);
        for (double t : {0.0, 1.0, 4.0, 10.0}) CHECK(ein_nu(0.0, t).value == t / 2.0);
    }

    TEST_CASE("nu=0.5 against its integral definition")
    {
        CHECK(std::abs(ein_nu(0.5, 2.0).value - integral_definition(0.5, 2.0)) <= 1e-9);
        CHECK(std::abs(ein_nu(0.5, 2.0).value - 1.2202559841439257873) <= 1e-13);
    }

    TEST_CASE("series and quadrature on a grid")
    {
        for (double nu : {0.25, 0.4375, 0.625, 0.8125, 1.0}) {
            const EinNu f(nu);
            for (int j = 0; j < 10; ++j) {
                const double t = 0.1 * std::pow(100.0, j / 9.0);
                CHECK(std::abs(f(t).value - integral_definition(nu, t)) <= 1e-8);
            }
        }
    }

    TEST_CASE("shape for nu in (0,1)")
    {
        for (int k = 1; k <= 9; ++k) {
            const double nu = 0.1 * k;
            const EinNu f(nu);
            double previous = 0.0;
            for (int i = 0; i <= 300; ++i) {
                const double v = f(0.25 * i).value;
                CHECK(v >= previous);
                previous = v;
            }
            // Ein_nu(t)/t -> 1/Gamma(1+nu); the gap is bounded by the next series term,
            // which is of size t^nu and so exceeds 1e-4 at t = 1e-6 when nu < 0.7
            for (double t : {1e-6, 1e-12, 1e-40}) {
                const double ratio = f(t).value / t * std::tgamma(1.0 + nu);
                const double next = std::pow(t, nu) * std::tgamma(1.0 + nu)
                                    / ((1.0 + nu) * std::tgamma(1.0 + 2.0 * nu));
                CHECK(std::abs(ratio - 1.0) <= next + 1e-15);
                if (nu >= 0.7) CHECK(std::abs(ratio - 1.0) <= 1e-4);
            }
        }
    }

    TEST_CASE("large t continues the series")
    {
        for (double nu : {0.25, 0.5, 0.75}) {
            const EinNu f(nu);
            const double below = f(39.999).value;
            const double above = f(40.001).value;
            const double slope = f.integrand(40.0).value;
            CHECK(std::abs(above - below - 0.002 * slope) <= 1e-9);
            CHECK(f(200.0).value > f(100.0).value);
        }
    }

    TEST_CASE("small nu approaches the Grandi line")
    {
        const EinNu f(0.05);
        for (int i = 0; i <= 200; ++i) {
            const double t = 0.05 * i;
            CHECK(std::abs(f(t).value - t / 2.0) <= 0.1 * std::max(1.0, t / 2.0));
            if (t >= 0.1) CHECK(std::abs(f(t).value - t / 2.0) <= 0.1 * (t / 2.0));
        }
    }

    TEST_CASE("integrand")
    {
        CHECK(std::abs(ein_nu_integrand(1.0, 1e-12).value - 1.0) <= 1e-11);
        CHECK(ein_nu_integrand(0.5, 0.0).value == doctest::Approx(1.0 / std::tgamma(1.5)));
        const double at1 = ein_nu_integrand(0.75, 1.0).value;
        const double at10 = ein_nu_integrand(0.75, 10.0).value;
        CHECK(at10 > 0.0);
        CHECK(at10 < at1);
        const EinNu f(0.75);
        double previous = f.integrand(0.0).value;
        for (int i = 1; i <= 1000; ++i) {
            const double v = f.integrand(0.01 * i).value;
            CHECK(v > 0.0);
            CHECK(v <= previous);
            previous = v;
        }
        CHECK_THROWS_AS(ein_nu_integrand(0.0, 1.0), Error);
    }

    TEST_CASE("domain")
    {
        CHECK_THROWS_AS(ein_nu(1.5, 1.0), Error);
        CHECK_THROWS_AS(ein_nu(-0.1, 1.0), Error);
        CHECK_THROWS_AS(ein_nu(0.5, -1.0), Error);
        try {
            ein_nu(2.0, 1.0);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidOrder);
        }
    }
}
