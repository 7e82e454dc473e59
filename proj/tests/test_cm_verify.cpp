#include <doctest.h>

#include <cmath>

#include "mlein/becker.hpp"
#include "mlein/cm_verify.hpp"
#include "mlein/eval_result.hpp"
#include "mlein/exp_integral.hpp"

using namespace mlein;

TEST_SUITE("cm_verify")
{
    TEST_CASE("grids")
    {
        const Grid lin = Grid::linear(0.0, 10.0, 201);
        const std::vector<double> x = lin.points();
        CHECK(x.size() == 201);
        CHECK(x.front() == 0.0);
        CHECK(x.back() == 10.0);
        CHECK(x[100] == 5.0);
        const std::vector<double> r = Grid::logarithmic(1e-2, 1e2, 201).points();
        CHECK(r[100] == 1.0);
        CHECK(r[50] == doctest::Approx(0.1).epsilon(1e-15));
        CHECK_THROWS_AS(Grid::linear(1.0, 1.0, 5), Error);
        CHECK_THROWS_AS(Grid::linear(0.0, 1.0, 1), Error);
        CHECK_THROWS_AS(Grid::logarithmic(0.0, 1.0, 5), Error);
    }

    TEST_CASE("completely monotone examples")
    {
        const Grid grid = Grid::logarithmic(0.01, 100.0, 200);
        CHECK(check_cm([](double t) { return std::exp(-t); }, grid, 8).passed);
        CHECK(check_cm([](double t) { return -std::expm1(-t) / t; }, grid, 8).passed);
        const CMReport bad =
            check_cm([](double t) { return std::sin(t) + 2.0; }, Grid::linear(0.0, 10.0, 200), 4);
        CHECK_FALSE(bad.passed);
        CHECK_FALSE(bad.violations.empty());
    }

    TEST_CASE("Bernstein examples")
    {
        const Grid grid = default_cm_grid();
        CHECK(check_bernstein([](double t) { return ein(t).value; }, grid).passed);
        CHECK(check_bernstein([](double t) { return creep_psi(0.5, t).value; }, grid).passed);
        const CMReport square =
            check_bernstein([](double t) { return t * t; }, Grid::linear(0.0, 10.0, 200));
        CHECK_FALSE(square.passed);
        bool derivative_increasing = false;
        for (const Violation& v : square.violations) derivative_increasing = derivative_increasing || v.order == 2;
        CHECK(derivative_increasing);
    }

    TEST_CASE("creep functions")
    {
        for (double nu : {0.25, 0.5, 0.75, 1.0}) {
            const BeckerModel model(nu);
            CHECK(check_cm([&](double t) { return model.rate(t).value; }, default_cm_grid()).passed);
            CHECK(check_bernstein([&](double t) { return model.psi(t).value; }, default_cm_grid())
                      .passed);
        }
    }

    TEST_CASE("order monotone")
    {
        auto f = [](double t) { return std::exp(-t) + 1e-3 * std::sin(3 * t); };
        const Grid grid = Grid::linear(0.0, 10.0, 120);
        int first_failure = -1;
        for (int k = 0; k <= kMaxCMOrder; ++k) {
            const bool passed = check_cm(f, grid, k).passed;
            if (!passed && first_failure < 0) first_failure = k;
            if (first_failure >= 0) CHECK_FALSE(passed);
        }
        CHECK(first_failure >= 0);
    }

    TEST_CASE("grid refinement keeps a pass")
    {
        for (int count : {100, 200, 400}) {
            const BeckerModel model(0.5);
            CHECK(check_cm([&](double t) { return model.rate(t).value; },
                           Grid::logarithmic(1e-2, 1e2, count))
                      .passed);
        }
    }

    TEST_CASE("errors")
    {
        const Grid grid = default_cm_grid();
        CHECK_THROWS_AS(check_cm([](double) { return 1.0; }, grid, 11), Error);
        try {
            check_cm([](double t) -> double { if (t > 1) throw std::runtime_error("boom"); return 1; },
                     grid);
            FAIL("expected failure");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EvaluationFailure);
        }
        CHECK_THROWS_AS(check_cm([](double) { return NAN; }, grid), Error);
        CHECK_THROWS_AS(check_reconstruction(0.0, Grid::logarithmic(0.1, 10, 5)), Error);
        CHECK_THROWS_AS(check_reconstruction(0.5, Grid::linear(0.0, 10, 5)), Error);
    }

    TEST_CASE("reconstruction")
    {
        const CMReport box = check_reconstruction(1.0, Grid::logarithmic(0.1, 10.0, 21), 1e-9);
        CHECK(box.passed);
        CHECK(check_reconstruction(0.5, Grid::linear(0.1, 10.0, 50)).passed);
        const CMReport one = check_reconstruction(0.25, Grid::linear(1.0, 2.0, 2));
        CHECK(one.passed);
        CHECK(one.max_relative_error <= 1e-3);
    }
}
