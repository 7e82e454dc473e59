#pragma once

// Independent reference integrators for the unit tests.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>

namespace oracle {

inline double finite(const std::function<double(double)>& f, double a, double b)
{
    boost::math::quadrature::tanh_sinh<double> rule;
    return rule.integrate(f, a, b, 1e-15);
}

inline double kronrod(const std::function<double(double)>& f, double a, double b)
{
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

// One 61 point Kronrod rule, no refinement.
inline double fixed(const std::function<double(double)>& f, double a, double b)
{
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 0, 0.0);
}

inline double half_line(const std::function<double(double)>& f, double a)
{
    boost::math::quadrature::exp_sinh<double> rule;
    return rule.integrate([&](double u) { return f(a + u); }, 0.0,
                          std::numeric_limits<double>::infinity(), 1e-14);
}

// Sums tanh-sinh panels of width step between a and b; tolerates algebraic
// endpoint behaviour such as u^nu at the origin.
inline double panels(const std::function<double(double)>& f, double a, double b, double step)
{
    double sum = 0.0;
    for (double x = a; x < b; x += step) sum += finite(f, x, std::min(b, x + step));
    return sum;
}

}  // namespace oracle
