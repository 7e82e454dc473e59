#pragma once

#include <functional>
#include <vector>

namespace mlein::quadrature {

struct Integral {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = false;
};

struct Options {
    double abs_tol = 1e-15;
    double rel_tol = 1e-14;
    int max_subdivisions = 2000;
};

/// Globally adaptive Gauss-Kronrod (10/21-point) integration of `f` on a
/// finite interval. Bisects the interval with the largest error estimate
/// until the combined estimate meets the tolerances.
Integral adaptive(const std::function<double(double)>& f, double a, double b,
                  const Options& options = {});

/// Integrates over [a, b] as a sequence of consecutive panels of width at
/// most `panel`, each handled adaptively. Used for oscillatory integrands
/// whose half period is known.
Integral panelled(const std::function<double(double)>& f, double a, double b, double panel,
                  const Options& options = {});

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], computed by Newton iteration on
/// the Legendre recurrence.
Rule gauss_legendre(int n);

}  // namespace mlein::quadrature
