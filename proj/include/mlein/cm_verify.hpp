#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mlein {

enum class GridKind { Linear, Logarithmic };

/// A 1-D grid of `count` points from `start` to `stop`, both included.
struct Grid {
    GridKind kind = GridKind::Linear;
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    static Grid linear(double start, double stop, int count);
    static Grid logarithmic(double start, double stop, int count);

    /// Throws DomainError unless start < stop, count >= 2 and, for
    /// logarithmic grids, start > 0.
    void validate() const;
    std::vector<double> points() const;
};

inline constexpr int kDefaultCMOrder = 8;
inline constexpr int kMaxCMOrder = 10;
/// Violations smaller than this fraction of the local magnitude are ignored.
inline constexpr double kCMTolerance = 1e-9;

struct Violation {
    int order = 0;
    double abscissa = 0.0;
    double value = 0.0;
};

struct CMReport {
    std::string function_id;
    Grid grid;
    int max_order_checked = 0;
    std::vector<Violation> violations;
    bool passed = false;
    /// Largest relative deviation; set by check_reconstruction only.
    double max_relative_error = 0.0;
};

using ScalarFunction = std::function<double(double)>;

/// 200 logarithmic points on [1e-2, 1e2].
Grid default_cm_grid();

/// Complete monotonicity on a grid: (-1)^k times the k-th divided difference
/// must be >= -kCMTolerance * (local magnitude) for k = 0..max_order.
CMReport check_cm(const ScalarFunction& f, const Grid& grid, int max_order = kDefaultCMOrder,
                  const std::string& id = "f");

/// Bernstein type: f >= 0 and f' completely monotone up to `max_order`,
/// checked through divided differences of f of orders 1..max_order+1.
CMReport check_bernstein(const ScalarFunction& f, const Grid& grid,
                         int max_order = kDefaultCMOrder, const std::string& id = "f");

/// Rebuilds psi'_nu(t) = int_0^inf e^{-rt} K_nu(r) dr by quadrature over the
/// spectrum and compares with creep_rate on the grid; passes when the
/// largest relative error is at most `tolerance`.
CMReport check_reconstruction(double nu, const Grid& t_grid, double tolerance = 1e-3);

}  // namespace mlein
