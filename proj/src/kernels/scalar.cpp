#include <cmath>
#include <cstddef>

#include "mlein/kernels.hpp"

namespace mlein::kernels::scalar {

double laplace_sum(std::span<const double> nodes, std::span<const double> weights, double t)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * std::exp(-nodes[i] * t);
    return sum;
}

void divided_difference_step(std::span<const double> previous, std::span<const double> x,
                             int order, std::span<double> out)
{
    const auto k = static_cast<std::size_t>(order);
    for (std::size_t i = 0; i + 1 < previous.size(); ++i)
        out[i] = (previous[i + 1] - previous[i]) / (x[i + k] - x[i]);
}

void divided_scale_step(std::span<const double> previous, std::span<const double> x, int order,
                        std::span<double> out)
{
    const auto k = static_cast<std::size_t>(order);
    for (std::size_t i = 0; i + 1 < previous.size(); ++i)
        out[i] = (previous[i + 1] + previous[i]) / (x[i + k] - x[i]);
}

}  // namespace mlein::kernels::scalar
