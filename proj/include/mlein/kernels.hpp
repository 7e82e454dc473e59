#pragma once

// Hot loops shared by the verification harness. Each kernel has a scalar
// reference and an AVX2 variant; the unqualified entry points pick one at
// runtime from the host CPU.

#include <span>
#include <string_view>

namespace mlein::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Instruction set the dispatching entry points use on this host.
Isa active_isa() noexcept;

/// sum_i weights[i] exp(-nodes[i] t). Nodes must be >= 0.
double laplace_sum(std::span<const double> nodes, std::span<const double> weights, double t);

/// out[i] = (previous[i+1] - previous[i]) / (x[i+order] - x[i]); out has
/// previous.size() - 1 entries.
void divided_difference_step(std::span<const double> previous, std::span<const double> x,
                             int order, std::span<double> out);

/// Same recursion on magnitudes: out[i] = (previous[i+1] + previous[i]) / (x[i+order] - x[i]).
void divided_scale_step(std::span<const double> previous, std::span<const double> x, int order,
                        std::span<double> out);

namespace scalar {
double laplace_sum(std::span<const double> nodes, std::span<const double> weights, double t);
void divided_difference_step(std::span<const double> previous, std::span<const double> x,
                             int order, std::span<double> out);
void divided_scale_step(std::span<const double> previous, std::span<const double> x, int order,
                        std::span<double> out);
}  // namespace scalar

namespace avx2 {
/// True when the host can run this namespace.
bool supported() noexcept;
double laplace_sum(std::span<const double> nodes, std::span<const double> weights, double t);
void divided_difference_step(std::span<const double> previous, std::span<const double> x,
                             int order, std::span<double> out);
void divided_scale_step(std::span<const double> previous, std::span<const double> x, int order,
                        std::span<double> out);
}  // namespace avx2

}  // namespace mlein::kernels
