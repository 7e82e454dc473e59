#include "mlein/kernels.hpp"

namespace mlein::kernels {

namespace {

struct Table {
    Isa isa;
    double (*laplace_sum)(std::span<const double>, std::span<const double>, double);
    void (*difference)(std::span<const double>, std::span<const double>, int, std::span<double>);
    void (*scale)(std::span<const double>, std::span<const double>, int, std::span<double>);
};

const Table& table()
{
    static const Table selected = avx2::supported()
                                      ? Table{Isa::Avx2, avx2::laplace_sum,
                                              avx2::divided_difference_step,
                                              avx2::divided_scale_step}
                                      : Table{Isa::Scalar, scalar::laplace_sum,
                                              scalar::divided_difference_step,
                                              scalar::divided_scale_step};
    return selected;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept
{
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

Isa active_isa() noexcept { return table().isa; }

double laplace_sum(std::span<const double> nodes, std::span<const double> weights, double t)
{
    return table().laplace_sum(nodes, weights, t);
}

void divided_difference_step(std::span<const double> previous, std::span<const double> x,
                             int order, std::span<double> out)
{
    table().difference(previous, x, order, out);
}

void divided_scale_step(std::span<const double> previous, std::span<const double> x, int order,
                        std::span<double> out)
{
    table().scale(previous, x, order, out);
}

}  // namespace mlein::kernels
