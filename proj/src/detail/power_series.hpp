#pragma once

#include <cstddef>
#include <vector>

#include "detail/quad.hpp"
#include "mlein/eval_result.hpp"

namespace mlein::detail {

struct SeriesSum {
    quad value = 0;
    double abs_err = 0.0;
    int terms = 0;
    bool converged = false;
};

// Hard cap on tabulated coefficients. The switch radius keeps real use well
// below it for orders down to about 0.02.
inline constexpr int kMaxSeriesTerms = 20000;

/// Positive coefficients c_k of sum_k (+-1)^k c_k y^k, tabulated in quad
/// precision for all y up to a bound.
class CoefficientSeries {
public:
    CoefficientSeries() = default;

    /// Tabulates c_0, c_1, ... until the terms at `y_max` are past their peak
    /// and below 1e-30.
    template <class Coefficient>
    static CoefficientSeries build(Coefficient&& coefficient, quad y_max)
    {
        CoefficientSeries series;
        quad power = 1;
        quad previous = 0;
        for (int k = 0; k < kMaxSeriesTerms; ++k) {
            const quad c = coefficient(k);
            series.c_.push_back(c);
            const quad magnitude = c * power;
            if (k > 0 && magnitude < previous && magnitude < 1e-30Q) return series;
            previous = magnitude;
            power *= y_max;
            if (y_max == 0) return series;
        }
        throw Error(ErrorCode::NonConvergent,
                    "series needs more than the coefficient cap at the requested argument");
    }

    /// Sums the series at y >= 0, alternating or all-positive.
    SeriesSum sum(quad y, bool alternating) const
    {
        SeriesSum out;
        quad power = 1;
        quad abs_sum = 0;
        quad previous = 0;
        quad last = 0;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const quad term = c_[k] * power;
            out.value += (alternating && (k & 1)) ? -term : term;
            abs_sum += term;
            last = term;
            out.terms = static_cast<int>(k) + 1;
            if (k > 0 && term < previous && term <= 1e-25Q + 1e-23Q * qabs(out.value)) {
                out.converged = true;
                break;
            }
            if (y == 0) {
                out.converged = true;
                break;
            }
            previous = term;
            power *= y;
        }
        out.abs_err = to_double(last + 64 * kQuadEpsilon * abs_sum);
        return out;
    }

    std::size_t size() const noexcept { return c_.size(); }

private:
    std::vector<quad> c_;
};

}  // namespace mlein::detail
