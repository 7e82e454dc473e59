#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlein {

/// Default success tolerance of every evaluation. A result is accepted when
/// its error estimate is below `tol * max(1, |value|)`.
inline constexpr double kDefaultTolerance = 1e-12;

enum class Method { TaylorSeries, AsymptoticExpansion, Quadrature, ClosedForm, Regularized };

std::string_view to_string(Method method) noexcept;

/// A computed value together with an absolute-error estimate and the route
/// that produced it.
struct EvalResult {
    double value = 0.0;
    double abs_err_estimate = 0.0;
    int terms_used = 0;
    Method method = Method::ClosedForm;
};

enum class ErrorCode {
    InvalidOrder,
    DomainError,
    NonConvergent,
    CutViolation,
    SeriesDivergent,
    ReducedAccuracy,
    EvaluationFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Throws ReducedAccuracy when `result` does not meet `tol`; returns it
/// unchanged otherwise.
EvalResult require_tolerance(const EvalResult& result, double tol, std::string_view what);

}  // namespace mlein
