#include "mlein/eval_result.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mlein {

std::string_view to_string(Method method) noexcept
{
    switch (method) {
        case Method::TaylorSeries: return "TaylorSeries";
        case Method::AsymptoticExpansion: return "AsymptoticExpansion";
        case Method::Quadrature: return "Quadrature";
        case Method::ClosedForm: return "ClosedForm";
        case Method::Regularized: return "Regularized";
    }
    return "Unknown";
}

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::NonConvergent: return "NonConvergent";
        case ErrorCode::CutViolation: return "CutViolation";
        case ErrorCode::SeriesDivergent: return "SeriesDivergent";
        case ErrorCode::ReducedAccuracy: return "ReducedAccuracy";
        case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

EvalResult require_tolerance(const EvalResult& result, double tol, std::string_view what)
{
    if (!std::isfinite(result.value)) {
        throw Error(ErrorCode::DomainError, std::string(what) + " is not representable in double");
    }
    if (result.abs_err_estimate > tol * std::max(1.0, std::abs(result.value))) {
        std::ostringstream msg;
        msg << what << ": error estimate " << result.abs_err_estimate << " exceeds tolerance "
            << tol;
        throw Error(ErrorCode::ReducedAccuracy, msg.str());
    }
    return result;
}

}  // namespace mlein
