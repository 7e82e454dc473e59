#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mlein/ein_generalized.hpp"
#include "mlein/eval_result.hpp"
#include "mlein/special_core.hpp"

namespace mlein {

/// psi_nu(t) = Gamma(1 + nu) Ein_nu(t), nu in [0, 1]; psi_0(t) = t/2.
EvalResult creep_psi(double nu, double t, double tol = kDefaultTolerance);

/// psi'_nu(t) = Gamma(1 + nu) (1 - E_nu(-t^nu))/t^nu, nu in (0, 1]; equals 1 at t = 0.
EvalResult creep_rate(double nu, double t, double tol = kDefaultTolerance);

/// Laplace transform of psi_nu by its descending power series in s, s > 1.05.
EvalResult laplace_psi_series(double nu, double s, double tol = kDefaultTolerance);

/// Laplace transform of psi'_nu by its descending power series in s, s > 1.05.
EvalResult laplace_rate_series(double nu, double s, double tol = kDefaultTolerance);

/// Frequency spectrum K_nu(r) >= 0 of the rate of creep, psi'(t) = int e^{-rt} K(r) dr.
EvalResult spectrum_frequency(double nu, double r, double tol = kDefaultTolerance);

/// Time spectrum H_nu(tau) = K_nu(1/tau)/tau^2.
EvalResult spectrum_time(double nu, double tau, double tol = kDefaultTolerance);

/// int_0^r0 e^{-rt} K_nu(r) dr for r0 inside the ascending-series region
/// (r0^nu <= 0.85, r0 t <= 0.05), integrated term by term.
EvalResult spectrum_low_frequency_integral(double nu, double r0, double t);

/// Convergence ratio at which the spectrum switches from a power series to
/// the convolution integral.
inline constexpr double kSpectrumSeriesRatio = 0.85;

struct CreepSample {
    double t = 0.0;
    double psi = 0.0;
    double psi_rate = 0.0;
};

enum class SpectrumKind { Frequency, Time };

struct SpectrumPoint {
    double abscissa = 0.0;
    double density = 0.0;
};

struct SpectrumTable {
    SpectrumKind kind = SpectrumKind::Frequency;
    double nu = 1.0;
    std::vector<SpectrumPoint> points;
    double min_density = 0.0;
    /// Every density >= -1e-9.
    bool non_negative = true;
};

/// Evaluator of the generalized Becker model at a fixed order. Series
/// tables are built once; the spectrum representations are checked for
/// agreement at their seams on construction. Immutable.
class BeckerModel {
public:
    explicit BeckerModel(double nu);

    EvalResult psi(double t, double tol = kDefaultTolerance) const;
    /// At nu = 0 this is the derivative 1/2 of the regularized creep t/2.
    EvalResult rate(double t, double tol = kDefaultTolerance) const;
    EvalResult spectrum_frequency(double r, double tol = kDefaultTolerance) const;
    EvalResult spectrum_time(double tau, double tol = kDefaultTolerance) const;

    double nu() const noexcept { return nu_; }

private:
    struct Spectrum;
    double nu_;
    EinNu ein_;
    std::optional<MittagLeffler> rate_;
    std::shared_ptr<const Spectrum> spectrum_;
};

std::vector<CreepSample> creep_table(double nu, const std::vector<double>& times,
                                     double tol = kDefaultTolerance);

SpectrumTable spectrum_table(double nu, SpectrumKind kind, const std::vector<double>& abscissae,
                             double tol = kDefaultTolerance);

}  // namespace mlein
