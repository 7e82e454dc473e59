#pragma once

// Large-argument expansion of E_{alpha,beta}(z) on the real axis:
//   E(z) = (1/alpha) sum_j s_j^(1-beta) e^(s_j) - sum_k z^-k / Gamma(beta - alpha k)
// with s_j the poles z^(1/alpha) e^(2 pi i j / alpha) inside |arg s| < pi.

namespace mlein::detail {

struct MlExpansion {
    double residues = 0.0;
    double algebraic = 0.0;
    double algebraic_abs = 0.0;
    double truncation = 0.0;
    int terms = 0;
};

MlExpansion ml_expansion(double alpha, double beta, double z);

/// Exponential part of the expansion alone.
double ml_residues(double alpha, double beta, double z);

/// True when some pole lies strictly inside the principal sheet for this sign
/// of z.
bool ml_has_residues(double alpha, bool negative);

struct TailIntegral {
    double value = 0.0;
    double abs_err = 0.0;
    int evaluations = 0;
};

/// Integral over [a, b] of u^gamma E_{alpha,beta}(-u^alpha), for a at or above
/// the switch radius. The algebraic part is integrated term by term; the
/// residue part by panelled quadrature.
TailIntegral ml_tail_integral(double alpha, double beta, double gamma, double a, double b);

}  // namespace mlein::detail
