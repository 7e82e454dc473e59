#pragma once

// Quad-precision helpers. Series with alternating terms that grow like
// e^X before cancelling are summed in binary128 so that double-precision
// results survive up to X = 40.

#include <quadmath.h>

#include <cmath>

namespace mlein::detail {

using quad = __float128;

inline constexpr quad kQuadEpsilon = FLT128_EPSILON;
inline constexpr quad kQuadEulerGamma = 0.577215664901532860606512090082402431Q;

inline double to_double(quad x) { return static_cast<double>(x); }
inline quad qabs(quad x) { return x < 0 ? -x : x; }

/// 1/Gamma(y) for y > 0.
inline quad inv_gamma_q(quad y)
{
    if (y > 1000) return expq(-lgammaq(y));
    return 1 / tgammaq(y);
}

}  // namespace mlein::detail
