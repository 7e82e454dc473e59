#include <cmath>
#include <cstddef>
#include <cstdint>

#include "mlein/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MLEIN_X86 1
#else
#define MLEIN_X86 0
#endif

namespace mlein::kernels::avx2 {

#if MLEIN_X86

#define MLEIN_AVX2 __attribute__((target("avx2,fma")))

namespace {

// exp(x) for x <= 0: x = n ln2 + r with |r| <= ln2/2, e^r by its Taylor
// polynomial to degree 13, 2^n assembled in the exponent field. Inputs below
// -708 flush to zero.
MLEIN_AVX2 inline __m256d exp_nonpositive(__m256d x)
{
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634);
    const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d floor_limit = _mm256_set1_pd(-708.0);

    const __m256d underflow = _mm256_cmp_pd(x, floor_limit, _CMP_LT_OQ);
    x = _mm256_max_pd(x, floor_limit);
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    static constexpr double inverse_factorials[] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
        1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
        1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        1.0 / 2.0,
        1.0,                1.0,
    };
    __m256d p = _mm256_set1_pd(inverse_factorials[0]);
    for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inverse_factorials[i]));

    const __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i bits = _mm256_cvtepi32_epi64(n32);
    bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
    bits = _mm256_slli_epi64(bits, 52);
    const __m256d scale = _mm256_castsi256_pd(bits);
    return _mm256_andnot_pd(underflow, _mm256_mul_pd(p, scale));
}

MLEIN_AVX2 inline double horizontal_sum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

bool supported() noexcept
{
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

MLEIN_AVX2 double laplace_sum(std::span<const double> nodes, std::span<const double> weights,
                              double t)
{
    const std::size_t n = nodes.size();
    const __m256d minus_t = _mm256_set1_pd(-t);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_loadu_pd(nodes.data() + i);
        const __m256d w = _mm256_loadu_pd(weights.data() + i);
        acc = _mm256_fmadd_pd(w, exp_nonpositive(_mm256_mul_pd(r, minus_t)), acc);
    }
    double sum = horizontal_sum(acc);
    for (; i < n; ++i) sum += weights[i] * std::exp(-nodes[i] * t);
    return sum;
}

MLEIN_AVX2 void divided_difference_step(std::span<const double> previous,
                                        std::span<const double> x, int order,
                                        std::span<double> out)
{
    const std::size_t n = previous.empty() ? 0 : previous.size() - 1;
    const auto k = static_cast<std::size_t>(order);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(previous.data() + i);
        const __m256d b = _mm256_loadu_pd(previous.data() + i + 1);
        const __m256d width =
            _mm256_sub_pd(_mm256_loadu_pd(x.data() + i + k), _mm256_loadu_pd(x.data() + i));
        _mm256_storeu_pd(out.data() + i, _mm256_div_pd(_mm256_sub_pd(b, a), width));
    }
    for (; i < n; ++i) out[i] = (previous[i + 1] - previous[i]) / (x[i + k] - x[i]);
}

MLEIN_AVX2 void divided_scale_step(std::span<const double> previous, std::span<const double> x,
                                   int order, std::span<double> out)
{
    const std::size_t n = previous.empty() ? 0 : previous.size() - 1;
    const auto k = static_cast<std::size_t>(order);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(previous.data() + i);
        const __m256d b = _mm256_loadu_pd(previous.data() + i + 1);
        const __m256d width =
            _mm256_sub_pd(_mm256_loadu_pd(x.data() + i + k), _mm256_loadu_pd(x.data() + i));
        _mm256_storeu_pd(out.data() + i, _mm256_div_pd(_mm256_add_pd(b, a), width));
    }
    for (; i < n; ++i) out[i] = (previous[i + 1] + previous[i]) / (x[i + k] - x[i]);
}

#else

bool supported() noexcept { return false; }

double laplace_sum(std::span<const double> nodes, std::span<const double> weights, double t)
{
    return scalar::laplace_sum(nodes, weights, t);
}

void divided_difference_step(std::span<const double> previous, std::span<const double> x,
                             int order, std::span<double> out)
{
    scalar::divided_difference_step(previous, x, order, out);
}

void divided_scale_step(std::span<const double> previous, std::span<const double> x, int order,
                        std::span<double> out)
{
    scalar::divided_scale_step(previous, x, order, out);
}

#endif

}  // namespace mlein::kernels::avx2
