// AVX2+FMA variant of the inner Lifshitz kernel.  Compiled with -mavx2 -mfma
// in its own translation unit; reached only through the runtime dispatcher.

#include <immintrin.h>

#include <cmath>

#include "casimir/kernels.hpp"

namespace casimir::kernels {

namespace {

// ---------------------------------------------------------------- vector log
// ln(v) for normal positive doubles: split v = m 2^e with m in [sqrt2/2,
// sqrt2), then ln(m) = 2 atanh(r), r = (m-1)/(m+1), via the odd series up to
// r^19 (|r| <= 0.1716 so the truncation sits below 1 ulp).

inline __m256d vlog(__m256d v) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
    const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
    const __m256i exp_one = _mm256_set1_epi64x(0x3ff0000000000000LL);

    __m256i bits = _mm256_castpd_si256(v);
    __m256i expi = _mm256_srli_epi64(bits, 52);  // biased exponent, 0..2046

    // mantissa remapped to [1, 2)
    __m256d m =
        _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), exp_one));

    // biased exponent to double: dwords 0,2,4,6 hold the 11-bit values
    const __m256i pick = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
    __m128i exp32 = _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(expi, pick));
    __m256d e = _mm256_sub_pd(_mm256_cvtepi32_pd(exp32), _mm256_set1_pd(1023.0));

    // fold m in [sqrt2, 2) down an octave
    __m256d big = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, half), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, one));

    __m256d r = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    __m256d r2 = _mm256_mul_pd(r, r);

    __m256d p = _mm256_set1_pd(1.0 / 19.0);
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 17.0));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0 / 3.0));
    p = _mm256_fmadd_pd(p, r2, one);
    __m256d atanh2 = _mm256_mul_pd(_mm256_add_pd(r, r), p);  // 2 atanh(r)

    // e ln2 in two parts keeps the tail bits
    const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
    const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
    return _mm256_add_pd(_mm256_fmadd_pd(e, ln2_hi, atanh2), _mm256_mul_pd(e, ln2_lo));
}

// log1p(-x) for x in [0, 1): v = 1 - x rounds, so scale ln(v) by -x/(v - 1)
// (exact when v - 1 == -x; recovers the small-x limit when v rounds to 1).
inline __m256d vlog1m(__m256d x) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d v = _mm256_sub_pd(one, x);
    __m256d d = _mm256_sub_pd(v, one);  // exact for v in (0, 1]
    __m256d lv = vlog(v);
    __m256d nx = _mm256_sub_pd(_mm256_setzero_pd(), x);
    __m256d corrected = _mm256_div_pd(_mm256_mul_pd(lv, nx), d);
    __m256d d_zero = _mm256_cmp_pd(d, _mm256_setzero_pd(), _CMP_EQ_OQ);
    return _mm256_blendv_pd(corrected, nx, d_zero);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

}  // namespace

InnerSums inner_sums_avx2(const InnerGrid& grid, const InnerParams& p) {
    const size_t n = grid.size();
    const size_t n4 = n & ~size_t(3);

    const __m256d tau = _mm256_set1_pd(p.tau);
    const __m256d exp_tau = _mm256_set1_pd(p.exp_tau);
    const __m256d half_hcl = _mm256_set1_pd(p.half_hcl);
    const __m256d xi2 = _mm256_set1_pd(p.xi2);
    const __m256d ca = _mm256_set1_pd(p.ca);
    const __m256d cb = _mm256_set1_pd(p.cb);
    const __m256d da = _mm256_set1_pd(p.da);
    const __m256d db = _mm256_set1_pd(p.db);
    const __m256d cacb = _mm256_set1_pd(p.ca * p.cb);
    const __m256d dadb = _mm256_set1_pd(p.da * p.db);
    const __m256d da2 = _mm256_set1_pd(p.da + 2.0);
    const __m256d db2 = _mm256_set1_pd(p.db + 2.0);
    const __m256d one = _mm256_set1_pd(1.0);

    __m256d acc_e = _mm256_setzero_pd();
    __m256d acc_f = _mm256_setzero_pd();

    for (size_t j = 0; j < n4; j += 4) {
        const __m256d sigma = _mm256_loadu_pd(&grid.sigma[j]);
        const __m256d y = _mm256_add_pd(tau, sigma);
        const __m256d q = _mm256_mul_pd(exp_tau, _mm256_loadu_pd(&grid.exp_sigma[j]));

        __m256d x_te, x_tm;
        if (p.perfect) {
            x_te = q;
            x_tm = q;
        } else {
            const __m256d kappa = _mm256_mul_pd(half_hcl, y);
            const __m256d k2 = _mm256_mul_pd(kappa, kappa);
            const __m256d kam = _mm256_sqrt_pd(_mm256_add_pd(k2, ca));
            const __m256d kbm = _mm256_sqrt_pd(_mm256_add_pd(k2, cb));
            const __m256d sa = _mm256_add_pd(kappa, kam);
            const __m256d sb = _mm256_add_pd(kappa, kbm);
            const __m256d rte_den =
                _mm256_mul_pd(_mm256_mul_pd(sa, sa), _mm256_mul_pd(sb, sb));
            const __m256d ta =
                _mm256_add_pd(_mm256_add_pd(kappa, _mm256_mul_pd(da, kappa)), kam);
            const __m256d tb =
                _mm256_add_pd(_mm256_add_pd(kappa, _mm256_mul_pd(db, kappa)), kbm);
            const __m256d rtm_num = _mm256_mul_pd(
                dadb, _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(k2, da2), xi2),
                                    _mm256_sub_pd(_mm256_mul_pd(k2, db2), xi2)));
            const __m256d rtm_den =
                _mm256_mul_pd(_mm256_mul_pd(ta, ta), _mm256_mul_pd(tb, tb));
            x_te = _mm256_mul_pd(_mm256_div_pd(cacb, rte_den), q);
            x_tm = _mm256_mul_pd(_mm256_div_pd(rtm_num, rtm_den), q);
        }

        const __m256d fe = _mm256_add_pd(vlog1m(x_te), vlog1m(x_tm));
        const __m256d gf =
            _mm256_add_pd(_mm256_div_pd(x_te, _mm256_sub_pd(one, x_te)),
                          _mm256_div_pd(x_tm, _mm256_sub_pd(one, x_tm)));

        const __m256d wy = _mm256_mul_pd(_mm256_loadu_pd(&grid.wmap[j]), y);
        acc_e = _mm256_fmadd_pd(wy, fe, acc_e);
        acc_f = _mm256_fmadd_pd(_mm256_mul_pd(wy, y), gf, acc_f);
    }

    InnerSums sums{hsum(acc_e), hsum(acc_f)};

    // remainder lanes, scalar (same conjugate forms as the vector body)
    for (size_t j = n4; j < n; ++j) {
        const double y = p.tau + grid.sigma[j];
        const double q = p.exp_tau * grid.exp_sigma[j];
        double x_te, x_tm;
        if (p.perfect) {
            x_te = q;
            x_tm = q;
        } else {
            const double kappa = p.half_hcl * y;
            const double k2 = kappa * kappa;
            const double ka = std::sqrt(k2 + p.ca);
            const double kb = std::sqrt(k2 + p.cb);
            const double sa = kappa + ka, sb = kappa + kb;
            const double ta = kappa + p.da * kappa + ka;
            const double tb = kappa + p.db * kappa + kb;
            x_te = (p.ca * p.cb) / (sa * sa * sb * sb) * q;
            x_tm = p.da * p.db * (k2 * (p.da + 2.0) - p.xi2) *
                   (k2 * (p.db + 2.0) - p.xi2) / (ta * ta * tb * tb) * q;
        }
        sums.energy += grid.wmap[j] * y * (std::log1p(-x_te) + std::log1p(-x_tm));
        sums.force +=
            grid.wmap[j] * y * y * (x_te / (1.0 - x_te) + x_tm / (1.0 - x_tm));
    }
    return sums;
}

namespace detail {

void log1m_block_avx2(const double* x, double* out, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(&out[i], vlog1m(_mm256_loadu_pd(&x[i])));
    for (; i < n; ++i) out[i] = std::log1p(-x[i]);
}

}  // namespace detail

}  // namespace casimir::kernels
