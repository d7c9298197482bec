// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; the dispatcher only installs it after a cpuid check.
//
// Reductions widen f32 lanes to f64 before accumulating, matching the scalar
// reference's precision contract. Horizontal sums use a fixed lane order so a
// given input always produces the same result. Elementwise kernels avoid FMA
// contraction on purpose: they must be bit-identical to the scalar reference.

#if defined(__x86_64__) || defined(_M_X64)

#include <cmath>
#include <immintrin.h>

#include "allcnn/kernels.hpp"

namespace allcnn::kernels {

namespace {

inline double hsum4(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return ((lane[0] + lane[1]) + lane[2]) + lane[3];
}

double dot_avx2(const float* a, const float* b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        acc0 = _mm256_fmadd_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va)),
                               _mm256_cvtps_pd(_mm256_castps256_ps128(vb)), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va, 1)),
                               _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1)), acc1);
    }
    double s = hsum4(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return s;
}

double sum_avx2(const float* x, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 v = _mm256_loadu_ps(x + i);
        acc0 = _mm256_add_pd(acc0, _mm256_cvtps_pd(_mm256_castps256_ps128(v)));
        acc1 = _mm256_add_pd(acc1, _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1)));
    }
    double s = hsum4(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += static_cast<double>(x[i]);
    return s;
}

double l2sq_avx2(const float* a, const float* b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        __m256d lo = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(va)),
                                   _mm256_cvtps_pd(_mm256_castps256_ps128(vb)));
        __m256d hi = _mm256_sub_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(va, 1)),
                                   _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1)));
        acc0 = _mm256_fmadd_pd(lo, lo, acc0);
        acc1 = _mm256_fmadd_pd(hi, hi, acc1);
    }
    double s = hsum4(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        s += d * d;
    }
    return s;
}

uint64_t ssd_u8_avx2(const uint8_t* a, const uint8_t* b, size_t n) {
    __m256i acc = _mm256_setzero_si256(); // 8 x u32 partial sums
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
        __m256i vb = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
        __m256i d = _mm256_sub_epi16(va, vb);
        acc = _mm256_add_epi32(acc, _mm256_madd_epi16(d, d));
    }
    alignas(32) uint32_t lane[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane), acc);
    uint64_t s = 0;
    for (uint32_t v : lane) s += v;
    for (; i < n; ++i) {
        int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
        s += static_cast<uint64_t>(d * d);
    }
    return s;
}

void add_avx2(const float* a, const float* b, float* o, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(o + i, _mm256_add_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    for (; i < n; ++i) o[i] = a[i] + b[i];
}

void sub_avx2(const float* a, const float* b, float* o, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(o + i, _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    for (; i < n; ++i) o[i] = a[i] - b[i];
}

void mul_avx2(const float* a, const float* b, float* o, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(o + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i)));
    for (; i < n; ++i) o[i] = a[i] * b[i];
}

void scale_avx2(const float* a, float s, float* o, size_t n) {
    const __m256 vs = _mm256_set1_ps(s);
    size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(o + i, _mm256_mul_ps(_mm256_loadu_ps(a + i), vs));
    for (; i < n; ++i) o[i] = a[i] * s;
}

void axpy_acc_avx2(double* y, float a, const float* x, size_t n) {
    const __m256d va = _mm256_set1_pd(static_cast<double>(a));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vx = _mm256_loadu_ps(x + i);
        __m256d lo = _mm256_cvtps_pd(_mm256_castps256_ps128(vx));
        __m256d hi = _mm256_cvtps_pd(_mm256_extractf128_ps(vx, 1));
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, lo, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(va, hi, _mm256_loadu_pd(y + i + 4)));
    }
    const double ad = static_cast<double>(a);
    for (; i < n; ++i) y[i] += ad * static_cast<double>(x[i]);
}

void add_acc_avx2(double* y, const float* x, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vx = _mm256_loadu_ps(x + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i),
                                              _mm256_cvtps_pd(_mm256_castps256_ps128(vx))));
        _mm256_storeu_pd(y + i + 4, _mm256_add_pd(_mm256_loadu_pd(y + i + 4),
                                                  _mm256_cvtps_pd(_mm256_extractf128_ps(vx, 1))));
    }
    for (; i < n; ++i) y[i] += static_cast<double>(x[i]);
}

void sq_acc_avx2(double* y, const float* x, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vx = _mm256_loadu_ps(x + i);
        __m256d lo = _mm256_cvtps_pd(_mm256_castps256_ps128(vx));
        __m256d hi = _mm256_cvtps_pd(_mm256_extractf128_ps(vx, 1));
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(lo, lo, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(hi, hi, _mm256_loadu_pd(y + i + 4)));
    }
    for (; i < n; ++i) {
        double v = static_cast<double>(x[i]);
        y[i] += v * v;
    }
}

void fma_acc_avx2(double* y, const float* a, const float* b, size_t n) {
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 va = _mm256_loadu_ps(a + i);
        __m256 vb = _mm256_loadu_ps(b + i);
        __m256d alo = _mm256_cvtps_pd(_mm256_castps256_ps128(va));
        __m256d ahi = _mm256_cvtps_pd(_mm256_extractf128_ps(va, 1));
        __m256d blo = _mm256_cvtps_pd(_mm256_castps256_ps128(vb));
        __m256d bhi = _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1));
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(alo, blo, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(ahi, bhi, _mm256_loadu_pd(y + i + 4)));
    }
    for (; i < n; ++i) y[i] += static_cast<double>(a[i]) * static_cast<double>(b[i]);
}

void relu_avx2(const float* x, float* o, size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(o + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
    for (; i < n; ++i) o[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_bwd_avx2(const float* x, const float* g, float* o, size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(x + i), zero, _CMP_GT_OQ);
        _mm256_storeu_ps(o + i, _mm256_and_ps(mask, _mm256_loadu_ps(g + i)));
    }
    for (; i < n; ++i) o[i] = x[i] > 0.0f ? g[i] : 0.0f;
}

void relu6_avx2(const float* x, float* o, size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    const __m256 six = _mm256_set1_ps(6.0f);
    size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(o + i, _mm256_min_ps(_mm256_max_ps(_mm256_loadu_ps(x + i), zero), six));
    for (; i < n; ++i) {
        float v = x[i] > 0.0f ? x[i] : 0.0f;
        o[i] = v < 6.0f ? v : 6.0f;
    }
}

void relu6_bwd_avx2(const float* x, const float* g, float* o, size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    const __m256 six = _mm256_set1_ps(6.0f);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 vx = _mm256_loadu_ps(x + i);
        __m256 mask = _mm256_and_ps(_mm256_cmp_ps(vx, zero, _CMP_GT_OQ),
                                    _mm256_cmp_ps(vx, six, _CMP_LT_OQ));
        _mm256_storeu_ps(o + i, _mm256_and_ps(mask, _mm256_loadu_ps(g + i)));
    }
    for (; i < n; ++i) o[i] = (x[i] > 0.0f && x[i] < 6.0f) ? g[i] : 0.0f;
}

// Mirrors the scalar reference operation-for-operation (no FMA here) so the
// update is bit-identical across implementations.
void adam_update_avx2(float* p, float* m, float* v, const float* g, size_t n,
                      const AdamConsts& c) {
    const __m256 b1 = _mm256_set1_ps(c.beta1);
    const __m256 b2 = _mm256_set1_ps(c.beta2);
    const __m256 omb1 = _mm256_set1_ps(1.0f - c.beta1);
    const __m256 omb2 = _mm256_set1_ps(1.0f - c.beta2);
    const __m256 bc1 = _mm256_set1_ps(c.bc1);
    const __m256 bc2 = _mm256_set1_ps(c.bc2);
    const __m256 lr = _mm256_set1_ps(c.lr);
    const __m256 eps = _mm256_set1_ps(c.eps);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 gi = _mm256_loadu_ps(g + i);
        __m256 mi = _mm256_add_ps(_mm256_mul_ps(b1, _mm256_loadu_ps(m + i)),
                                  _mm256_mul_ps(omb1, gi));
        __m256 vi = _mm256_add_ps(_mm256_mul_ps(b2, _mm256_loadu_ps(v + i)),
                                  _mm256_mul_ps(omb2, _mm256_mul_ps(gi, gi)));
        _mm256_storeu_ps(m + i, mi);
        _mm256_storeu_ps(v + i, vi);
        __m256 mh = _mm256_mul_ps(mi, bc1);
        __m256 vh = _mm256_mul_ps(vi, bc2);
        __m256 step = _mm256_div_ps(_mm256_mul_ps(lr, mh),
                                    _mm256_add_ps(_mm256_sqrt_ps(vh), eps));
        _mm256_storeu_ps(p + i, _mm256_sub_ps(_mm256_loadu_ps(p + i), step));
    }
    for (; i < n; ++i) {
        const float gi = g[i];
        m[i] = c.beta1 * m[i] + (1.0f - c.beta1) * gi;
        v[i] = c.beta2 * v[i] + (1.0f - c.beta2) * (gi * gi);
        const float mh = m[i] * c.bc1;
        const float vh = v[i] * c.bc2;
        p[i] = p[i] - (c.lr * mh) / (std::sqrt(vh) + c.eps);
    }
}

} // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Ops ops = {
        "avx2",
        &dot_avx2,
        &sum_avx2,
        &l2sq_avx2,
        &ssd_u8_avx2,
        &add_avx2,
        &sub_avx2,
        &mul_avx2,
        &scale_avx2,
        &axpy_acc_avx2,
        &add_acc_avx2,
        &sq_acc_avx2,
        &fma_acc_avx2,
        &relu_avx2,
        &relu_bwd_avx2,
        &relu6_avx2,
        &relu6_bwd_avx2,
        &adam_update_avx2,
    };
    return &ops;
}

} // namespace allcnn::kernels

#else

#include "allcnn/kernels.hpp"

namespace allcnn::kernels {
const Ops* avx2_ops() { return nullptr; }
} // namespace allcnn::kernels

#endif
