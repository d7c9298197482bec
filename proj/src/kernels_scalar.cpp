// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against; keep them straightforward sequential loops.

#include <cmath>

#include "allcnn/kernels.hpp"

namespace allcnn::kernels {

namespace {

template <typename T>
double dot_impl(const T* a, const T* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

template <typename T>
double sum_impl(const T* x, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += static_cast<double>(x[i]);
    return acc;
}

template <typename T>
double l2sq_impl(const T* a, const T* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        acc += d * d;
    }
    return acc;
}

uint64_t ssd_u8_impl(const uint8_t* a, const uint8_t* b, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; ++i) {
        int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
        acc += static_cast<uint64_t>(d * d);
    }
    return acc;
}

template <typename T>
void add_impl(const T* a, const T* b, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) o[i] = a[i] + b[i];
}

template <typename T>
void sub_impl(const T* a, const T* b, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) o[i] = a[i] - b[i];
}

template <typename T>
void mul_impl(const T* a, const T* b, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) o[i] = a[i] * b[i];
}

template <typename T>
void scale_impl(const T* a, T s, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) o[i] = a[i] * s;
}

template <typename T>
void axpy_acc_impl(double* y, T a, const T* x, size_t n) {
    const double ad = static_cast<double>(a);
    for (size_t i = 0; i < n; ++i) y[i] += ad * static_cast<double>(x[i]);
}

template <typename T>
void add_acc_impl(double* y, const T* x, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += static_cast<double>(x[i]);
}

template <typename T>
void sq_acc_impl(double* y, const T* x, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        double v = static_cast<double>(x[i]);
        y[i] += v * v;
    }
}

template <typename T>
void fma_acc_impl(double* y, const T* a, const T* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        y[i] += static_cast<double>(a[i]) * static_cast<double>(b[i]);
}

template <typename T>
void relu_impl(const T* x, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) o[i] = x[i] > T(0) ? x[i] : T(0);
}

// Subgradient 0 at the origin: gradient passes only where x > 0 strictly.
template <typename T>
void relu_bwd_impl(const T* x, const T* g, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) o[i] = x[i] > T(0) ? g[i] : T(0);
}

template <typename T>
void relu6_impl(const T* x, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) {
        T v = x[i] > T(0) ? x[i] : T(0);
        o[i] = v < T(6) ? v : T(6);
    }
}

// Closed boundaries: zero gradient at both x = 0 and x = 6.
template <typename T>
void relu6_bwd_impl(const T* x, const T* g, T* o, size_t n) {
    for (size_t i = 0; i < n; ++i) o[i] = (x[i] > T(0) && x[i] < T(6)) ? g[i] : T(0);
}

// Operation order here is mirrored exactly by the SIMD variants so results
// stay bit-identical (build uses -ffp-contract=off).
void adam_update_f32(float* p, float* m, float* v, const float* g, size_t n,
                     const AdamConsts& c) {
    const float omb1 = 1.0f - c.beta1;
    const float omb2 = 1.0f - c.beta2;
    for (size_t i = 0; i < n; ++i) {
        const float gi = g[i];
        m[i] = c.beta1 * m[i] + omb1 * gi;
        v[i] = c.beta2 * v[i] + omb2 * (gi * gi);
        const float mh = m[i] * c.bc1;
        const float vh = v[i] * c.bc2;
        p[i] = p[i] - (c.lr * mh) / (std::sqrt(vh) + c.eps);
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",
        &dot_impl<float>,
        &sum_impl<float>,
        &l2sq_impl<float>,
        &ssd_u8_impl,
        &add_impl<float>,
        &sub_impl<float>,
        &mul_impl<float>,
        &scale_impl<float>,
        &axpy_acc_impl<float>,
        &add_acc_impl<float>,
        &sq_acc_impl<float>,
        &fma_acc_impl<float>,
        &relu_impl<float>,
        &relu_bwd_impl<float>,
        &relu6_impl<float>,
        &relu6_bwd_impl<float>,
        &adam_update_f32,
    };
    return ops;
}

double dot(const double* a, const double* b, size_t n) { return dot_impl(a, b, n); }
double sum(const double* x, size_t n) { return sum_impl(x, n); }
double l2sq(const double* a, const double* b, size_t n) { return l2sq_impl(a, b, n); }
void add(const double* a, const double* b, double* o, size_t n) { add_impl(a, b, o, n); }
void sub(const double* a, const double* b, double* o, size_t n) { sub_impl(a, b, o, n); }
void mul(const double* a, const double* b, double* o, size_t n) { mul_impl(a, b, o, n); }
void scale(const double* a, double s, double* o, size_t n) { scale_impl(a, s, o, n); }
void axpy_acc(double* y, double a, const double* x, size_t n) { axpy_acc_impl(y, a, x, n); }
void add_acc(double* y, const double* x, size_t n) { add_acc_impl(y, x, n); }
void sq_acc(double* y, const double* x, size_t n) { sq_acc_impl(y, x, n); }
void fma_acc(double* y, const double* a, const double* b, size_t n) { fma_acc_impl(y, a, b, n); }
void relu(const double* x, double* o, size_t n) { relu_impl(x, o, n); }
void relu_bwd(const double* x, const double* g, double* o, size_t n) { relu_bwd_impl(x, g, o, n); }
void relu6(const double* x, double* o, size_t n) { relu6_impl(x, o, n); }
void relu6_bwd(const double* x, const double* g, double* o, size_t n) { relu6_bwd_impl(x, g, o, n); }

void adam_update(double* p, double* m, double* v, const double* g, size_t n,
                 const AdamConsts64& c) {
    const double omb1 = 1.0 - c.beta1;
    const double omb2 = 1.0 - c.beta2;
    for (size_t i = 0; i < n; ++i) {
        const double gi = g[i];
        m[i] = c.beta1 * m[i] + omb1 * gi;
        v[i] = c.beta2 * v[i] + omb2 * (gi * gi);
        const double mh = m[i] * c.bc1;
        const double vh = v[i] * c.bc2;
        p[i] = p[i] - (c.lr * mh) / (std::sqrt(vh) + c.eps);
    }
}

} // namespace allcnn::kernels
