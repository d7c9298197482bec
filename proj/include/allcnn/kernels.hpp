#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace allcnn::kernels {

// Per-step Adam constants; bc1/bc2 are the bias corrections 1/(1-beta^t).
struct AdamConsts {
    float lr;
    float beta1;
    float beta2;
    float eps;
    float bc1;
    float bc2;
};

// Hot inner loops of the engine. Every entry has a scalar reference
// implementation plus SIMD variants (AVX2 on x86-64, NEON on aarch64)
// selected once at startup; tests assert scalar/SIMD equivalence.
//
// Reductions (dot, sum, l2sq, *_acc) accumulate in double. SIMD variants may
// reassociate those sums, so they match the scalar reference to rounding
// noise, not bit-for-bit. Elementwise entries perform the same operation
// sequence per element and are bit-exact across implementations.
struct Ops {
    const char* name;

    double (*dot)(const float* a, const float* b, size_t n);
    double (*sum)(const float* x, size_t n);
    double (*l2sq)(const float* a, const float* b, size_t n);
    uint64_t (*ssd_u8)(const uint8_t* a, const uint8_t* b, size_t n);

    void (*add)(const float* a, const float* b, float* out, size_t n);
    void (*sub)(const float* a, const float* b, float* out, size_t n);
    void (*mul)(const float* a, const float* b, float* out, size_t n);
    void (*scale)(const float* a, float s, float* out, size_t n);

    // Double-buffer accumulators used where f32 storage meets f64 summation.
    void (*axpy_acc)(double* y, float a, const float* x, size_t n); // y += a*x
    void (*add_acc)(double* y, const float* x, size_t n);           // y += x
    void (*sq_acc)(double* y, const float* x, size_t n);            // y += x*x
    void (*fma_acc)(double* y, const float* a, const float* b, size_t n); // y += a*b

    void (*relu)(const float* x, float* out, size_t n);
    void (*relu_bwd)(const float* x, const float* g, float* out, size_t n);
    void (*relu6)(const float* x, float* out, size_t n);
    void (*relu6_bwd)(const float* x, const float* g, float* out, size_t n);

    void (*adam_update)(float* p, float* m, float* v, const float* g, size_t n,
                        const AdamConsts& c);
};

const Ops& scalar_ops();
const Ops* avx2_ops(); // nullptr when the build or CPU lacks AVX2+FMA
const Ops* neon_ops(); // nullptr off aarch64

// Active table: best available ISA, overridable with env ALLCNN_SIMD
// (scalar|avx2|neon) before first use, or select() at any time.
const Ops& active();
bool select(std::string_view name);
const char* active_name();

// Dispatched f32 entry points.
inline double dot(const float* a, const float* b, size_t n) { return active().dot(a, b, n); }
inline double sum(const float* x, size_t n) { return active().sum(x, n); }
inline double l2sq(const float* a, const float* b, size_t n) { return active().l2sq(a, b, n); }
inline uint64_t ssd_u8(const uint8_t* a, const uint8_t* b, size_t n) { return active().ssd_u8(a, b, n); }
inline void add(const float* a, const float* b, float* o, size_t n) { active().add(a, b, o, n); }
inline void sub(const float* a, const float* b, float* o, size_t n) { active().sub(a, b, o, n); }
inline void mul(const float* a, const float* b, float* o, size_t n) { active().mul(a, b, o, n); }
inline void scale(const float* a, float s, float* o, size_t n) { active().scale(a, s, o, n); }
inline void axpy_acc(double* y, float a, const float* x, size_t n) { active().axpy_acc(y, a, x, n); }
inline void add_acc(double* y, const float* x, size_t n) { active().add_acc(y, x, n); }
inline void sq_acc(double* y, const float* x, size_t n) { active().sq_acc(y, x, n); }
inline void fma_acc(double* y, const float* a, const float* b, size_t n) { active().fma_acc(y, a, b, n); }
inline void relu(const float* x, float* o, size_t n) { active().relu(x, o, n); }
inline void relu_bwd(const float* x, const float* g, float* o, size_t n) { active().relu_bwd(x, g, o, n); }
inline void relu6(const float* x, float* o, size_t n) { active().relu6(x, o, n); }
inline void relu6_bwd(const float* x, const float* g, float* o, size_t n) { active().relu6_bwd(x, g, o, n); }
inline void adam_update(float* p, float* m, float* v, const float* g, size_t n,
                        const AdamConsts& c) { active().adam_update(p, m, v, g, n, c); }

// Double-precision path (gradient-check mode): scalar only, defined once.
double dot(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
double l2sq(const double* a, const double* b, size_t n);
void add(const double* a, const double* b, double* o, size_t n);
void sub(const double* a, const double* b, double* o, size_t n);
void mul(const double* a, const double* b, double* o, size_t n);
void scale(const double* a, double s, double* o, size_t n);
void axpy_acc(double* y, double a, const double* x, size_t n);
void add_acc(double* y, const double* x, size_t n);
void sq_acc(double* y, const double* x, size_t n);
void fma_acc(double* y, const double* a, const double* b, size_t n);
void relu(const double* x, double* o, size_t n);
void relu_bwd(const double* x, const double* g, double* o, size_t n);
void relu6(const double* x, double* o, size_t n);
void relu6_bwd(const double* x, const double* g, double* o, size_t n);

struct AdamConsts64 {
    double lr, beta1, beta2, eps, bc1, bc2;
};
void adam_update(double* p, double* m, double* v, const double* g, size_t n,
                 const AdamConsts64& c);

} // namespace allcnn::kernels
