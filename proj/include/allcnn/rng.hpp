#pragma once

#include <cstdint>
#include <string>

#include "allcnn/tensor.hpp"

namespace allcnn {

// Deterministic PRNG used for every stochastic step (weight init, shuffles,
// dropout masks, SMOTE sampling). A given seed yields the same sequence on
// every platform: only integer ops and exact power-of-two float scaling are
// involved on the uniform path.
//
// Construction: the 64-bit seed is expanded into the 256-bit state with
// splitmix64 (Steele/Lea/Vigna):
//     z  = (s += 0x9E3779B97F4A7C15)
//     z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
//     z ^= z >> 27; z *= 0x94D049BB133111EB
//     z ^= z >> 31
// Generation: xoshiro256** (Blackman/Vigna), an xorshift-family generator:
//     result = rotl(s1 * 5, 7) * 9
//     t = s1 << 17
//     s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t; s3 = rotl(s3, 45)
// These constants are frozen; changing them breaks every recorded seed.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();

    // Uniform in [0, 1): top 24 bits scaled by 2^-24 (exactly representable).
    float uniform();
    // Uniform in [lo, hi); throws ValueError when lo >= hi.
    float uniform(float lo, float hi);
    // Double-precision uniform in [0, 1): top 53 bits scaled by 2^-53.
    double uniform64();

    // Unbiased-enough bounded draw via 128-bit multiply-shift; bound >= 1.
    uint64_t bounded(uint64_t bound);

    // Standard normal via Box-Muller (two uniforms per draw, no rejection).
    double normal();

    // Independent stream derived from (current state, stream index); used for
    // per-class sub-generators.
    Rng fork(uint64_t stream) const;

private:
    uint64_t s_[4];
};

// Tensor filled with uniforms in [lo, hi); advances `rng` deterministically.
template <typename T>
TensorT<T> rng_uniform(Rng& rng, T lo, T hi, std::vector<size_t> shape);

extern template TensorT<float> rng_uniform<float>(Rng&, float, float, std::vector<size_t>);
extern template TensorT<double> rng_uniform<double>(Rng&, double, double, std::vector<size_t>);

} // namespace allcnn
