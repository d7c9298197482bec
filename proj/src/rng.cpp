#include "allcnn/rng.hpp"

#include <cmath>
#include <numbers>

namespace allcnn {

namespace {

uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(uint64_t seed) {
    uint64_t s = seed;
    for (auto& lane : s_) lane = splitmix64(s);
}

uint64_t Rng::next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

float Rng::uniform() {
    return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f;
}

float Rng::uniform(float lo, float hi) {
    ALLCNN_CHECK(lo < hi, ValueError, "uniform range invalid: lo=", lo, " hi=", hi);
    return lo + (hi - lo) * uniform();
}

double Rng::uniform64() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t Rng::bounded(uint64_t bound) {
    ALLCNN_CHECK(bound >= 1, ValueError, "bounded draw requires bound >= 1");
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
}

double Rng::normal() {
    // u1 in (0, 1] so the log is finite.
    double u1 = 1.0 - uniform64();
    double u2 = uniform64();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::fork(uint64_t stream) const {
    uint64_t s = s_[0] ^ rotl(s_[3], 13) ^ (0xA0761D6478BD642FULL * (stream + 1));
    return Rng(s);
}

template <typename T>
TensorT<T> rng_uniform(Rng& rng, T lo, T hi, std::vector<size_t> shape) {
    ALLCNN_CHECK(lo < hi, ValueError, "uniform range invalid: lo=", lo, " hi=", hi);
    TensorT<T> out(std::move(shape));
    for (T& v : out.data) {
        v = lo + (hi - lo) * static_cast<T>(rng.uniform());
    }
    return out;
}

template TensorT<float> rng_uniform<float>(Rng&, float, float, std::vector<size_t>);
template TensorT<double> rng_uniform<double>(Rng&, double, double, std::vector<size_t>);

} // namespace allcnn
