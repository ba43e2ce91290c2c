#include "fdo/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace fdo {
namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

// Fixed mapping factor applied to the raw Mantegna step before clipping.
// Chosen so the bulk of the distribution stays inside [-1, 1] while the
// heavy tail still saturates the clip.
constexpr double kLevyScale = 0.05;

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
    std::uint64_t sm = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
    for (auto& word : state_) word = splitmix64(sm);
    if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
        state_[0] = 1;  // all-zero state is the one forbidden xoshiro seed
}

std::uint64_t RandomSource::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("uniform: inverted interval");
    return lo + (hi - lo) * next_double();
}

double RandomSource::normal() {
    // (0,1) open on both ends so log() stays finite
    const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

LevyWalkParams::LevyWalkParams(double b) : beta(b) {
    if (!(beta > 0.0 && beta <= 2.0))
        throw std::invalid_argument("LevyWalkParams: beta must be in (0, 2]");
}

double levy_r(RandomSource& source, const LevyWalkParams& params) {
    const double beta = params.beta;
    const double sigma_u =
        std::pow(std::tgamma(1.0 + beta) * std::sin(M_PI * beta / 2.0) /
                     (std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0)),
                 1.0 / beta);
    const double u = source.normal() * sigma_u;
    double v = std::fabs(source.normal());
    if (v < 1e-300) v = 1e-300;
    const double step = u / std::pow(v, 1.0 / beta);
    const double r = kLevyScale * step;
    if (r < -1.0) return -1.0;
    if (r > 1.0) return 1.0;
    return r;
}

std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace fdo
