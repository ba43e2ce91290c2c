#pragma once

#include <array>
#include <cstdint>

namespace fdo {

/// Deterministic random source backed by xoshiro256++ with splitmix64
/// seeding.  The generator is fully specified here, so sequences are
/// bit-identical across platforms and compilers.  Distinct (seed, stream)
/// pairs yield independent sequences; a source is single-owner and must not
/// be shared between concurrent runs.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double next_double();

    /// Uniform double in [lo, hi].  Throws std::invalid_argument on lo > hi.
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller; consumes exactly two raw draws.
    double normal();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
};

/// Parameters of the Levy-flight walk behind the step scalar r.
/// beta is the stability exponent, constrained to (0, 2]; output is always
/// clipped into [-1, 1].
struct LevyWalkParams {
    double beta = 1.5;

    LevyWalkParams() = default;
    explicit LevyWalkParams(double b);
};

/// One heavy-tailed step scalar in [-1, 1] (Mantegna ratio method, scaled
/// and hard-clipped).
double levy_r(RandomSource& source, const LevyWalkParams& params = {});

/// Stable 64-bit FNV-1a over arbitrary bytes; used to derive run seeds.
std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull);

}  // namespace fdo
