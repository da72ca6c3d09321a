#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace jcas {

/// Which evaluation pool a trial belongs to. Pools draw from disjoint
/// streams so calibration and fresh evaluation never share randomness.
enum class TrialSet : std::uint64_t {
    calibration = 1,
    null_eval = 2,
    alt_eval = 3,
};

/// What a stream is used for within one trial.
enum class DrawPurpose : std::uint64_t {
    target_gains = 1,
    clutter_gains = 2,
    tx_symbols = 3,
    clutter_tx = 4,
    noise = 5,
    ue_link = 6,
};

namespace detail {
// SplitMix64 finalizer; decorrelates nearby (seed, domain, index) triples.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}
} // namespace detail

/// Deterministic stream for an arbitrary (domain, index) pair.
inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t domain,
                                   std::uint64_t index) {
    const std::uint64_t a = detail::mix64(master_seed);
    const std::uint64_t b = detail::mix64(a ^ domain);
    return std::mt19937_64(detail::mix64(b ^ index));
}

/// Stream for one purpose within one trial of one pool. Streams depend only
/// on (master_seed, set, purpose, trial), so paired configs sharing a master
/// seed see identical draws and results are thread-schedule invariant.
inline std::mt19937_64 make_stream(std::uint64_t master_seed, TrialSet set, DrawPurpose purpose,
                                   std::uint64_t trial) {
    const std::uint64_t domain =
        (static_cast<std::uint64_t>(set) << 8) | static_cast<std::uint64_t>(purpose);
    return make_stream(master_seed, domain, trial);
}

/// Stream for quantities drawn once per experiment (e.g. the static clutter
/// environment), shared by every pool and trial.
inline std::mt19937_64 make_environment_stream(std::uint64_t master_seed) {
    return make_stream(master_seed, static_cast<std::uint64_t>(DrawPurpose::clutter_gains), 0);
}

/// One draw from the circularly symmetric complex Gaussian CN(0, variance).
inline std::complex<double> draw_cn(std::mt19937_64& rng, double variance) {
    std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

} // namespace jcas
