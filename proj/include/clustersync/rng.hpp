#pragma once

#include <cstdint>

namespace clustersync {

/// SplitMix64: seedable 64-bit generator used for every random draw in the
/// toolkit. Substreams are derived by pushing (seed, stream) through the
/// finalizer, so distinct stream ids give independent sequences and results
/// are reproducible from (seed, stream) alone.
class SplitMix64 {
  public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~std::uint64_t{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [lo, hi) built from the top 53 bits.
    double uniform(double lo, double hi) {
        const double unit = static_cast<double>((*this)() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return (*this)() % n; }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent generator for stream `stream` of master seed `seed`.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(mix64(seed + 0x632BE59BD9B4E019ULL) ^
                      mix64(stream ^ 0x9E3779B97F4A7C15ULL));
}

}  // namespace clustersync
