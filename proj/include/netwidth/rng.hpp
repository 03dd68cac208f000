#ifndef NETWIDTH_RNG_HPP
#define NETWIDTH_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace netwidth {

// All randomness in the library goes through this wrapper. std::mt19937_64 is
// fully specified by the standard, and the mappings below avoid
// std::uniform_*_distribution / std::shuffle, whose outputs are
// implementation-defined. Same seed -> same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Uniform integer in [0, bound). Modulo mapping; bias is irrelevant here,
    /// determinism is what matters.
    std::size_t below(std::size_t bound) {
        return static_cast<std::size_t>(engine_() % bound);
    }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace netwidth

#endif
