#pragma once

#include <cstdint>

namespace pdom
{
    /**
     * xorshift64* (Vigna 2016): state ^= state >> 12; state ^= state << 25;
     * state ^= state >> 27; output state * 0x2545F4914F6CDD1D. The seed is
     * xored with 0x9E3779B97F4A7C15 and the zero state is replaced by that
     * constant. All arithmetic is on uint64_t, so a seed yields the same
     * stream on every platform. Bounded draws use rejection sampling rather
     * than the standard distributions, whose output is implementation defined.
     */
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _state(seed ^ golden)
        {
            if (_state == 0)
                _state = golden;
        }

        auto next() -> std::uint64_t
        {
            _state ^= _state >> 12;
            _state ^= _state << 25;
            _state ^= _state >> 27;
            return _state * multiplier;
        }

        /// Uniform integer in [0, bound), bound > 0.
        auto below(std::uint64_t bound) -> std::uint64_t
        {
            std::uint64_t threshold = (0 - bound) % bound;
            while (true) {
                auto r = next();
                if (r >= threshold)
                    return r % bound;
            }
        }

    private:
        static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
        static constexpr std::uint64_t multiplier = 0x2545F4914F6CDD1DULL;

        std::uint64_t _state;
    };
}
