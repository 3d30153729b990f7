#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pdom
{
    /**
     * Exact rational coverage threshold alpha = p/q with 0 < p <= q, stored
     * in lowest terms. A set meets the threshold on an n-vertex graph when it
     * dominates at least required(n) = ceil(p*n/q) vertices.
     */
    class AlphaThreshold
    {
    public:
        AlphaThreshold(std::int64_t numerator, std::int64_t denominator);

        /// Strict "P/Q" with decimal digits only; decimals like "0.875" are rejected.
        static auto parse(std::string_view text) -> AlphaThreshold;

        auto numerator() const -> std::int64_t { return _p; }
        auto denominator() const -> std::int64_t { return _q; }

        auto required(int n) const -> int
        {
            return static_cast<int>((_p * n + _q - 1) / _q);
        }

        /// q * coverage >= p * n
        auto satisfied_by(int coverage, int n) const -> bool { return _q * coverage >= _p * n; }

        auto to_string() const -> std::string { return std::to_string(_p) + "/" + std::to_string(_q); }

        auto operator==(const AlphaThreshold &) const -> bool = default;
        auto operator<=>(const AlphaThreshold & other) const -> std::strong_ordering
        {
            return _p * other._q <=> other._p * _q;
        }

    private:
        std::int64_t _p;
        std::int64_t _q;
    };
}
