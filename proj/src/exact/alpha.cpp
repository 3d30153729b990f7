#include <pdom/alpha.hpp>
#include <pdom/errors.hpp>

#include <charconv>
#include <numeric>

using std::string_view;

namespace pdom
{
    AlphaThreshold::AlphaThreshold(std::int64_t numerator, std::int64_t denominator)
    {
        if (numerator <= 0 || denominator <= 0 || numerator > denominator)
            throw RangeError("alpha must satisfy 0 < p <= q, got " + std::to_string(numerator) + "/" +
                std::to_string(denominator));
        if (denominator > (std::int64_t{1} << 40))
            throw RangeError("alpha denominator too large");
        auto g = std::gcd(numerator, denominator);
        _p = numerator / g;
        _q = denominator / g;
    }

    auto AlphaThreshold::parse(string_view text) -> AlphaThreshold
    {
        auto slash = text.find('/');
        if (slash == string_view::npos)
            throw ParseError("alpha must be written as P/Q, got '" + std::string(text) + "'");

        auto integer = [&](string_view part) {
            std::int64_t value = 0;
            if (part.empty() || part.find_first_not_of("0123456789") != string_view::npos)
                throw ParseError("alpha must be written as P/Q with decimal integers, got '" + std::string(text) + "'");
            auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
            if (ec != std::errc{} || end != part.data() + part.size())
                throw ParseError("alpha component out of range in '" + std::string(text) + "'");
            return value;
        };

        return AlphaThreshold(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
    }
}
