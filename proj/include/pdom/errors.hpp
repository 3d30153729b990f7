#pragma once

#include <stdexcept>
#include <string>

namespace pdom
{
    /// Base class of every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Malformed textual input (graph6 lines, alpha fractions).
    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    /// An argument outside the supported range.
    class RangeError : public Error
    {
    public:
        using Error::Error;
    };

    /// The input does not satisfy what the operation requires of it.
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    /// A search ran past its deadline.
    class TimeoutError : public Error
    {
    public:
        TimeoutError() : Error("search timed out") {}
    };
}
