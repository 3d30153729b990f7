#pragma once

#include <pdom/errors.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace pdom
{
    /// Optional wall-clock deadline shared by the exact searches.
    struct SearchLimits
    {
        std::optional<std::chrono::steady_clock::time_point> deadline;

        static auto with_timeout(std::chrono::milliseconds timeout) -> SearchLimits
        {
            return SearchLimits{std::chrono::steady_clock::now() + timeout};
        }
    };

    /// Counts search nodes and checks the deadline every 1024 of them.
    class DeadlineCheck
    {
    public:
        explicit DeadlineCheck(const SearchLimits & limits) : _deadline(limits.deadline) {}

        auto tick() -> void
        {
            if (_deadline && (++_nodes & 1023) == 0 && std::chrono::steady_clock::now() > *_deadline)
                throw TimeoutError();
        }

    private:
        std::optional<std::chrono::steady_clock::time_point> _deadline;
        std::uint64_t _nodes = 0;
    };
}
