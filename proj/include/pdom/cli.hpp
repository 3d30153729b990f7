#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdom::cli
{
    /**
     * Command-line entry point. args excludes the program name. Exit codes:
     * 0 success, 1 a violation, timeout or failed construction, 2 usage
     * error, 3 unreadable graph6 input.
     */
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
