#pragma once

#include <pdom/graph.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdom
{
    enum class Suite
    {
        Reed,     ///< gamma <= floor(3n/8), minimum degree >= 3
        Ks,       ///< gamma <= floor(5n/14), connected cubic, except A1 and A2
        Favaron,  ///< 8 rho >= n, connected cubic, except the Petersen graph
        Cubic14,  ///< pd_{7/8} <= 4, connected cubic of order 14
        Largedom, ///< gamma = 5 at order 14 only for the four catalogued graphs
        Extremal  ///< list graphs with gamma = floor(5n/14), no bound asserted
    };

    auto suite_name(Suite suite) -> std::string_view;
    auto parse_suite(std::string_view name) -> std::optional<Suite>;

    struct Offender
    {
        std::string graph6;
        std::int64_t observed = 0;
        std::int64_t bound = 0;
        std::string note; ///< catalog name for matched exceptions

        auto operator<=>(const Offender &) const = default;
    };

    struct CorpusError
    {
        std::int64_t line = 0;
        std::string message;

        auto operator<=>(const CorpusError &) const = default;
    };

    struct GpRow
    {
        int p = 0;
        int exact = 0;
        int formula = 0;
        std::optional<int> five_sevenths; ///< floor(5p/7), for the p where it should coincide

        auto operator<=>(const GpRow &) const = default;
    };

    /**
     * Outcome of a suite over a corpus. Processed graphs split into
     * conforming, violations and exceptions_found; graphs outside the suite's
     * hypothesis count as skipped, unreadable lines land in errors and
     * searches past the deadline in timeouts. All lists are kept sorted, so
     * merging per-graph reports in any order gives the same result.
     */
    struct Report
    {
        std::string suite;
        std::int64_t total = 0;
        std::int64_t skipped = 0;
        std::int64_t conforming = 0;
        std::vector<Offender> violations;
        std::vector<Offender> exceptions_found;
        std::vector<Offender> extremal;
        std::vector<Offender> over_bound;       ///< Extremal suite: gamma above floor(5n/14)
        std::vector<Offender> conjecture_exact; ///< Extremal suite: 14 gamma = 5n
        std::vector<std::string> timeouts;
        std::vector<CorpusError> errors;
        std::vector<GpRow> gp_rows;
        std::chrono::milliseconds elapsed{0};

        auto merge(const Report & other) -> void;

        /// Largedom: exactly four graphs with gamma = 5, matching four distinct catalog entries.
        auto largedom_complete() const -> bool;

        /// Exit status: 1 for violations or timeouts, 3 for unreadable lines, else 0.
        auto exit_code() const -> int;
    };

    struct VerifyOptions
    {
        std::optional<std::chrono::milliseconds> timeout;
    };

    /// Checks one corpus line at a time; the result is a single-graph Report.
    class SuiteChecker
    {
    public:
        explicit SuiteChecker(Suite suite, VerifyOptions options = {});

        auto check(std::string_view graph6, std::int64_t line_number) const -> Report;
        auto empty_report() const -> Report;

    private:
        auto check_graph(const Graph & g, const std::string & graph6) const -> Report;

        Suite _suite;
        VerifyOptions _options;
    };

    /// Run a suite over graph6 lines; blank lines are ignored.
    auto run_suite(Suite suite, std::istream & corpus, VerifyOptions options = {}) -> Report;
    auto run_suite(Suite suite, std::span<const Graph> corpus, VerifyOptions options = {}) -> Report;

    /// Suite must be Reed, Ks, Favaron or Cubic14.
    auto check_bounds(std::istream & corpus, Suite suite, VerifyOptions options = {}) -> Report;
    auto check_largedom(std::istream & corpus, VerifyOptions options = {}) -> Report;
    auto scan_extremal(std::istream & corpus, VerifyOptions options = {}) -> Report;

    /// gamma(P(p, 2)) = p - floor(p/5) - floor((p+2)/5) for p_min <= p <= p_max, 3 <= p_min <= p_max <= 16.
    auto check_gp_formula(int p_min, int p_max, VerifyOptions options = {}) -> Report;

    auto gp_closed_form(int p) -> int;

    /// The graph the P(p, 2) formula speaks about, for any p >= 3: P(3, 2) is
    /// P(3, 1), and P(4, 2) has its inner vertices joined by a perfect matching.
    auto petersen_p2(int p) -> Graph;

    auto to_json(const Report & report, bool include_elapsed) -> nlohmann::ordered_json;

    /// Header line plus one summary row.
    auto to_tsv(const Report & report) -> std::string;
}
