#include <pdom/alpha.hpp>
#include <pdom/catalog.hpp>
#include <pdom/classify.hpp>
#include <pdom/domination.hpp>
#include <pdom/generators.hpp>
#include <pdom/graph6.hpp>
#include <pdom/isomorphism.hpp>
#include <pdom/packing.hpp>
#include <pdom/verify.hpp>

#include <algorithm>
#include <array>
#include <istream>
#include <set>
#include <sstream>

using std::int64_t;
using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace pdom
{
    namespace
    {
        constexpr std::array suite_names{"reed", "ks", "favaron", "cubic14", "largedom", "extremal"};

        template <typename T>
        auto merge_sorted(vector<T> & into, const vector<T> & from) -> void
        {
            auto middle = into.insert(into.end(), from.begin(), from.end());
            std::inplace_merge(into.begin(), middle, into.end());
        }

        auto limits_for(const VerifyOptions & options) -> SearchLimits
        {
            return options.timeout ? SearchLimits::with_timeout(*options.timeout) : SearchLimits{};
        }

        /// Catalog entry isomorphic to g among the candidates, if any.
        auto matching_catalog_entry(const Graph & g, std::span<const NamedGraphId> candidates) -> optional<NamedGraphId>
        {
            if (g.order() > max_isomorphism_order)
                return std::nullopt;
            for (auto id : candidates) {
                auto named = named_graph(id);
                if (named.order() == g.order() && is_isomorphic(named, g))
                    return id;
            }
            return std::nullopt;
        }

        auto is_connected_cubic(const Graph & g) -> bool
        {
            return g.min_degree() == 3 && g.max_degree() == 3 && is_connected(g);
        }

        constexpr std::array ks_exceptions{NamedGraphId::A1, NamedGraphId::A2};
        constexpr std::array favaron_exceptions{NamedGraphId::Petersen};

        auto timed_report(const string & suite) -> Report
        {
            Report report;
            report.suite = suite;
            return report;
        }
    }

    auto suite_name(Suite suite) -> string_view
    {
        return suite_names.at(static_cast<std::size_t>(suite));
    }

    auto parse_suite(string_view name) -> optional<Suite>
    {
        for (std::size_t i = 0; i < suite_names.size(); ++i)
            if (suite_names[i] == name)
                return static_cast<Suite>(i);
        return std::nullopt;
    }

    auto Report::merge(const Report & other) -> void
    {
        total += other.total;
        skipped += other.skipped;
        conforming += other.conforming;
        merge_sorted(violations, other.violations);
        merge_sorted(exceptions_found, other.exceptions_found);
        merge_sorted(extremal, other.extremal);
        merge_sorted(over_bound, other.over_bound);
        merge_sorted(conjecture_exact, other.conjecture_exact);
        merge_sorted(timeouts, other.timeouts);
        merge_sorted(errors, other.errors);
        merge_sorted(gp_rows, other.gp_rows);
        elapsed += other.elapsed;
    }

    auto Report::largedom_complete() const -> bool
    {
        std::set<string> names;
        for (const auto & e : extremal)
            names.insert(e.note);
        return extremal.size() == order14_extremal_graphs.size() && names.size() == extremal.size() &&
            ! names.contains("");
    }

    auto Report::exit_code() const -> int
    {
        if (! violations.empty() || ! timeouts.empty())
            return 1;
        if (! errors.empty())
            return 3;
        return 0;
    }

    SuiteChecker::SuiteChecker(Suite suite, VerifyOptions options) : _suite(suite), _options(options) {}

    auto SuiteChecker::empty_report() const -> Report
    {
        return timed_report(string(suite_name(_suite)));
    }

    auto SuiteChecker::check(string_view graph6, int64_t line_number) const -> Report
    {
        auto report = empty_report();
        optional<Graph> g;
        try {
            g = parse_graph6(graph6);
        }
        catch (const Error & e) {
            report.errors.push_back({line_number, e.what()});
            return report;
        }
        string key(graph6);
        while (! key.empty() && (key.back() == '\n' || key.back() == '\r'))
            key.pop_back();
        try {
            return check_graph(*g, key);
        }
        catch (const TimeoutError &) {
            report.timeouts.push_back(key);
            return report;
        }
    }

    auto SuiteChecker::check_graph(const Graph & g, const string & graph6) const -> Report
    {
        auto report = empty_report();
        auto limits = limits_for(_options);
        int n = g.order();

        auto record = [&](bool within_bound, int64_t observed, int64_t bound,
                          std::span<const NamedGraphId> exceptions) {
            ++report.total;
            if (within_bound) {
                ++report.conforming;
                return;
            }
            if (auto match = matching_catalog_entry(g, exceptions))
                report.exceptions_found.push_back({graph6, observed, bound, string(name_of(*match))});
            else
                report.violations.push_back({graph6, observed, bound, ""});
        };

        switch (_suite) {
        case Suite::Reed: {
            if (g.min_degree() < 3) {
                ++report.skipped;
                break;
            }
            int gamma = gamma_exact(g, limits).value;
            record(8 * gamma <= 3 * n, gamma, 3 * n / 8, {});
            break;
        }
        case Suite::Ks: {
            if (! is_connected_cubic(g)) {
                ++report.skipped;
                break;
            }
            int gamma = gamma_exact(g, limits).value;
            record(14 * gamma <= 5 * n, gamma, 5 * n / 14, ks_exceptions);
            break;
        }
        case Suite::Favaron: {
            if (! is_connected_cubic(g)) {
                ++report.skipped;
                break;
            }
            int rho = rho_exact(g, limits).value;
            record(8 * rho >= n, rho, (n + 7) / 8, favaron_exceptions);
            break;
        }
        case Suite::Cubic14: {
            if (n != 14 || ! is_connected_cubic(g)) {
                ++report.skipped;
                break;
            }
            int pd = pd_exact(g, AlphaThreshold(7, 8), limits).value;
            record(pd <= 4, pd, 4, {});
            break;
        }
        case Suite::Largedom: {
            if (n != 14 || ! is_connected_cubic(g)) {
                ++report.skipped;
                break;
            }
            int gamma = gamma_exact(g, limits).value;
            ++report.total;
            if (gamma < 5) {
                ++report.conforming;
                break;
            }
            if (auto match = matching_catalog_entry(g, order14_extremal_graphs); match && gamma == 5) {
                ++report.conforming;
                report.extremal.push_back({graph6, gamma, 5, string(name_of(*match))});
            }
            else {
                report.violations.push_back({graph6, gamma, 4, ""});
                if (gamma == 5)
                    report.extremal.push_back({graph6, gamma, 5, ""});
            }
            break;
        }
        case Suite::Extremal: {
            if (! is_connected_cubic(g)) {
                ++report.skipped;
                break;
            }
            int gamma = gamma_exact(g, limits).value;
            int bound = 5 * n / 14;
            ++report.total;
            ++report.conforming;
            if (gamma == bound)
                report.extremal.push_back({graph6, gamma, bound, ""});
            if (gamma > bound)
                report.over_bound.push_back({graph6, gamma, bound, ""});
            if (14 * gamma == 5 * n)
                report.conjecture_exact.push_back({graph6, gamma, bound, ""});
            break;
        }
        }
        return report;
    }

    auto run_suite(Suite suite, std::istream & corpus, VerifyOptions options) -> Report
    {
        auto start = std::chrono::steady_clock::now();
        SuiteChecker checker(suite, options);
        auto report = checker.empty_report();
        string line;
        int64_t line_number = 0;
        while (std::getline(corpus, line)) {
            ++line_number;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            report.merge(checker.check(line, line_number));
        }
        report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return report;
    }

    auto run_suite(Suite suite, std::span<const Graph> corpus, VerifyOptions options) -> Report
    {
        std::ostringstream lines;
        for (const auto & g : corpus)
            lines << write_graph6(g) << '\n';
        std::istringstream in(lines.str());
        return run_suite(suite, in, options);
    }

    auto check_bounds(std::istream & corpus, Suite suite, VerifyOptions options) -> Report
    {
        if (suite != Suite::Reed && suite != Suite::Ks && suite != Suite::Favaron && suite != Suite::Cubic14)
            throw RangeError("check_bounds runs reed, ks, favaron or cubic14");
        return run_suite(suite, corpus, options);
    }

    auto check_largedom(std::istream & corpus, VerifyOptions options) -> Report
    {
        return run_suite(Suite::Largedom, corpus, options);
    }

    auto scan_extremal(std::istream & corpus, VerifyOptions options) -> Report
    {
        return run_suite(Suite::Extremal, corpus, options);
    }

    auto gp_closed_form(int p) -> int
    {
        return p - p / 5 - (p + 2) / 5;
    }

    auto petersen_p2(int p) -> Graph
    {
        if (p < 3)
            throw RangeError("P(p, 2) needs p >= 3");
        return generalized_petersen_unrestricted(p, p == 3 ? 1 : 2);
    }

    auto check_gp_formula(int p_min, int p_max, VerifyOptions options) -> Report
    {
        if (p_min < 3 || p_max > 16 || p_min > p_max)
            throw RangeError("gp range must satisfy 3 <= p_min <= p_max <= 16");
        auto start = std::chrono::steady_clock::now();
        auto report = timed_report("gp:" + std::to_string(p_min) + ":" + std::to_string(p_max));
        constexpr std::array coincidences{3, 5, 6, 7, 8, 9, 11, 12};
        for (int p = p_min; p <= p_max; ++p) {
            auto g = petersen_p2(p);
            auto graph6 = write_graph6(g);
            GpRow row{p, 0, gp_closed_form(p), std::nullopt};
            if (std::find(coincidences.begin(), coincidences.end(), p) != coincidences.end())
                row.five_sevenths = 5 * p / 7;
            try {
                row.exact = gamma_exact(g, limits_for(options)).value;
            }
            catch (const TimeoutError &) {
                report.timeouts.push_back(graph6);
                continue;
            }
            ++report.total;
            bool agrees = row.exact == row.formula && (! row.five_sevenths || *row.five_sevenths == row.formula);
            if (agrees)
                ++report.conforming;
            else
                report.violations.push_back({graph6, row.exact, row.formula, "p=" + std::to_string(p)});
            report.gp_rows.push_back(row);
        }
        std::sort(report.timeouts.begin(), report.timeouts.end());
        report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return report;
    }

    namespace
    {
        auto offenders_json(const vector<Offender> & offenders) -> nlohmann::ordered_json
        {
            auto result = nlohmann::ordered_json::array();
            for (const auto & o : offenders) {
                nlohmann::ordered_json entry;
                entry["graph6"] = o.graph6;
                entry["observed"] = o.observed;
                entry["bound"] = o.bound;
                if (! o.note.empty())
                    entry["match"] = o.note;
                result.push_back(entry);
            }
            return result;
        }
    }

    auto to_json(const Report & report, bool include_elapsed) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json result;
        result["suite"] = report.suite;
        result["total"] = report.total;
        result["skipped"] = report.skipped;
        result["conforming"] = report.conforming;
        result["violations"] = offenders_json(report.violations);
        result["exceptions_found"] = offenders_json(report.exceptions_found);
        result["extremal"] = offenders_json(report.extremal);
        if (report.suite == suite_name(Suite::Extremal)) {
            result["over_bound"] = offenders_json(report.over_bound);
            result["conjecture_exact"] = offenders_json(report.conjecture_exact);
        }
        if (report.suite == suite_name(Suite::Largedom))
            result["complete_match"] = report.largedom_complete();
        if (! report.gp_rows.empty()) {
            auto rows = nlohmann::ordered_json::array();
            for (const auto & row : report.gp_rows) {
                nlohmann::ordered_json entry;
                entry["p"] = row.p;
                entry["n"] = 2 * row.p;
                entry["exact"] = row.exact;
                entry["formula"] = row.formula;
                if (row.five_sevenths)
                    entry["floor_5p_over_7"] = *row.five_sevenths;
                rows.push_back(entry);
            }
            result["gp"] = rows;
        }
        result["timeouts"] = report.timeouts;
        auto errors = nlohmann::ordered_json::array();
        for (const auto & e : report.errors)
            errors.push_back({{"line", e.line}, {"message", e.message}});
        result["errors"] = errors;
        if (include_elapsed)
            result["elapsed_ms"] = report.elapsed.count();
        return result;
    }

    auto to_tsv(const Report & report) -> string
    {
        std::ostringstream out;
        out << "suite\ttotal\tskipped\tconforming\tviolations\texceptions_found\textremal\ttimeouts\terrors\n";
        out << report.suite << '\t' << report.total << '\t' << report.skipped << '\t' << report.conforming << '\t'
            << report.violations.size() << '\t' << report.exceptions_found.size() << '\t' << report.extremal.size()
            << '\t' << report.timeouts.size() << '\t' << report.errors.size() << '\n';
        return out.str();
    }
}
