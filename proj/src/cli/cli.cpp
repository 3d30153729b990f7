#include <pdom/alpha.hpp>
#include <pdom/catalog.hpp>
#include <pdom/classify.hpp>
#include <pdom/cli.hpp>
#include <pdom/construct.hpp>
#include <pdom/domination.hpp>
#include <pdom/generators.hpp>
#include <pdom/graph6.hpp>
#include <pdom/isomorphism.hpp>
#include <pdom/packing.hpp>
#include <pdom/verify.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

using std::function;
using std::int64_t;
using std::istream;
using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace pdom::cli
{
    namespace
    {
        constexpr int exit_ok = 0;
        constexpr int exit_failure = 1;
        constexpr int exit_usage = 2;
        constexpr int exit_parse = 3;

        struct GlobalOptions
        {
            int jobs = 1;
            string output = "json";
            optional<int64_t> timeout_ms;

            auto limits() const -> SearchLimits
            {
                return timeout_ms ? SearchLimits::with_timeout(std::chrono::milliseconds(*timeout_ms)) : SearchLimits{};
            }
        };

        struct Line
        {
            string text;
            int64_t number;
        };

        /// Output text for one input line and the exit status it implies.
        struct LineResult
        {
            string text;
            int status = exit_ok;
        };

        auto combine_status(int a, int b) -> int
        {
            if (a == exit_failure || b == exit_failure)
                return exit_failure;
            return std::max(a, b);
        }

        /**
         * Stream the input in batches, map each nonempty line with up to `jobs`
         * threads and hand the results to `sink` in input order.
         */
        template <typename Result>
        auto map_lines(istream & in, int jobs, const function<Result(const Line &)> & work,
            const function<void(const Result &)> & sink) -> void
        {
            const std::size_t batch_size = 256 * static_cast<std::size_t>(jobs);
            int64_t number = 0;
            string text;
            bool more = true;
            while (more) {
                vector<Line> batch;
                while (batch.size() < batch_size && (more = static_cast<bool>(std::getline(in, text)))) {
                    ++number;
                    if (! text.empty() && text.back() == '\r')
                        text.pop_back();
                    if (! text.empty())
                        batch.push_back({text, number});
                }
                vector<Result> results(batch.size());
                if (jobs <= 1 || batch.size() <= 1) {
                    for (std::size_t i = 0; i < batch.size(); ++i)
                        results[i] = work(batch[i]);
                }
                else {
                    std::atomic<std::size_t> next{0};
                    vector<std::jthread> workers;
                    for (int t = 0; t < jobs; ++t)
                        workers.emplace_back([&] {
                            for (std::size_t i; (i = next++) < batch.size();)
                                results[i] = work(batch[i]);
                        });
                }
                for (const auto & r : results)
                    sink(r);
            }
        }

        auto error_line(const Line & line, const string & message) -> string
        {
            nlohmann::ordered_json j;
            j["line"] = line.number;
            j["error"] = message;
            return j.dump();
        }

        /// Parse a line and run `body`, mapping library exceptions to exit statuses.
        auto guarded(const Line & line, const function<string(const Graph &)> & body) -> LineResult
        {
            optional<Graph> g;
            try {
                g = parse_graph6(line.text);
            }
            catch (const Error & e) {
                return {error_line(line, e.what()), exit_parse};
            }
            try {
                return {body(*g), exit_ok};
            }
            catch (const TimeoutError &) {
                return {error_line(line, "timeout"), exit_failure};
            }
            catch (const Error & e) {
                return {error_line(line, e.what()), exit_failure};
            }
        }

        auto certificate_tsv(const string & graph6, const Certificate & c) -> string
        {
            std::ostringstream out;
            out << graph6 << '\t' << kind_name(c.kind) << '\t' << c.value << '\t' << c.coverage << '\t';
            bool first = true;
            for (auto v : c.witness) {
                out << (first ? "" : ",") << v;
                first = false;
            }
            return out.str();
        }

        /// Run `body` over every input file (or standard input), printing one line per graph.
        auto per_graph(const vector<string> & files, istream & in, ostream & out, ostream & err,
            const GlobalOptions & options, const function<string(const Graph &, const string &)> & body) -> int
        {
            int status = exit_ok;
            auto process = [&](istream & stream) {
                map_lines<LineResult>(
                    stream, options.jobs,
                    [&](const Line & line) { return guarded(line, [&](const Graph & g) { return body(g, line.text); }); },
                    [&](const LineResult & r) {
                        out << r.text << '\n';
                        status = combine_status(status, r.status);
                    });
            };
            if (files.empty())
                process(in);
            for (const auto & file : files) {
                if (file == "-") {
                    process(in);
                    continue;
                }
                std::ifstream stream(file);
                if (! stream) {
                    err << "cannot open " << file << '\n';
                    return exit_usage;
                }
                process(stream);
            }
            return status;
        }

        auto stats_json(const GraphClass & c) -> nlohmann::ordered_json
        {
            nlohmann::ordered_json j;
            j["n"] = c.order;
            j["min_degree"] = c.min_degree;
            j["max_degree"] = c.max_degree;
            j["is_cubic"] = c.is_cubic;
            j["is_supercubic"] = c.is_supercubic;
            j["is_connected"] = c.is_connected;
            if (c.girth)
                j["girth"] = *c.girth;
            else
                j["girth"] = nullptr;
            return j;
        }

        auto run_verify(const string & suite_spec, const vector<string> & files, bool timing, istream & in,
            ostream & out, ostream & err, const GlobalOptions & options) -> int
        {
            VerifyOptions verify_options;
            if (options.timeout_ms)
                verify_options.timeout = std::chrono::milliseconds(*options.timeout_ms);

            Report report;
            auto start = std::chrono::steady_clock::now();
            if (suite_spec.starts_with("gp:")) {
                int p_min = 0, p_max = 0;
                char sep1 = 0, sep2 = 0;
                std::istringstream spec(suite_spec.substr(2));
                if (! (spec >> sep1 >> p_min >> sep2 >> p_max) || sep1 != ':' || sep2 != ':' || ! spec.eof()) {
                    err << "suite must look like gp:PMIN:PMAX\n";
                    return exit_usage;
                }
                try {
                    report = check_gp_formula(p_min, p_max, verify_options);
                }
                catch (const RangeError & e) {
                    err << e.what() << '\n';
                    return exit_usage;
                }
            }
            else {
                auto suite = parse_suite(suite_spec);
                if (! suite) {
                    err << "unknown suite " << suite_spec << '\n';
                    return exit_usage;
                }
                if (files.empty()) {
                    err << "verify --suite " << suite_spec << " needs a corpus path (- for standard input)\n";
                    return exit_usage;
                }
                SuiteChecker checker(*suite, verify_options);
                report = checker.empty_report();
                for (const auto & file : files) {
                    std::ifstream stream;
                    if (file != "-") {
                        stream.open(file);
                        if (! stream) {
                            err << "cannot open " << file << '\n';
                            return exit_usage;
                        }
                    }
                    map_lines<Report>(
                        file == "-" ? in : stream, options.jobs,
                        [&](const Line & line) { return checker.check(line.text, line.number); },
                        [&](const Report & r) { report.merge(r); });
                }
            }
            report.elapsed =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

            if (options.output == "tsv")
                out << to_tsv(report);
            else
                out << to_json(report, timing).dump() << '\n';
            for (const auto & e : report.errors)
                err << "line " << e.line << ": " << e.message << '\n';
            err << report.suite << ": " << report.total << " checked, " << report.violations.size() << " violations, "
                << report.elapsed.count() << " ms\n";
            return report.exit_code();
        }
    }

    auto run(const vector<string> & args, istream & in, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Exact domination, partial domination and packing for graphs of minimum degree at least 3",
            "pdom"};
        app.require_subcommand(1);
        app.fallthrough();

        GlobalOptions options;
        app.add_option("--jobs", options.jobs, "Worker threads")->check(CLI::Range(1, 1024));
        app.add_option("--output", options.output, "Output format")->check(CLI::IsMember({"json", "tsv"}));
        app.add_option("--timeout-ms", options.timeout_ms, "Per-graph search deadline in milliseconds")
            ->check(CLI::PositiveNumber);

        vector<string> files;
        auto add_files = [&](CLI::App * sub) {
            sub->add_option("files", files, "graph6 files, one graph per line (default: standard input)");
        };

        auto gamma = app.add_subcommand("gamma", "Minimum dominating set");
        add_files(gamma);

        string alpha_text;
        auto pd = app.add_subcommand("pd", "Minimum alpha-partial dominating set");
        pd->add_option("--alpha", alpha_text, "Threshold P/Q")->required();
        add_files(pd);

        auto rho = app.add_subcommand("rho", "Maximum packing");
        add_files(rho);

        string regime_text;
        auto construct = app.add_subcommand("construct", "At most n/3 vertices dominating alpha*n");
        construct->add_option("--regime", regime_text, "generic78, cubic1314 or super910")
            ->required()
            ->check(CLI::IsMember({"generic78", "cubic1314", "super910"}));
        add_files(construct);

        auto stats = app.add_subcommand("stats", "Degree, connectivity and girth summary");
        add_files(stats);

        string named;
        vector<int> gp_params;
        vector<int> random_params;
        std::uint64_t seed = 0;
        bool connected = false;
        auto gen = app.add_subcommand("gen", "Emit a graph6 line");
        auto named_opt = gen->add_option("--named", named, "Catalog graph");
        auto gp_opt = gen->add_option("--gp", gp_params, "Generalized Petersen P(p, k)")->expected(2);
        auto random_opt = gen->add_option("--random-cubic", random_params, "Random cubic graph order")->expected(1);
        gen->add_option("--seed", seed, "Random seed");
        gen->add_flag("--connected", connected, "Resample until connected");
        named_opt->excludes(gp_opt)->excludes(random_opt);
        gp_opt->excludes(random_opt);

        string suite_spec;
        bool timing = false;
        auto verify = app.add_subcommand("verify", "Run a verification suite over a corpus");
        verify->add_option("--suite", suite_spec, "reed, ks, favaron, cubic14, largedom, extremal or gp:PMIN:PMAX")
            ->required();
        verify->add_flag("--timing", timing, "Include elapsed_ms in the JSON report");
        add_files(verify);

        vector<string> iso_inputs;
        auto iso = app.add_subcommand("iso", "Isomorphism test for two graphs (orders up to 32)");
        iso->add_option("graphs", iso_inputs, "Two graph6 strings (missing ones are read from standard input)")
            ->expected(0, 2);

        vector<const char *> argv{"pdom"};
        for (const auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << e.what() << '\n';
            return exit_usage;
        }

        bool json = options.output == "json";

        if (gamma->parsed() || rho->parsed() || pd->parsed()) {
            optional<AlphaThreshold> alpha;
            if (pd->parsed()) {
                try {
                    alpha = AlphaThreshold::parse(alpha_text);
                }
                catch (const Error & e) {
                    err << e.what() << '\n';
                    return exit_usage;
                }
            }
            return per_graph(files, in, out, err, options, [&](const Graph & g, const string & text) {
                auto local = options.limits();
                auto certificate = alpha ? pd_exact(g, *alpha, local) : rho->parsed() ? rho_exact(g, local) : gamma_exact(g, local);
                return json ? to_json(certificate).dump() : certificate_tsv(text, certificate);
            });
        }

        if (construct->parsed()) {
            auto regime = *parse_regime(regime_text);
            return per_graph(files, in, out, err, options, [&](const Graph & g, const string & text) {
                auto c = one_third_construct(g, regime);
                if (json)
                    return to_json(c).dump();
                return text + '\t' + string(regime_name(regime)) + '\t' + std::to_string(c.value) + '\t' +
                    std::to_string(c.coverage) + '\t' + (c.guarantee_chain_verified ? "verified" : "gated");
            });
        }

        if (stats->parsed())
            return per_graph(files, in, out, err, options, [&](const Graph & g, const string & text) {
                auto c = classify(g);
                if (json)
                    return stats_json(c).dump();
                std::ostringstream row;
                row << text << '\t' << c.order << '\t' << c.min_degree << '\t' << c.max_degree << '\t' << c.is_cubic
                    << '\t' << c.is_supercubic << '\t' << c.is_connected << '\t'
                    << (c.girth ? std::to_string(*c.girth) : "inf");
                return row.str();
            });

        if (gen->parsed()) {
            try {
                optional<Graph> g;
                if (! named.empty()) {
                    auto id = named_graph_id(named);
                    if (! id) {
                        err << "unknown named graph " << named << '\n';
                        return exit_usage;
                    }
                    g = named_graph(*id);
                }
                else if (! gp_params.empty())
                    g = generalized_petersen(gp_params[0], gp_params[1]);
                else if (! random_params.empty())
                    g = random_cubic(random_params[0], seed, connected);
                else {
                    err << "gen needs --named, --gp or --random-cubic\n";
                    return exit_usage;
                }
                out << write_graph6(*g) << '\n';
                return exit_ok;
            }
            catch (const Error & e) {
                err << e.what() << '\n';
                return exit_usage;
            }
        }

        if (verify->parsed())
            return run_verify(suite_spec, files, timing, in, out, err, options);

        if (iso->parsed()) {
            string line;
            while (iso_inputs.size() < 2 && std::getline(in, line))
                if (! line.empty())
                    iso_inputs.push_back(line);
            if (iso_inputs.size() < 2) {
                err << "iso needs two graph6 inputs\n";
                return exit_usage;
            }
            try {
                auto g = parse_graph6(iso_inputs[0]);
                auto h = parse_graph6(iso_inputs[1]);
                bool same = is_isomorphic(g, h);
                if (json) {
                    nlohmann::ordered_json j;
                    j["isomorphic"] = same;
                    out << j.dump() << '\n';
                }
                else
                    out << (same ? "true" : "false") << '\n';
                return exit_ok;
            }
            catch (const ParseError & e) {
                err << e.what() << '\n';
                return exit_parse;
            }
            catch (const Error & e) {
                err << e.what() << '\n';
                return exit_failure;
            }
        }

        return exit_usage;
    }
}
