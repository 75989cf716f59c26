#include <cliquepoly/bounds.hh>
#include <cliquepoly/cli.hh>
#include <cliquepoly/cliques.hh>
#include <cliquepoly/equality.hh>
#include <cliquepoly/errors.hh>
#include <cliquepoly/oracle.hh>
#include <cliquepoly/report.hh>
#include <cliquepoly/symmetrizer.hh>
#include <cliquepoly/weighted.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using std::ostream;
using std::string;
using std::vector;

namespace cliquepoly::cli
{
    using report::Json;

    namespace
    {
        // Thrown for bad levels or missing options, mapped to exit code 1.
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Emitter
        {
            OutputFormat format;
            ostream & out;

            auto record(const Json & j) -> void
            {
                if (format == OutputFormat::JsonLines)
                    out << j.dump() << "\n";
            }

            auto records(const vector<Json> & js) -> void
            {
                for (auto & j : js)
                    record(j);
            }

            auto text(const string & s) -> void
            {
                if (format == OutputFormat::Text)
                    out << s;
            }
        };

        auto require_level(const std::optional<int> & level, const char * name) -> int
        {
            if (! level)
                throw UsageError(string("missing --") + name);
            return *level;
        }

        auto check_level_range(int s, int lo, int hi, const char * name) -> void
        {
            if (s < lo || s > hi)
                throw UsageError(string("--") + name + " " + std::to_string(s) + " outside " + std::to_string(lo) + ".." + std::to_string(hi)
                    + " for this graph");
        }

        auto parse_count(const std::optional<string> & text, const char * name) -> Integer
        {
            if (! text)
                throw UsageError(string("missing --") + name);
            Integer value;
            bool digits = ! text->empty() && text->find_first_not_of("0123456789") == string::npos;
            if (! digits || value.set_str(*text, 10) != 0)
                throw UsageError(string("--") + name + " must be a nonnegative integer");
            return value;
        }

        auto load_weights(const RunConfig & config, const Graph & g) -> WeightVector
        {
            return config.weights_path ? read_weights_file(*config.weights_path, g.order()) : unit_weights(g.order());
        }

        auto graph_text(const Graph & g) -> string
        {
            return "graph: n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + "\n";
        }

        auto run_count(const RunConfig & config, Emitter & emit) -> int
        {
            auto g = read_edge_list_file(config.graph_path);
            auto counts = count_cliques_all(g, config.threads);
            emit.record(report::graph_record(g));
            emit.record(report::counts_record(counts));
            emit.text(graph_text(g) + report::counts_text(counts));
            return exit_code::ok;
        }

        auto run_chain(const RunConfig & config, Emitter & emit) -> int
        {
            auto g = read_edge_list_file(config.graph_path);
            auto chain = config.weights_path
                ? verify_chain(g, load_weights(config, g), config.threads)
                : verify_combinatorial_chain(g, config.threads);
            emit.record(report::graph_record(g));
            emit.records(report::chain_records(chain));
            emit.text(graph_text(g) + report::chain_text(chain));
            return chain.violated() ? exit_code::inconsistency : exit_code::ok;
        }

        auto run_maximize(const RunConfig & config, Emitter & emit) -> int
        {
            auto g = read_edge_list_file(config.graph_path);
            int omega = clique_number(g);
            int s = require_level(config.s, "s");
            if (omega < 2)
                throw UsageError("maximize needs a graph with at least one edge");
            check_level_range(s, 1, omega - 1, "s");

            auto x = load_weights(config, g);
            auto trace = symmetrize(g, x, s);
            emit.record(report::graph_record(g));
            emit.records(report::trace_records(trace));
            emit.record(report::maximum_record(omega, trace));
            emit.text(graph_text(g) + report::trace_text(trace) + report::maximum_text(omega, trace));

            auto final = normalized_objective(trace.f_s_final, trace.f_next_final, s);
            return final.compare(max_f_next(omega, s)) == Ordering::Greater ? exit_code::inconsistency : exit_code::ok;
        }

        auto run_equality(const RunConfig & config, Emitter & emit) -> int
        {
            auto g = read_edge_list_file(config.graph_path);
            if (! config.weights_path)
                throw UsageError("equality needs --weights");
            int omega = clique_number(g);
            int s = require_level(config.s, "s");
            if (omega < 2)
                throw UsageError("equality needs a graph with at least one edge");
            check_level_range(s, 1, omega - 1, "s");

            auto r = check_equality_conditions(g, load_weights(config, g), s);
            emit.record(report::graph_record(g));
            emit.record(report::equality_record(r));
            emit.text(graph_text(g) + report::equality_text(r));
            return r.theorem_consistent ? exit_code::ok : exit_code::inconsistency;
        }

        auto run_bounds(const RunConfig & config, Emitter & emit) -> int
        {
            int omega = require_level(config.omega, "omega");
            int s = require_level(config.s, "s");
            int t = require_level(config.t, "t");
            if (s < 1 || t <= s || t > omega)
                throw UsageError("bounds needs 1 <= s < t <= omega");
            if (config.ks && config.kt)
                throw UsageError("give only one of --ks and --kt");

            auto r = config.kt ? lower_bound_count(omega, s, t, parse_count(config.kt, "kt"))
                               : bound_count(omega, s, parse_count(config.ks, "ks"), t);
            emit.record(report::bound_record(r));
            emit.text(report::bound_text(r));
            return verify_certificate(r) ? exit_code::ok : exit_code::inconsistency;
        }

        auto run_blowup(const RunConfig & config, ostream & out) -> int
        {
            auto g = read_edge_list_file(config.graph_path);
            if (! config.multiplicities_path)
                throw UsageError("blowup needs --multiplicities");
            auto m = read_multiplicities_file(*config.multiplicities_path, g.order());
            auto b = blow_up(g, m);
            out << "# blow-up of a " << g.order() << "-vertex graph; class lines map new id -> original id\n";
            for (std::size_t v = 0; v < b.class_of.size(); ++v)
                out << "# class " << v + 1 << " " << b.class_of[v] + 1 << "\n";
            out << write_edge_list(b.graph);
            return exit_code::ok;
        }

        struct Checker
        {
            Emitter & emit;
            int failures = 0, total = 0;

            auto check(const string & name, bool ok, const string & detail = "") -> void
            {
                ++total;
                failures += ! ok;
                Json j{{"section", "check"}, {"name", name}, {"ok", ok}};
                if (! detail.empty())
                    j["detail"] = detail;
                emit.record(j);
                emit.text(string(ok ? "ok    " : "FAIL  ") + name + (detail.empty() ? "" : "  (" + detail + ")") + "\n");
            }
        };

        auto run_verify(const RunConfig & config, Emitter & emit) -> int
        {
            auto g = read_edge_list_file(config.graph_path);
            auto x = load_weights(config, g);
            emit.record(report::graph_record(g));
            emit.text(graph_text(g));
            Checker c{emit};

            auto counts = count_cliques_all(g, 1);
            int omega = clique_number(g);
            c.check("clique number agrees with counts", counts.omega == omega);
            c.check("counts independent of thread count", count_cliques_all(g, config.threads).counts == counts.counts);
            for (int s = 1; s <= omega; ++s)
                c.check("k_" + std::to_string(s) + " matches enumeration",
                    counts.k(s) == Integer{static_cast<unsigned long>(enumerate_cliques(g, s).size())});

            CliqueTable table(g);
            for (int s = 1; s <= omega; ++s)
                c.check("f_" + std::to_string(s) + " streaming and tabulated evaluation agree", f_s(g, x, s, config.threads) == table.evaluate(x, s));

            c.check("combinatorial chain has no violated level", ! verify_combinatorial_chain(g).violated());
            bool any_positive = false;
            for (auto & w : x)
                any_positive = any_positive || w > 0;
            if (any_positive)
                c.check("weighted chain has no violated level", ! verify_chain(g, x).violated());

            for (int s = 1; s < omega; ++s) {
                if (table.evaluate(x, s) == 0)
                    continue;
                auto trace = symmetrize(g, x, s);
                auto replay = replay_trace(g, trace);
                c.check("trace at s=" + std::to_string(s) + " replays", replay.ok, replay.failure);
                c.check("trace at s=" + std::to_string(s) + " stays within the certified maximum",
                    normalized_objective(trace.f_s_final, trace.f_next_final, s).compare(max_f_next(omega, s)) != Ordering::Greater);
            }

            bool strictly_positive = true;
            for (auto & w : x)
                strictly_positive = strictly_positive && w > 0;
            if (strictly_positive)
                for (int s = 1; s < omega; ++s)
                    c.check("equality characterization consistent at s=" + std::to_string(s), check_equality_conditions(g, x, s).theorem_consistent);

            for (int s = 1; s <= omega; ++s)
                for (int t = s + 1; t <= omega; ++t) {
                    auto b = bound_count(omega, s, counts.k(s), t);
                    c.check("k_" + std::to_string(t) + " within the bound from k_" + std::to_string(s),
                        counts.k(t) <= b.bound && verify_certificate(b));
                }

            if (config.trace_path) {
                std::ifstream in(*config.trace_path);
                if (! in)
                    throw InputError("cannot open trace file '" + *config.trace_path + "'");
                vector<Json> records;
                string line;
                int line_no = 0;
                while (std::getline(in, line)) {
                    ++line_no;
                    if (line.empty())
                        continue;
                    try {
                        records.push_back(Json::parse(line));
                    }
                    catch (const Json::parse_error &) {
                        throw InputError(*config.trace_path + ": malformed JSON", line_no);
                    }
                }
                auto replay = replay_trace(g, report::trace_from_records(records));
                c.check("supplied trace replays", replay.ok, replay.failure);
            }

            if (config.oracle) {
                if (g.order() <= oracle::max_enumeration_order) {
                    c.check("clique number matches brute force", oracle::brute_force_clique_number(g) == omega);
                    for (int s = 1; s <= omega; ++s) {
                        c.check("s=" + std::to_string(s) + " cliques match brute force", oracle::brute_force_cliques(g, s) == enumerate_cliques(g, s));
                        c.check("f_" + std::to_string(s) + " matches brute force", oracle::brute_force_f(g, x, s) == f_s(g, x, s));
                    }
                }
                else
                    c.check("brute-force comparison skipped (more than 14 vertices)", true);

                if (g.order() <= 6)
                    for (int s = 1; s < omega; ++s) {
                        auto grid = oracle::grid_search_max(g, s);
                        c.check("grid maximum at s=" + std::to_string(s) + " within the certified maximum",
                            grid.value.compare(max_f_next(omega, s)) != Ordering::Greater, grid.value.to_string());
                    }
                else
                    c.check("grid search skipped (more than 6 vertices)", true);
            }

            emit.record(Json{{"section", "verify"}, {"checks", c.total}, {"failures", c.failures}});
            emit.text(std::to_string(c.total - c.failures) + "/" + std::to_string(c.total) + " checks passed\n");
            return c.failures == 0 ? exit_code::ok : exit_code::inconsistency;
        }
    }

    auto run(const RunConfig & config, ostream & out, ostream & err) -> int
    {
        Emitter emit{config.format, out};
        try {
            switch (config.command) {
                case Command::Count: return run_count(config, emit);
                case Command::Chain: return run_chain(config, emit);
                case Command::Maximize: return run_maximize(config, emit);
                case Command::Equality: return run_equality(config, emit);
                case Command::Bounds: return run_bounds(config, emit);
                case Command::Blowup: return run_blowup(config, out);
                case Command::Verify: return run_verify(config, emit);
            }
        }
        catch (const UsageError & e) {
            err << "usage error: " << e.what() << "\n";
            return exit_code::usage;
        }
        catch (const InputError & e) {
            err << "input error: " << e.what() << "\n";
            return exit_code::input;
        }
        catch (const DomainError & e) {
            err << "input error: " << e.what() << "\n";
            return exit_code::input;
        }
        return exit_code::usage;
    }

    auto run_command_line(int argc, char ** argv, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Weighted clique polynomials: exact Maclaurin chains, constrained maxima and clique-count bounds"};
        app.require_subcommand(1);
        app.fallthrough();

        RunConfig config;
        string format = "text";
        app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json-lines"}));
        app.add_option("--threads", config.threads, "Worker threads for clique enumeration")->check(CLI::Range(1u, 256u));

        auto graph_arg = [&](CLI::App * sub) { sub->add_option("graph", config.graph_path, "Edge-list file")->required(); };

        auto count = app.add_subcommand("count", "Clique number and clique counts k_1..k_omega");
        graph_arg(count);

        auto chain = app.add_subcommand("chain", "Exact verdicts for the chain of normalized clique-polynomial means");
        graph_arg(chain);
        chain->add_option("--weights", config.weights_path, "Weights file (default: unit weights)");

        auto maximize = app.add_subcommand("maximize", "Weight-shifting trace towards a clique support, with the certified maximum");
        graph_arg(maximize);
        maximize->add_option("--s", config.s, "Level s (1 <= s < omega)")->required();
        maximize->add_option("--weights", config.weights_path, "Weights file (default: unit weights)");

        auto equality = app.add_subcommand("equality", "Decide whether the chain is tight at level s");
        graph_arg(equality);
        equality->add_option("--s", config.s, "Level s (1 <= s < omega)")->required();
        equality->add_option("--weights", config.weights_path, "Weights file, strictly positive")->required();

        auto bounds = app.add_subcommand("bounds", "Clique-count bound between levels s < t");
        bounds->add_option("--omega", config.omega, "Clique number")->required();
        bounds->add_option("--s", config.s, "Lower level")->required();
        bounds->add_option("--t", config.t, "Upper level")->required();
        auto ks = bounds->add_option("--ks", config.ks, "Given k_s: bound k_t from above");
        auto kt = bounds->add_option("--kt", config.kt, "Given k_t: bound k_s from below");
        ks->excludes(kt);

        auto blowup = app.add_subcommand("blowup", "Write the blow-up graph as an edge list");
        graph_arg(blowup);
        blowup->add_option("--multiplicities", config.multiplicities_path, "Multiplicities file")->required();

        auto verify = app.add_subcommand("verify", "Self-consistency checks, optionally against brute-force oracles");
        graph_arg(verify);
        verify->add_flag("--oracle", config.oracle, "Also compare with brute-force oracles");
        verify->add_option("--weights", config.weights_path, "Weights file (default: unit weights)");
        verify->add_option("--trace", config.trace_path, "Replay a json-lines trace written by maximize");

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp & e) {
            out << app.help();
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
            return exit_code::usage;
        }

        config.format = format == "json-lines" ? OutputFormat::JsonLines : OutputFormat::Text;
        if (count->parsed())
            config.command = Command::Count;
        else if (chain->parsed())
            config.command = Command::Chain;
        else if (maximize->parsed())
            config.command = Command::Maximize;
        else if (equality->parsed())
            config.command = Command::Equality;
        else if (bounds->parsed())
            config.command = Command::Bounds;
        else if (blowup->parsed())
            config.command = Command::Blowup;
        else
            config.command = Command::Verify;

        return run(config, out, err);
    }
}
