// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support/corpus.hh"

#include <cliquepoly/bounds.hh>
#include <cliquepoly/cli.hh>
#include <cliquepoly/cliques.hh>
#include <cliquepoly/equality.hh>
#include <cliquepoly/oracle.hh>
#include <cliquepoly/symmetrizer.hh>
#include <cliquepoly/weighted.hh>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace cliquepoly;
using namespace cliquepoly::testing;
using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        bool pass = true;
        string detail;
        string first_failure;

        auto fail(const string & why) -> void
        {
            if (pass)
                first_failure = why;
            pass = false;
        }
    };

    auto describe(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "n=" << g.order();
        for (auto [u, v] : g.edges())
            out << " " << u + 1 << "-" << v + 1;
        return out.str();
    }

    auto describe(const WeightVector & x) -> string
    {
        string out = "(";
        for (std::size_t i = 0; i < x.size(); ++i)
            out += (i ? "," : "") + x[i].get_str();
        return out + ")";
    }

    auto nonzero_weights(Rng & rng, int n) -> WeightVector
    {
        while (true) {
            auto x = random_weights(rng, n);
            for (auto & w : x)
                if (w > 0)
                    return x;
        }
    }

    // the chain corpus: every catalog graph (n <= 7) plus random graphs on 8 vertices
    auto chain_corpus() -> vector<Graph>
    {
        vector<Graph> corpus = catalog();
        Rng rng(8001);
        for (int i = 0; i < 120; ++i)
            corpus.push_back(random_graph(rng, 8, 1 + i % 5, 6));
        for (int w = 5; w <= 8; ++w)
            corpus.push_back(graphs::complete(w));
        return corpus;
    }

    auto chain_validity() -> Outcome
    {
        Outcome o;
        auto corpus = chain_corpus();
        Rng rng(1001);
        long checked = 0, levels = 0, strict = 0, equal = 0;
        for (auto & g : corpus) {
            CliqueTable table(g);
            for (int trial = 0; trial < 200; ++trial) {
                auto x = nonzero_weights(rng, g.order());
                auto chain = verify_chain(table, x);
                if (trial == 0 && verify_chain(g, x).f != chain.f)
                    o.fail("tabulated and streaming chains disagree on " + describe(g));
                for (auto & level : chain.levels) {
                    ++levels;
                    strict += level.verdict == Verdict::Strict;
                    equal += level.verdict == Verdict::Equal;
                    if (level.verdict == Verdict::Violated)
                        o.fail("violated at s=" + std::to_string(level.s) + " on " + describe(g) + " x=" + describe(x));
                }
                ++checked;
            }
        }
        o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(checked) + " weight vectors, " + std::to_string(levels)
            + " levels (" + std::to_string(strict) + " strict, " + std::to_string(equal) + " equal, 0 violated allowed)";
        return o;
    }

    auto combinatorial_chain() -> Outcome
    {
        Outcome o;
        auto corpus = chain_corpus();
        long levels = 0;
        for (auto & g : corpus) {
            auto chain = verify_combinatorial_chain(g);
            levels += long(chain.levels.size());
            if (chain.violated())
                o.fail("violated on " + describe(g));
        }
        for (int w = 1; w <= 8; ++w) {
            auto chain = verify_combinatorial_chain(graphs::complete(w));
            if (chain.omega != w || int(chain.levels.size()) != w - 1)
                o.fail("K_" + std::to_string(w) + " has the wrong number of levels");
            for (auto & level : chain.levels)
                if (level.verdict != Verdict::Equal)
                    o.fail("K_" + std::to_string(w) + " not Equal at s=" + std::to_string(level.s));
        }

        // goldens
        auto verdicts = [](const Graph & g) {
            vector<Verdict> v;
            for (auto & level : verify_combinatorial_chain(g).levels)
                v.push_back(level.verdict);
            return v;
        };
        vector<Edge> pendant{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
        if (verdicts(graphs::cycle(5)) != vector{Verdict::Strict})
            o.fail("C_5 golden");
        if (verdicts(graphs::cycle(4)) != vector{Verdict::Equal})
            o.fail("K_{2,2} golden");
        if (verdicts(graphs::petersen()) != vector{Verdict::Strict})
            o.fail("Petersen golden");
        if (verdicts(Graph(4, pendant)) != vector{Verdict::Strict, Verdict::Strict})
            o.fail("triangle plus pendant golden");

        o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(levels) + " levels; K_1..K_8 all Equal; 4 goldens";
        return o;
    }

    auto closed_form() -> Outcome
    {
        Outcome o;
        if (max_f_next(2, 1).compare(Rational{1, 4}) != Ordering::Equal)
            o.fail("max_f_next(2,1) != 1/4");
        for (unsigned long s = 1; s <= 6; ++s) {
            // (s+1)^(-(s+1)/s) = ((s+1)^(-(s+1)))^(1/s)
            CertifiedValue expected{Rational{1} / pow(Rational{long(s + 1)}, s + 1), s};
            if (max_f_next(int(s) + 1, int(s)).compare(expected) != Ordering::Equal)
                o.fail("max_f_next(" + std::to_string(s + 1) + "," + std::to_string(s) + ") != (s+1)^(-(s+1)/s)");
        }
        auto grid = oracle::grid_search_max(graphs::complete(2), 1, oracle::GridSpec{24, 6});
        if (grid.value.compare(Rational{1, 4}) != Ordering::Equal)
            o.fail("grid maximum on K_2 is " + grid.value.to_string());
        if (grid.witness != WeightVector{Rational{1, 2}, Rational{1, 2}})
            o.fail("grid witness on K_2 is " + describe(grid.witness));
        o.detail = "max_f_next(2,1) = 1/4, s = 1..6 closed forms equal, grid on K_2 at d=24 gives " + grid.value.to_string();
        return o;
    }

    auto symmetrizer_soundness() -> Outcome
    {
        Outcome o;
        Rng rng(4001);
        long traces = 0, steps = 0, replays = 0;
        for (auto & g : catalog()) {
            int omega = clique_number(g);
            int n = g.order();
            for (int trial = 0; trial < 100; ++trial) {
                auto x = nonzero_weights(rng, n);
                for (int s = 1; s < omega; ++s) {
                    CliqueTable table(g);
                    if (table.evaluate(x, s) == 0)
                        continue;
                    auto trace = symmetrize(g, x, s);
                    ++traces;
                    steps += long(trace.steps.size());
                    auto where = " (s=" + std::to_string(s) + ", " + describe(g) + ", x=" + describe(x) + ")";

                    if (int(trace.steps.size()) > n)
                        o.fail("more than n steps" + where);
                    for (auto & step : trace.steps) {
                        if (step.f_s_after != step.f_s_before)
                            o.fail("f_s changed" + where);
                        if (step.f_next_after < step.f_next_before)
                            o.fail("f_{s+1} decreased" + where);
                    }
                    if (trace.f_s_final != trace.f_s_initial || trace.f_next_final < trace.f_next_initial)
                        o.fail("endpoint values" + where);
                    if (trace.final_support.empty() || ! g.is_clique(trace.final_support))
                        o.fail("support is not a clique" + where);
                    if (table.evaluate(trace.final_weights, s) != trace.f_s_final || table.evaluate(trace.final_weights, s + 1) != trace.f_next_final)
                        o.fail("recorded final values disagree with the final weights" + where);
                    auto bound = max_f_next(omega, s);
                    if (normalized_objective(trace.f_s_final, trace.f_next_final, s).compare(bound) == Ordering::Greater)
                        o.fail("final objective exceeds the maximum" + where);
                    if (normalized_objective(trace.f_s_initial, trace.f_next_initial, s).compare(bound) == Ordering::Greater)
                        o.fail("initial objective exceeds the maximum" + where);
                    if (trial < 3) {
                        ++replays;
                        auto replay = replay_trace(g, trace);
                        if (! replay.ok)
                            o.fail("replay: " + replay.failure + where);
                    }
                }
            }
        }
        o.detail = std::to_string(catalog().size()) + " graphs, " + std::to_string(traces) + " traces, " + std::to_string(steps) + " steps, "
            + std::to_string(replays) + " independent replays";
        return o;
    }

    // all multisets of 1..4 part sizes drawn from 1..3
    auto multipartite_family() -> vector<vector<int>>
    {
        vector<vector<int>> family;
        vector<int> sizes;
        std::function<void(int)> grow = [&](int largest) {
            if (! sizes.empty())
                family.push_back(sizes);
            if (sizes.size() == 4)
                return;
            for (int size = largest; size >= 1; --size) {
                sizes.push_back(size);
                grow(size);
                sizes.pop_back();
            }
        };
        grow(3);
        return family;
    }

    // positive weights on `members` summing to `total`
    auto spread(Rng & rng, WeightVector & x, const vector<Vertex> & members, const Rational & total) -> void
    {
        Rational sum = 0;
        for (auto v : members) {
            x[v] = random_rational(rng, 1, 9, 6);
            sum += x[v];
        }
        for (auto v : members) {
            x[v] = x[v] * total / sum;
            x[v].canonicalize();
        }
    }

    auto equality_consistency() -> Outcome
    {
        Outcome o;
        Rng rng(5001);
        long balanced = 0, perturbed = 0, general = 0, crafted = 0, equal_seen = 0;

        for (auto & sizes : multipartite_family()) {
            auto g = graphs::complete_multipartite(sizes);
            auto parts = *is_complete_multipartite(g);
            int omega = int(sizes.size());
            for (int trial = 0; trial < 10; ++trial) {
                WeightVector x(g.order());
                auto total = random_rational(rng, 1, 9, 6);
                for (auto & part : parts)
                    spread(rng, x, part.members(), total);
                ++balanced;
                for (auto & level : verify_chain(g, x).levels)
                    if (level.verdict != Verdict::Equal)
                        o.fail("balanced weights not Equal at s=" + std::to_string(level.s) + " on " + describe(g) + " x=" + describe(x));
                for (int s = 1; s < omega; ++s) {
                    auto r = check_equality_conditions(g, x, s);
                    if (! r.chain_equal || ! r.structure_ok || ! r.balanced || ! r.theorem_consistent)
                        o.fail("balanced report at s=" + std::to_string(s) + " on " + describe(g));
                }

                for (Vertex v = 0; v < g.order(); ++v) {
                    auto y = x;
                    y[v] += random_rational(rng, 1, 3, 50);
                    ++perturbed;
                    for (auto & level : verify_chain(g, y).levels)
                        if (level.verdict != Verdict::Strict)
                            o.fail("perturbed weights not Strict at s=" + std::to_string(level.s) + " on " + describe(g) + " x=" + describe(y));
                }
            }
        }

        auto consistent = [&](const Graph & g, const WeightVector & x, int s) {
            auto r = check_equality_conditions(g, x, s);
            equal_seen += r.chain_equal;
            if (! r.theorem_consistent)
                o.fail("inconsistent at s=" + std::to_string(s) + " on " + describe(g) + " x=" + describe(x));
        };

        for (auto & g : catalog()) {
            int omega = clique_number(g);
            if (omega < 2)
                continue;
            for (int trial = 0; trial < 100; ++trial) {
                auto x = random_positive_weights(rng, g.order());
                for (int s = 1; s < omega; ++s) {
                    ++general;
                    consistent(g, x, s);
                }
            }
            // crafted: balance the classes wherever the cover set is complete omega-partite
            for (int s = 1; s < omega; ++s) {
                auto cover = clique_cover_set(g, s);
                auto sub = induced_subgraph(g, cover);
                auto parts = is_complete_multipartite(sub.graph);
                if (! parts || int(parts->size()) != omega)
                    continue;
                for (int trial = 0; trial < 5; ++trial) {
                    auto x = random_positive_weights(rng, g.order());
                    auto total = random_rational(rng, 1, 9, 6);
                    for (auto & part : *parts) {
                        vector<Vertex> members;
                        for (auto v : part.members())
                            members.push_back(sub.original[v]);
                        spread(rng, x, members, total);
                    }
                    ++crafted;
                    consistent(g, x, s);
                }
            }
        }

        o.detail = std::to_string(multipartite_family().size()) + " multipartite graphs, " + std::to_string(balanced) + " balanced and "
            + std::to_string(perturbed) + " perturbed vectors; " + std::to_string(general) + " random and " + std::to_string(crafted)
            + " crafted level checks (" + std::to_string(equal_seen) + " equal), 0 exceptions allowed";
        return o;
    }

    auto blow_up_equivalence() -> Outcome
    {
        Outcome o;
        long instances = 0;
        for (auto & g : catalog_range(1, 5)) {
            int n = g.order();
            int omega = clique_number(g);
            vector<long> m(n, 1);
            while (true) {
                auto blown = blow_up(g, m);
                auto counts = count_cliques_all(blown.graph);
                WeightVector x(m.begin(), m.end());
                ++instances;
                if (counts.omega != omega)
                    o.fail("clique number changed on " + describe(g));
                for (int s = 1; s <= omega; ++s)
                    if (Rational{counts.k(s)} != f_s(g, x, s))
                        o.fail("k_" + std::to_string(s) + " differs from f_" + std::to_string(s) + " on " + describe(g));

                int i = 0;
                while (i < n && m[i] == 3)
                    m[i++] = 1;
                if (i == n)
                    break;
                ++m[i];
            }
        }
        o.detail = std::to_string(instances) + " blow-ups of every graph on n <= 5 with multiplicities 1..3";
        return o;
    }

    auto turan_instance() -> Outcome
    {
        Outcome o;
        if (turan_bound(10, 2) != 25)
            o.fail("turan_bound(10,2) = " + turan_bound(10, 2).get_str());
        auto report = bound_count(2, 1, Integer{10}, 2);
        if (report.bound != 25 || ! verify_certificate(report))
            o.fail("bound_count(2,1,10,2) = " + report.bound.get_str());

        // every triangle-free graph on k+1 vertices is a triangle-free graph on k vertices
        // plus a vertex whose neighbourhood is independent, so extending the triangle-free
        // catalog graphs on 7 vertices reaches every triangle-free graph on 8 and 9 vertices
        vector<long> best(10, 0);
        vector<vector<unsigned>> level;  // adjacency masks
        for (auto & g : catalog()) {
            if (clique_number(g) > 2)
                continue;
            best[g.order()] = std::max(best[g.order()], g.edge_count());
            if (g.order() != 7)
                continue;
            vector<unsigned> adj(7, 0);
            for (auto [u, v] : g.edges()) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
            level.push_back(adj);
        }
        long checked = long(level.size());
        for (int n = 7; n < 9; ++n) {
            vector<vector<unsigned>> next;
            for (auto & adj : level) {
                long edges = 0;
                for (auto a : adj)
                    edges += __builtin_popcount(a);
                edges /= 2;
                for (unsigned subset = 0; subset < (1u << n); ++subset) {
                    bool independent = true;
                    for (int v = 0; v < n && independent; ++v)
                        if (subset >> v & 1)
                            independent = (adj[v] & subset) == 0;
                    if (! independent)
                        continue;
                    ++checked;
                    best[n + 1] = std::max(best[n + 1], edges + __builtin_popcount(subset));
                    if (n + 1 < 9) {
                        auto grown = adj;
                        for (int v = 0; v < n; ++v)
                            if (subset >> v & 1)
                                grown[v] |= 1u << n;
                        grown.push_back(subset);
                        next.push_back(std::move(grown));
                    }
                }
            }
            level = std::move(next);
        }
        for (int n = 2; n <= 9; ++n) {
            auto bound = turan_bound(n, 2);
            if (Rational{best[n]} > bound)
                o.fail("triangle-free graph on " + std::to_string(n) + " vertices with " + std::to_string(best[n]) + " edges");
            if (n % 2 == 0 && Rational{best[n]} != bound)
                o.fail("bound not attained for even n=" + std::to_string(n));
        }
        o.detail = "turan_bound(10,2) = 25, bound_count = 25 with certificate; " + std::to_string(checked)
            + " triangle-free graphs on <= 9 vertices, maxima " + [&] {
                  string s;
                  for (int n = 2; n <= 9; ++n)
                      s += (n > 2 ? "," : "") + std::to_string(best[n]);
                  return s;
              }();
        return o;
    }

    auto run_cli(const vector<string> & args) -> string
    {
        vector<string> storage{"cliquepoly"};
        storage.insert(storage.end(), args.begin(), args.end());
        vector<char *> argv;
        for (auto & a : storage)
            argv.push_back(a.data());
        std::ostringstream out, err;
        int status = cli::run_command_line(int(argv.size()), argv.data(), out, err);
        return "status " + std::to_string(status) + "\n" + out.str() + err.str();
    }

    auto determinism() -> Outcome
    {
        Outcome o;
        namespace fs = std::filesystem;
        auto dir = fs::temp_directory_path() / ("cliquepoly-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(dir);

        vector<Graph> corpus = catalog_range(1, 6);
        Rng rng(8002);
        for (int i = 0; i < 24; ++i)
            corpus.push_back(random_graph(rng, 9 + i % 8, 2 + i % 3, 6));

        long runs = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            auto & g = corpus[i];
            auto graph_file = (dir / ("g" + std::to_string(i) + ".txt")).string();
            auto weight_file = (dir / ("w" + std::to_string(i) + ".txt")).string();
            std::ofstream(graph_file) << write_edge_list(g);
            {
                std::ofstream w(weight_file);
                auto x = random_positive_weights(rng, g.order());
                for (int v = 0; v < g.order(); ++v)
                    w << v + 1 << " " << x[v].get_str() << "\n";
            }

            vector<vector<string>> commands{{"count", graph_file}, {"chain", graph_file}, {"chain", graph_file, "--weights", weight_file}};
            int omega = clique_number(g);
            for (int s = 1; s < omega; ++s) {
                commands.push_back({"maximize", graph_file, "--s", std::to_string(s)});
                commands.push_back({"maximize", graph_file, "--s", std::to_string(s), "--weights", weight_file});
            }
            for (auto & command : commands) {
                auto with = [&](const char * threads) {
                    auto args = vector<string>{"--format", "json-lines", "--threads", threads};
                    args.insert(args.end(), command.begin(), command.end());
                    return args;
                };
                auto reference = run_cli(with("1"));
                if (reference.rfind("status 0\n", 0) != 0)
                    o.fail(command.front() + " failed on " + describe(g) + ": " + reference);
                for (auto threads : {"1", "4", "3"}) {
                    ++runs;
                    if (run_cli(with(threads)) != reference)
                        o.fail(command.front() + " output differs with --threads " + threads + " on " + describe(g));
                }
            }
        }
        fs::remove_all(dir);
        o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(runs) + " repeated runs compared byte for byte (threads 1, 3, 4)";
        return o;
    }
}

int main()
{
    struct Criterion
    {
        int id;
        const char * name;
        std::function<Outcome()> check;
    };
    vector<Criterion> criteria{
        {1, "chain validity", chain_validity},
        {2, "combinatorial chain", combinatorial_chain},
        {3, "constrained maximum closed form", closed_form},
        {4, "symmetrizer soundness", symmetrizer_soundness},
        {5, "equality characterization consistency", equality_consistency},
        {6, "blow-up equivalence", blow_up_equivalence},
        {7, "Turan instance", turan_instance},
        {8, "determinism", determinism},
    };

    int failures = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        }
        catch (const std::exception & e) {
            o.fail(string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
        if (! o.pass)
            std::printf("      first failure: %s\n", o.first_failure.c_str());
        std::fflush(stdout);
        failures += ! o.pass;
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
