#include "../support/corpus.hh"

#include <cliquepoly/cli.hh>
#include <cliquepoly/cliques.hh>
#include <cliquepoly/report.hh>
#include <cliquepoly/weighted.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cliquepoly;
using namespace cliquepoly::testing;
using report::Json;

namespace
{
    struct Result
    {
        int status;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Result
    {
        args.insert(args.begin(), "cliquepoly");
        std::vector<char *> argv;
        for (auto & a : args)
            argv.push_back(a.data());
        std::ostringstream out, err;
        int status = cli::run_command_line(int(argv.size()), argv.data(), out, err);
        return {status, out.str(), err.str()};
    }

    auto graph(const std::string & name) -> std::string { return data_path("graphs/" + name); }

    auto records(const std::string & text) -> std::vector<Json>
    {
        std::vector<Json> result;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            result.push_back(Json::parse(line));
        return result;
    }

    auto section(const std::vector<Json> & recs, const std::string & name) -> std::vector<Json>
    {
        std::vector<Json> result;
        for (auto & r : recs)
            if (r.at("section") == name)
                result.push_back(r);
        return result;
    }

    auto has_float(const Json & j) -> bool
    {
        if (j.is_number_float())
            return true;
        for (auto & item : j)
            if ((item.is_structured() || item.is_number_float()) && has_float(item))
                return true;
        return false;
    }

    struct TempDir
    {
        std::filesystem::path path;
        TempDir()
        {
            static int counter = 0;
            path = std::filesystem::temp_directory_path() / ("cliquepoly-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
            std::filesystem::create_directories(path);
        }
        ~TempDir() { std::filesystem::remove_all(path); }
        auto write(const std::string & name, const std::string & text) const -> std::string
        {
            auto file = (path / name).string();
            std::ofstream(file) << text;
            return file;
        }
    };
}

TEST_CASE("count")
{
    auto text = run({"count", graph("k4.txt")});
    CHECK(text.status == cli::exit_code::ok);
    CHECK(text.out.find("clique number: 4") != std::string::npos);

    auto json = run({"--format", "json-lines", "count", graph("k4.txt")});
    auto recs = records(json.out);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0] == Json::parse(R"({"section":"graph","n":4,"edges":6})"));
    CHECK(recs[1] == Json::parse(R"({"section":"clique_counts","omega":4,"counts":["4","6","4","1"]})"));
}

TEST_CASE("chain")
{
    auto recs = records(run({"--format", "json-lines", "chain", graph("k4.txt")}).out);
    auto levels = section(recs, "chain_level");
    REQUIRE(levels.size() == 3);
    for (auto & level : levels)
        CHECK(level.at("verdict") == "Equal");
    CHECK(section(recs, "chain")[0].at("omega") == 4);

    auto c5 = records(run({"--format", "json-lines", "chain", graph("c5.txt")}).out);
    auto level = section(c5, "chain_level").at(0);
    CHECK(level.at("lhs_power") == "25/4");
    CHECK(level.at("rhs_power") == "5/1");
    CHECK(level.at("verdict") == "Strict");

    auto text = run({"chain", graph("c5.txt")});
    CHECK(text.out.find("≈") != std::string::npos);
    CHECK(text.out.find("Strict") != std::string::npos);

    auto weighted = records(run({"--format", "json-lines", "chain", graph("c5.txt"), "--weights", graph("c5.w")}).out);
    CHECK(section(weighted, "chain")[0].at("unit_weights") == false);
    CHECK(section(weighted, "chain")[0].at("f")[0] == "77/12");
}

TEST_CASE("maximize on the 5-cycle")
{
    auto result = run({"--format", "json-lines", "maximize", graph("c5.txt"), "--s", "1"});
    CHECK(result.status == cli::exit_code::ok);
    auto recs = records(result.out);
    auto end = section(recs, "trace_end").at(0);
    CHECK(end.at("final_support").size() == 2);
    CHECK(end.at("f_s") == "5/1");
    auto maximum = section(recs, "maximum").at(0);
    CHECK(maximum.at("max_f_next") == Json::parse(R"({"radicand":"1/4","root":1})"));
    CHECK(maximum.at("final_vs_max") == "Less");
    for (auto & step : section(recs, "step"))
        CHECK(step.at("f_s_before") == step.at("f_s_after"));

    auto text = run({"maximize", graph("c5.txt"), "--s", "1"});
    CHECK(text.out.find("below the maximum") != std::string::npos);

    auto k4 = records(run({"--format", "json-lines", "maximize", graph("k4.txt"), "--s", "2"}).out);
    CHECK(section(k4, "maximum").at(0).at("final_vs_max") == "Equal");
}

TEST_CASE("equality")
{
    auto recs = records(run({"--format", "json-lines", "equality", graph("k23.txt"), "--s", "1", "--weights", graph("k23_balanced.w")}).out);
    auto r = section(recs, "equality").at(0);
    CHECK(r.at("chain_equal") == true);
    CHECK(r.at("partition") == Json::parse("[[1,2],[3,4,5]]"));
    CHECK(r.at("class_sums") == Json::parse(R"(["6/1","6/1"])"));

    auto text = run({"equality", graph("c5.txt"), "--s", "1", "--weights", graph("c5.w")});
    CHECK(text.status == cli::exit_code::ok);
    CHECK(text.out.find("not complete 2-partite") != std::string::npos);
}

TEST_CASE("bounds")
{
    auto text = run({"bounds", "--omega", "2", "--s", "1", "--ks", "10", "--t", "2"});
    CHECK(text.status == cli::exit_code::ok);
    CHECK(text.out.find("k_2 ≤ 25") != std::string::npos);

    auto json = records(run({"--format", "json-lines", "bounds", "--omega", "3", "--s", "2", "--ks", "3", "--t", "3"}).out);
    CHECK(json.at(0).at("bound") == "1");

    auto lower = run({"bounds", "--omega", "2", "--s", "1", "--kt", "25", "--t", "2"});
    CHECK(lower.out.find("k_1 ≥ 10") != std::string::npos);

    auto big = records(run({"--format", "json-lines", "bounds", "--omega", "2", "--s", "1", "--ks", "1000000000000000000", "--t", "2"}).out);
    CHECK(big.at(0).at("bound") == "250000000000000000000000000000000000");
}

TEST_CASE("blowup writes a parseable edge list")
{
    auto result = run({"blowup", graph("k2.txt"), "--multiplicities", graph("k2.m")});
    CHECK(result.status == cli::exit_code::ok);
    auto g = parse_edge_list(result.out);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 6);
}

TEST_CASE("blowup output round-trips through counting")
{
    TempDir dir;
    Rng rng(71);
    for (auto & g : catalog_range(1, 5)) {
        auto graph_file = dir.write("g.txt", write_edge_list(g));
        std::string m_text;
        WeightVector m(g.order());
        for (int v = 0; v < g.order(); ++v) {
            m[v] = 1 + long(rng() % 3);
            m_text += std::to_string(v + 1) + " " + m[v].get_str() + "\n";
        }
        auto m_file = dir.write("g.m", m_text);
        auto result = run({"blowup", graph_file, "--multiplicities", m_file});
        REQUIRE(result.status == 0);
        auto counts = count_cliques_all(parse_edge_list(result.out));
        CHECK(counts.omega == clique_number(g));
        for (int s = 1; s <= counts.omega; ++s)
            CHECK(Rational{counts.k(s)} == f_s(g, m, s));
    }
}

TEST_CASE("verify")
{
    auto plain = run({"verify", graph("c5.txt")});
    CHECK(plain.status == cli::exit_code::ok);
    auto oracle = run({"--format", "json-lines", "verify", graph("petersen.txt"), "--oracle"});
    CHECK(oracle.status == cli::exit_code::ok);
    auto summary = section(records(oracle.out), "verify").at(0);
    CHECK(summary.at("failures") == 0);

    auto weighted = run({"verify", graph("k23.txt"), "--oracle", "--weights", graph("k23_balanced.w")});
    CHECK(weighted.status == cli::exit_code::ok);
}

TEST_CASE("verify replays a stored trace and flags tampering")
{
    TempDir dir;
    auto trace = run({"--format", "json-lines", "maximize", graph("c5.txt"), "--s", "1"}).out;
    auto good = dir.write("good.jsonl", trace);
    CHECK(run({"verify", graph("c5.txt"), "--trace", good}).status == cli::exit_code::ok);

    auto pos = trace.find("\"f_next_after\":\"6/1\"");
    REQUIRE(pos != std::string::npos);
    auto tampered = trace;
    tampered.replace(pos, 20, "\"f_next_after\":\"7/1\"");
    auto bad = dir.write("bad.jsonl", tampered);
    auto result = run({"verify", graph("c5.txt"), "--trace", bad});
    CHECK(result.status == cli::exit_code::inconsistency);
    CHECK(result.out.find("FAIL") != std::string::npos);

    auto garbage = dir.write("garbage.jsonl", "{not json\n");
    CHECK(run({"verify", graph("c5.txt"), "--trace", garbage}).status == cli::exit_code::input);
}

TEST_CASE("usage errors exit with 1")
{
    CHECK(run({}).status == cli::exit_code::usage);
    CHECK(run({"frobnicate"}).status == cli::exit_code::usage);
    CHECK(run({"count"}).status == cli::exit_code::usage);
    CHECK(run({"maximize", graph("c5.txt")}).status == cli::exit_code::usage);
    CHECK(run({"maximize", graph("c5.txt"), "--s", "2"}).status == cli::exit_code::usage);
    CHECK(run({"maximize", graph("c5.txt"), "--s", "0"}).status == cli::exit_code::usage);
    CHECK(run({"equality", graph("c5.txt"), "--s", "1"}).status == cli::exit_code::usage);
    CHECK(run({"bounds", "--omega", "3", "--s", "1", "--t", "2"}).status == cli::exit_code::usage);
    CHECK(run({"bounds", "--omega", "3", "--s", "1", "--t", "2", "--ks", "3", "--kt", "3"}).status == cli::exit_code::usage);
    CHECK(run({"bounds", "--omega", "3", "--s", "2", "--t", "2", "--ks", "3"}).status == cli::exit_code::usage);
    CHECK(run({"--format", "xml", "count", graph("c5.txt")}).status == cli::exit_code::usage);
    CHECK(run({"count", graph("c5.txt"), "--bogus"}).status == cli::exit_code::usage);
    CHECK(run({"--threads", "0", "count", graph("c5.txt")}).status == cli::exit_code::usage);
}

TEST_CASE("input errors exit with 2 and name the file and line")
{
    TempDir dir;
    auto missing = run({"count", "/nonexistent/graph.txt"});
    CHECK(missing.status == cli::exit_code::input);
    CHECK(missing.err.find("/nonexistent/graph.txt") != std::string::npos);

    auto bad = dir.write("bad.txt", "n=3\n1 2\n1 x\n");
    auto malformed = run({"count", bad});
    CHECK(malformed.status == cli::exit_code::input);
    CHECK(malformed.err.find("line 3") != std::string::npos);
    CHECK(malformed.err.find("bad.txt") != std::string::npos);

    auto zero = dir.write("zero.w", "1 0\n");
    CHECK(run({"equality", graph("c5.txt"), "--s", "1", "--weights", zero}).status == cli::exit_code::input);

    auto negative = dir.write("neg.w", "# header\n2 -1\n");
    auto neg = run({"chain", graph("c5.txt"), "--weights", negative});
    CHECK(neg.status == cli::exit_code::input);
    CHECK(neg.err.find("line 2") != std::string::npos);

    auto all_zero = dir.write("allzero.w", "1 0\n2 0\n3 0\n4 0\n5 0\n");
    CHECK(run({"maximize", graph("c5.txt"), "--s", "1", "--weights", all_zero}).status == cli::exit_code::input);
    CHECK(run({"bounds", "--omega", "3", "--s", "1", "--t", "2", "--ks", "12x"}).status != cli::exit_code::ok);
}

TEST_CASE("structured output carries no floating-point numbers")
{
    std::vector<std::vector<std::string>> commands{
        {"count", graph("petersen.txt")},
        {"chain", graph("c5.txt"), "--weights", graph("c5.w")},
        {"maximize", graph("triangle_pendant.txt"), "--s", "2"},
        {"equality", graph("k23.txt"), "--s", "1", "--weights", graph("k23_balanced.w")},
        {"bounds", "--omega", "4", "--s", "2", "--ks", "17", "--t", "3"},
        {"verify", graph("k4.txt"), "--oracle"},
    };
    for (auto & command : commands) {
        auto args = command;
        args.insert(args.begin(), {"--format", "json-lines"});
        auto result = run(args);
        CHECK(result.status == 0);
        for (auto & r : records(result.out)) {
            CHECK(r.contains("section"));
            CHECK_FALSE(has_float(r));
        }
    }
}
