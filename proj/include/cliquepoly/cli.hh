#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace cliquepoly::cli
{
    enum class Command
    {
        Count,
        Chain,
        Maximize,
        Equality,
        Bounds,
        Blowup,
        Verify
    };

    enum class OutputFormat
    {
        Text,
        JsonLines
    };

    struct RunConfig
    {
        Command command = Command::Count;
        std::string graph_path;
        std::optional<std::string> weights_path;
        std::optional<std::string> multiplicities_path;
        std::optional<std::string> trace_path;
        std::optional<int> s, t, omega;
        std::optional<std::string> ks, kt;  // decimal, arbitrary precision
        OutputFormat format = OutputFormat::Text;
        bool oracle = false;
        unsigned threads = 1;
    };

    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int usage = 1;
        inline constexpr int input = 2;
        inline constexpr int inconsistency = 3;
    }

    /// Executes one command, writing the report to out and diagnostics to err.
    auto run(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// Parses argv into a RunConfig and runs it.
    auto run_command_line(int argc, char ** argv, std::ostream & out, std::ostream & err) -> int;
}
