#pragma once

#include <cliquepoly/cliques.hh>
#include <cliquepoly/graph.hh>
#include <cliquepoly/rational.hh>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliquepoly
{
    /// One exact nonnegative weight per vertex.
    using WeightVector = std::vector<Rational>;

    auto unit_weights(int n) -> WeightVector;

    /// Weights file: '#' comments and blank lines ignored, otherwise "<vertex-id> <rational>"
    /// with rationals written "p/q" or as integers. Unlisted vertices get weight 1. Negative
    /// weights, repeated vertices and ids outside 1..n are InputErrors.
    auto parse_weights(std::string_view text, int n) -> WeightVector;
    auto read_weights_file(const std::string & path, int n) -> WeightVector;

    /// Same grammar with positive integer values; unlisted vertices get multiplicity 1.
    auto parse_multiplicities(std::string_view text, int n) -> std::vector<long>;
    auto read_multiplicities_file(const std::string & path, int n) -> std::vector<long>;

    /// Throws DomainError unless x has one nonnegative entry per vertex.
    auto check_weights(const Graph & g, std::span<const Rational> x) -> void;

    /// Sum over s-cliques of the product of member weights, 1 <= s <= omega(g). Zero-weight
    /// vertices are pruned from the clique search.
    auto f_s(const Graph & g, std::span<const Rational> x, int s, unsigned threads = 1) -> Rational;

    /// f_s divided by binom(omega, s), with omega the clique number of the whole graph.
    auto rho(const Graph & g, std::span<const Rational> x, int s) -> Rational;

    /// d f_s / d x_v: the sum over (s-1)-cliques in the neighbourhood of v of their weight
    /// products; 1 when s = 1.
    auto partial_derivative(const Graph & g, std::span<const Rational> x, int s, Vertex v) -> Rational;

    enum class Verdict
    {
        Strict,
        Equal,
        Violated
    };

    auto to_string(Verdict v) -> std::string;

    struct ChainLevel
    {
        int s;
        Rational lhs_power;  // rho_s^(s+1)
        Rational rhs_power;  // rho_{s+1}^s
        Verdict verdict;
    };

    struct ChainReport
    {
        int omega = 0;
        bool unit_weighted = false;
        std::vector<Rational> f;       // f_1..f_omega
        std::vector<Rational> values;  // rho_1..rho_omega
        std::vector<ChainLevel> levels;

        /// rho_s^(1/s), display only.
        auto approx_mean(int s) const -> double;
        auto violated() const -> bool;
    };

    /// Compares consecutive means rho_s^(1/s) and rho_{s+1}^(1/(s+1)) exactly through
    /// rho_s^(s+1) versus rho_{s+1}^s. Throws DomainError when all weights are zero.
    auto verify_chain(const Graph & g, std::span<const Rational> x, unsigned threads = 1) -> ChainReport;

    /// Same verdicts from a precomputed clique table; for running many weight vectors
    /// against one graph.
    auto verify_chain(const CliqueTable & table, std::span<const Rational> x) -> ChainReport;

    /// The chain for unit weights, i.e. on the clique counts k_s.
    auto verify_combinatorial_chain(const Graph & g, unsigned threads = 1) -> ChainReport;

    /// Builds the report from f_1..f_omega.
    auto chain_from_values(std::vector<Rational> f, bool unit_weighted) -> ChainReport;
}
