#pragma once

#include <cliquepoly/graph.hh>
#include <cliquepoly/rational.hh>
#include <cliquepoly/weighted.hh>

#include <optional>
#include <span>
#include <vector>

namespace cliquepoly
{
    /// Both sides of the equality characterization at one level s, for strictly positive x:
    /// the exact chain verdict, and whether the vertices lying in s-cliques induce a complete
    /// omega-partite graph whose classes carry equal weight.
    struct EqualityReport
    {
        int s = 0;
        int omega = 0;
        bool chain_equal = false;
        bool structure_ok = false;
        VertexSet cover;  // vertices in some s-clique
        std::optional<std::vector<VertexSet>> partition;  // in original vertex ids; present iff structure_ok
        std::optional<std::vector<Rational>> class_sums;
        bool balanced = false;
        bool theorem_consistent = false;
    };

    /// Requires 1 <= s < omega and every weight strictly positive.
    auto check_equality_conditions(const Graph & g, std::span<const Rational> x, int s) -> EqualityReport;

    /// Reports for each level s in 1..omega-1 where the chain is exactly tight.
    auto detect_chain_equalities(const Graph & g, std::span<const Rational> x) -> std::vector<EqualityReport>;
}
