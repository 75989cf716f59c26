#pragma once

// Brute-force references. Nothing here shares code with the clique engine or the
// symmetrizer beyond the Graph type, so they can be used to check those independently.

#include <cliquepoly/cliques.hh>
#include <cliquepoly/graph.hh>
#include <cliquepoly/rational.hh>
#include <cliquepoly/symmetrizer.hh>
#include <cliquepoly/weighted.hh>

#include <vector>

namespace cliquepoly::oracle
{
    inline constexpr int max_enumeration_order = 14;

    struct GridSpec
    {
        int resolution = 24;
        int vertex_cap = 6;
    };

    /// Tests every s-subset for pairwise adjacency; lexicographic order. Requires n <= 14.
    auto brute_force_cliques(const Graph & g, int s) -> std::vector<Clique>;

    /// Largest s with a brute-force s-clique.
    auto brute_force_clique_number(const Graph & g) -> int;

    /// Direct evaluation of the clique polynomial from brute-force cliques.
    auto brute_force_f(const Graph & g, const WeightVector & x, int s) -> Rational;

    struct GridResult
    {
        CertifiedValue value;   // max of (f_{s+1}^s / f_s^(s+1))^(1/s) over the grid
        WeightVector witness;   // lexicographically smallest maximizing grid point
        Rational f_s, f_next;   // at the witness
        long points_evaluated = 0;
    };

    /// Scans every weight vector with entries in {0, 1/d, ..., 1} summing to 1, skips those
    /// with f_s = 0, and maximizes the scale-free ratio f_{s+1}^s / f_s^(s+1), which equals
    /// the s-th power of f_{s+1} after rescaling onto f_s = 1. Requires n <= spec.vertex_cap
    /// <= 6 and an (s+1)-clique.
    auto grid_search_max(const Graph & g, int s, const GridSpec & spec = {}) -> GridResult;
}
