#pragma once

#include <cliquepoly/graph.hh>
#include <cliquepoly/rational.hh>
#include <cliquepoly/weighted.hh>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliquepoly
{
    /// An exact nonnegative real of the form radicand^(1/root). Comparisons raise both sides
    /// to a common power, so equality stays decidable.
    struct CertifiedValue
    {
        Rational radicand;
        unsigned long root = 1;

        auto approx() const -> double { return approximate_root(radicand, root); }
        auto compare(const CertifiedValue & other) const -> Ordering;
        auto compare(const Rational & value) const -> Ordering;
        auto to_string() const -> std::string;
    };

    /// Maximum of f_{s+1} subject to f_s = 1 over all graphs of clique number omega:
    /// binom(omega, s+1) * binom(omega, s)^(-(s+1)/s), attained by uniform weights on an
    /// omega-clique. Requires 1 <= s < omega.
    auto max_f_next(int omega, int s) -> CertifiedValue;

    /// f_next scaled onto the surface f_s = 1 by homogeneity: (f_next^s / f_s^(s+1))^(1/s).
    auto normalized_objective(const Rational & f_s, const Rational & f_next, int s) -> CertifiedValue;

    /// One constraint-preserving move: all of u's weight is removed and v receives
    /// eta = x_u * (df_s/dx_u) / (df_s/dx_v).
    struct ShiftStep
    {
        Vertex u;  // zeroed
        Vertex v;  // receiving
        Rational xi;
        Rational eta;
        Rational f_s_before, f_s_after;
        Rational f_next_before, f_next_after;
    };

    enum class DropReason
    {
        ZeroWeight,
        NoClique
    };

    struct DroppedVertex
    {
        Vertex vertex;
        std::size_t before_step;  // index of the step this drop precedes (steps.size() = at the end)
        DropReason reason;
        Rational weight;          // weight at the time of the drop
    };

    struct SymmetrizationTrace
    {
        int s = 0;
        WeightVector initial_weights;
        std::vector<ShiftStep> steps;
        std::vector<DroppedVertex> dropped;
        VertexSet final_support;
        WeightVector final_weights;
        Rational f_s_initial, f_next_initial;
        Rational f_s_final, f_next_final;
    };

    /// Moves weight between nonadjacent u and v along the line keeping f_s fixed. Both
    /// endpoints of that segment are evaluated and the one with larger f_{s+1} is taken
    /// (tie: zero the smaller id); f_{s+1} is affine along the segment, so it never drops.
    /// Requires 1 <= s < omega, u and v nonadjacent with positive weight and positive
    /// df_s/dx at both.
    auto shift_pair(const Graph & g, std::span<const Rational> x, int s, Vertex u, Vertex v) -> std::pair<WeightVector, ShiftStep>;

    /// Repeatedly drops support vertices lying in no s-clique of the support and shifts the
    /// lexicographically smallest nonadjacent support pair, until the support is a clique.
    /// Each step zeroes a vertex, so there are at most n steps. Requires 1 <= s < omega
    /// and f_s(x) > 0.
    auto symmetrize(const Graph & g, std::span<const Rational> x, int s) -> SymmetrizationTrace;

    struct ReplayResult
    {
        bool ok = true;
        std::string failure;
    };

    /// Re-applies a trace from its initial weights, recomputing every derivative and
    /// polynomial value independently, and checks each recorded number and invariant.
    auto replay_trace(const Graph & g, const SymmetrizationTrace & trace) -> ReplayResult;
}
