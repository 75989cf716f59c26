#pragma once

#include <cliquepoly/graph.hh>
#include <cliquepoly/rational.hh>

#include <cstddef>
#include <span>
#include <vector>

namespace cliquepoly
{
    struct Clique
    {
        std::vector<Vertex> vertices;  // strictly increasing

        auto size() const -> int { return int(vertices.size()); }
        friend auto operator==(const Clique &, const Clique &) -> bool = default;
        friend auto operator<=>(const Clique &, const Clique &) = default;
    };

    struct CliqueCounts
    {
        int omega = 0;
        std::vector<Integer> counts;  // counts[s - 1] = k_s, for s = 1..omega

        auto k(int s) const -> const Integer & { return counts.at(s - 1); }
    };

    inline constexpr std::size_t default_clique_list_cap = 10'000'000;

    namespace detail
    {
        template <typename F>
        auto extend_cliques(const Graph & g, const VertexSet & candidates, std::vector<Vertex> & stack, int remaining, F & f) -> void
        {
            if (remaining == 1) {
                candidates.for_each([&](Vertex v) {
                    stack.push_back(v);
                    f(std::span<const Vertex>(stack));
                    stack.pop_back();
                });
                return;
            }

            for (Vertex v = candidates.first(); v != -1; v = candidates.next(v)) {
                VertexSet next = candidates & g.neighbours(v);
                next.drop_through(v);
                if (next.count() < remaining - 1)
                    continue;
                stack.push_back(v);
                extend_cliques(g, next, stack, remaining - 1, f);
                stack.pop_back();
            }
        }
    }

    /// Calls f(span<const Vertex>) once per s-clique inside `allowed`, in lexicographic order.
    /// Candidate sets only ever hold higher-numbered neighbours, which is what makes the
    /// order lexicographic.
    template <typename F>
    auto for_each_clique(const Graph & g, int s, const VertexSet & allowed, F && f) -> void
    {
        if (s < 1)
            return;
        std::vector<Vertex> stack;
        stack.reserve(s);
        detail::extend_cliques(g, allowed, stack, s, f);
    }

    template <typename F>
    auto for_each_clique(const Graph & g, int s, F && f) -> void
    {
        for_each_clique(g, s, VertexSet::full(g.order()), std::forward<F>(f));
    }

    /// All s-cliques in lexicographic order. Throws DomainError if s is outside 1..n or the
    /// number of cliques exceeds cap.
    auto enumerate_cliques(const Graph & g, int s, std::size_t cap = default_clique_list_cap) -> std::vector<Clique>;

    /// Size of a maximum clique, by branch and bound with a greedy colouring bound.
    auto clique_number(const Graph & g) -> int;

    /// k_1..k_omega. With threads > 1 the roots are split across workers; the result does not
    /// depend on the thread count.
    auto count_cliques_all(const Graph & g, unsigned threads = 1) -> CliqueCounts;

    /// The vertices lying in at least one s-clique. Requires 1 <= s <= omega(g).
    auto clique_cover_set(const Graph & g, int s) -> VertexSet;

    /// The lexicographically first clique of `size` vertices inside `candidates`, or an empty
    /// vector when there is none.
    auto find_clique(const Graph & g, const VertexSet & candidates, int size) -> std::vector<Vertex>;

    /// Flat storage of every clique of size 1..omega, for repeated polynomial evaluation
    /// against many weight vectors.
    class CliqueTable
    {
    private:
        int _order;
        int _omega;
        std::vector<std::vector<Vertex>> _flat;  // _flat[s - 1] holds k_s runs of s vertices

    public:
        explicit CliqueTable(const Graph & g);

        auto order() const -> int { return _order; }
        auto omega() const -> int { return _omega; }
        auto count(int s) const -> std::size_t;
        auto clique(int s, std::size_t index) const -> std::span<const Vertex>;

        /// Sum over s-cliques of the product of member weights.
        auto evaluate(std::span<const Rational> x, int s) const -> Rational;

        /// All first partials of the s-th polynomial: entry v sums, over s-cliques containing
        /// v, the product of the other members' weights.
        auto gradient(std::span<const Rational> x, int s) const -> std::vector<Rational>;
    };
}
