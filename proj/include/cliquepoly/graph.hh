#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquepoly
{
    /// Internal vertex index, 0-based. Everything that leaves the library (files, reports)
    /// uses 1-based ids.
    using Vertex = int;

    class VertexSet
    {
    private:
        int _universe = 0;
        std::vector<std::uint64_t> _words;

    public:
        VertexSet() = default;
        explicit VertexSet(int universe);

        static auto full(int universe) -> VertexSet;
        static auto of(int universe, std::initializer_list<Vertex> members) -> VertexSet;

        auto universe() const noexcept -> int { return _universe; }

        auto set(Vertex v) -> void;
        auto reset(Vertex v) -> void;
        auto test(Vertex v) const -> bool;

        auto count() const -> int;
        auto empty() const -> bool;

        /// Smallest member strictly greater than v (or the first member when v < 0); -1 if none.
        auto next(Vertex v) const -> Vertex;
        auto first() const -> Vertex { return next(-1); }

        auto members() const -> std::vector<Vertex>;

        /// Removes every member <= v.
        auto drop_through(Vertex v) -> void;

        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                std::uint64_t bits = _words[w];
                while (bits) {
                    int bit = __builtin_ctzll(bits);
                    f(Vertex(w * 64 + bit));
                    bits &= bits - 1;
                }
            }
        }
    };

    using Edge = std::pair<Vertex, Vertex>;

    /// Simple undirected graph on vertices 0..n-1 with bitset adjacency. Immutable once built.
    class Graph
    {
    private:
        int _n;
        std::vector<VertexSet> _adj;

    public:
        /// Throws DomainError for n < 1, self-loops or out-of-range endpoints; duplicate and
        /// reversed edges collapse.
        Graph(int n, std::span<const Edge> edges);
        explicit Graph(int n) : Graph(n, std::span<const Edge>{}) {}

        auto order() const noexcept -> int { return _n; }
        auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].test(v); }
        auto neighbours(Vertex v) const -> const VertexSet & { return _adj[v]; }
        auto degree(Vertex v) const -> int { return _adj[v].count(); }
        auto edge_count() const -> long;

        /// Edges (u, v) with u < v, lexicographic.
        auto edges() const -> std::vector<Edge>;

        /// True if every pair of distinct members of s is adjacent.
        auto is_clique(const VertexSet & s) const -> bool;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;
    };

    /// Reads the edge-list format:
    ///
    ///     # comment lines start with '#', blank lines are ignored
    ///     n=<int>              first non-comment line
    ///     <u> <v>              one edge per line, 1-based ids
    ///
    /// Throws InputError naming the offending line.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto read_edge_list_file(const std::string & path) -> Graph;

    /// Inverse of parse_edge_list: header then edges in lexicographic order.
    auto write_edge_list(const Graph & g) -> std::string;

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> original;  // new index -> old index
        std::vector<Vertex> index_of;  // old index -> new index, or -1
    };

    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> InducedSubgraph;

    auto complement(const Graph & g) -> Graph;

    /// Components ordered by smallest member.
    auto connected_components(const Graph & g) -> std::vector<VertexSet>;

    struct BlowUp
    {
        Graph graph;
        std::vector<Vertex> class_of;  // new vertex -> original vertex
    };

    /// Replaces vertex i by an independent set of multiplicity[i] vertices; classes are
    /// joined completely iff the original vertices are adjacent.
    auto blow_up(const Graph & g, std::span<const long> multiplicity) -> BlowUp;

    /// The parts if g is complete multipartite (parts are the components of the complement,
    /// each of which must be a clique there), ordered by smallest member.
    auto is_complete_multipartite(const Graph & g) -> std::optional<std::vector<VertexSet>>;

    namespace graphs
    {
        auto complete(int n) -> Graph;
        auto empty(int n) -> Graph;
        auto path(int n) -> Graph;
        auto cycle(int n) -> Graph;
        auto petersen() -> Graph;
        auto complete_multipartite(std::span<const int> part_sizes) -> Graph;
        /// Balanced complete r-partite graph on n vertices.
        auto turan(int n, int r) -> Graph;
    }
}
