#include <cliquepoly/errors.hh>
#include <cliquepoly/graph.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace cliquepoly
{
    VertexSet::VertexSet(int universe) :
        _universe(universe),
        _words((universe + 63) / 64, 0)
    {
    }

    auto VertexSet::full(int universe) -> VertexSet
    {
        VertexSet result(universe);
        for (Vertex v = 0; v < universe; ++v)
            result.set(v);
        return result;
    }

    auto VertexSet::of(int universe, std::initializer_list<Vertex> members) -> VertexSet
    {
        VertexSet result(universe);
        for (auto v : members)
            result.set(v);
        return result;
    }

    auto VertexSet::set(Vertex v) -> void
    {
        if (v < 0 || v >= _universe)
            throw DomainError("vertex " + std::to_string(v + 1) + " outside universe of " + std::to_string(_universe));
        _words[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    auto VertexSet::reset(Vertex v) -> void
    {
        if (v < 0 || v >= _universe)
            throw DomainError("vertex " + std::to_string(v + 1) + " outside universe of " + std::to_string(_universe));
        _words[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    auto VertexSet::test(Vertex v) const -> bool
    {
        return v >= 0 && v < _universe && ((_words[v / 64] >> (v % 64)) & 1);
    }

    auto VertexSet::count() const -> int
    {
        int result = 0;
        for (auto w : _words)
            result += __builtin_popcountll(w);
        return result;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
    }

    auto VertexSet::next(Vertex v) const -> Vertex
    {
        int start = v + 1;
        if (start >= _universe)
            return -1;
        std::size_t w = start / 64;
        std::uint64_t bits = _words[w] & (~std::uint64_t{0} << (start % 64));
        while (true) {
            if (bits)
                return Vertex(w * 64 + __builtin_ctzll(bits));
            if (++w == _words.size())
                return -1;
            bits = _words[w];
        }
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        for_each([&](Vertex v) { result.push_back(v); });
        return result;
    }

    auto VertexSet::drop_through(Vertex v) -> void
    {
        if (v < 0)
            return;
        std::size_t full_words = std::min<std::size_t>((v + 1) / 64, _words.size());
        std::fill(_words.begin(), _words.begin() + full_words, 0);
        if (full_words < _words.size() && (v + 1) % 64)
            _words[full_words] &= ~std::uint64_t{0} << ((v + 1) % 64);
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    Graph::Graph(int n, span<const Edge> edges) :
        _n(n)
    {
        if (n < 1)
            throw DomainError("graph must have at least one vertex");
        _adj.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw DomainError("edge endpoint out of range");
            if (u == v)
                throw DomainError("self-loop at vertex " + std::to_string(u + 1));
            _adj[u].set(v);
            _adj[v].set(u);
        }
    }

    auto Graph::edge_count() const -> long
    {
        long total = 0;
        for (auto & a : _adj)
            total += a.count();
        return total / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (Vertex u = 0; u < _n; ++u)
            for (Vertex v = _adj[u].next(u); v != -1; v = _adj[u].next(v))
                result.emplace_back(u, v);
        return result;
    }

    auto Graph::is_clique(const VertexSet & s) const -> bool
    {
        bool ok = true;
        s.for_each([&](Vertex v) {
            if (ok && ((s - _adj[v]).count() != 1))
                ok = false;
        });
        return ok;
    }

    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
            while (! s.empty() && is_space(s.front()))
                s.remove_prefix(1);
            while (! s.empty() && is_space(s.back()))
                s.remove_suffix(1);
            return s;
        }

        auto parse_int(string_view s, long & out) -> bool
        {
            if (s.empty())
                return false;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            return ec == std::errc{} && ptr == s.data() + s.size();
        }

        auto split_ws(string_view s) -> vector<string_view>
        {
            vector<string_view> tokens;
            std::size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                    ++i;
                std::size_t j = i;
                while (j < s.size() && s[j] != ' ' && s[j] != '\t')
                    ++j;
                if (j > i)
                    tokens.push_back(s.substr(i, j - i));
                i = j;
            }
            return tokens;
        }
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        optional<long> n;
        vector<Edge> edges;
        int line_no = 0;

        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            auto line = trim(text.substr(pos, end - pos));
            pos = end + 1;
            ++line_no;

            if (line.empty() || line.front() == '#')
                continue;

            if (! n) {
                long value = 0;
                if (line.substr(0, 2) != "n=" || ! parse_int(trim(line.substr(2)), value))
                    throw InputError("expected header 'n=<int>'", line_no);
                if (value < 1)
                    throw InputError("vertex count must be positive", line_no);
                n = value;
                continue;
            }

            auto tokens = split_ws(line);
            long u = 0, v = 0;
            if (tokens.size() != 2 || ! parse_int(tokens[0], u) || ! parse_int(tokens[1], v))
                throw InputError("expected '<u> <v>'", line_no);
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw InputError("vertex id out of range 1.." + std::to_string(*n), line_no);
            if (u == v)
                throw InputError("self-loop at vertex " + std::to_string(u), line_no);
            edges.emplace_back(Vertex(u - 1), Vertex(v - 1));
        }

        if (! n)
            throw InputError("missing header 'n=<int>'");
        return Graph(int(*n), edges);
    }

    auto read_edge_list_file(const string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw InputError("cannot open graph file '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            return parse_edge_list(buffer.str());
        }
        catch (const InputError & e) {
            throw InputError(path + ": " + e.what());
        }
    }

    auto write_edge_list(const Graph & g) -> string
    {
        string out = "n=" + std::to_string(g.order()) + "\n";
        for (auto [u, v] : g.edges())
            out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
        return out;
    }

    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> InducedSubgraph
    {
        if (keep.empty())
            throw DomainError("induced_subgraph: empty vertex set");
        if (keep.universe() != g.order())
            throw DomainError("induced_subgraph: vertex set universe does not match graph");

        vector<Vertex> original = keep.members();
        vector<Vertex> index_of(g.order(), -1);
        for (std::size_t i = 0; i < original.size(); ++i)
            index_of[original[i]] = Vertex(i);

        vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (index_of[u] != -1 && index_of[v] != -1)
                edges.emplace_back(index_of[u], index_of[v]);

        return InducedSubgraph{Graph(int(original.size()), edges), std::move(original), std::move(index_of)};
    }

    auto complement(const Graph & g) -> Graph
    {
        vector<Edge> edges;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    edges.emplace_back(u, v);
        return Graph(g.order(), edges);
    }

    auto connected_components(const Graph & g) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        VertexSet unseen = VertexSet::full(g.order());
        // seeds are taken in increasing order, so components come out ordered by smallest member
        for (Vertex seed = unseen.first(); seed != -1; seed = unseen.first()) {
            VertexSet component(g.order()), frontier(g.order());
            frontier.set(seed);
            unseen.reset(seed);
            while (! frontier.empty()) {
                component |= frontier;
                VertexSet grown(g.order());
                frontier.for_each([&](Vertex v) { grown |= g.neighbours(v); });
                grown &= unseen;
                unseen -= grown;
                frontier = grown;
            }
            result.push_back(std::move(component));
        }
        return result;
    }

    auto blow_up(const Graph & g, span<const long> multiplicity) -> BlowUp
    {
        if (multiplicity.size() != std::size_t(g.order()))
            throw DomainError("blow_up: need one multiplicity per vertex");

        long total = 0;
        for (std::size_t i = 0; i < multiplicity.size(); ++i) {
            if (multiplicity[i] < 1)
                throw DomainError("blow_up: multiplicity of vertex " + std::to_string(i + 1) + " must be positive");
            total += multiplicity[i];
            if (total > (1L << 24))
                throw DomainError("blow_up: result too large");
        }

        vector<Vertex> class_of;
        vector<vector<Vertex>> members(g.order());
        for (Vertex i = 0; i < g.order(); ++i)
            for (long k = 0; k < multiplicity[i]; ++k) {
                members[i].push_back(Vertex(class_of.size()));
                class_of.push_back(i);
            }

        vector<Edge> edges;
        for (auto [i, j] : g.edges())
            for (auto a : members[i])
                for (auto b : members[j])
                    edges.emplace_back(a, b);

        return BlowUp{Graph(int(total), edges), std::move(class_of)};
    }

    auto is_complete_multipartite(const Graph & g) -> optional<vector<VertexSet>>
    {
        auto co = complement(g);
        auto parts = connected_components(co);
        for (auto & part : parts)
            if (! co.is_clique(part))
                return std::nullopt;
        return parts;
    }

    namespace graphs
    {
        auto complete(int n) -> Graph
        {
            vector<Edge> edges;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    edges.emplace_back(u, v);
            return Graph(n, edges);
        }

        auto empty(int n) -> Graph
        {
            return Graph(n);
        }

        auto path(int n) -> Graph
        {
            vector<Edge> edges;
            for (Vertex v = 0; v + 1 < n; ++v)
                edges.emplace_back(v, v + 1);
            return Graph(n, edges);
        }

        auto cycle(int n) -> Graph
        {
            if (n < 3)
                throw DomainError("cycle needs at least 3 vertices");
            vector<Edge> edges;
            for (Vertex v = 0; v < n; ++v)
                edges.emplace_back(v, (v + 1) % n);
            return Graph(n, edges);
        }

        auto petersen() -> Graph
        {
            vector<Edge> edges;
            for (Vertex i = 0; i < 5; ++i) {
                edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
                edges.emplace_back(i, i + 5);                // spokes
                edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
            }
            return Graph(10, edges);
        }

        auto complete_multipartite(span<const int> part_sizes) -> Graph
        {
            vector<int> part_of;
            for (std::size_t p = 0; p < part_sizes.size(); ++p)
                for (int k = 0; k < part_sizes[p]; ++k)
                    part_of.push_back(int(p));
            vector<Edge> edges;
            for (Vertex u = 0; u < Vertex(part_of.size()); ++u)
                for (Vertex v = u + 1; v < Vertex(part_of.size()); ++v)
                    if (part_of[u] != part_of[v])
                        edges.emplace_back(u, v);
            return Graph(int(part_of.size()), edges);
        }

        auto turan(int n, int r) -> Graph
        {
            if (r < 1 || r > n)
                throw DomainError("turan: need 1 <= r <= n");
            vector<int> sizes(r, n / r);
            for (int i = 0; i < n % r; ++i)
                ++sizes[i];
            return complete_multipartite(sizes);
        }
    }
}
