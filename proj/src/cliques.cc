#include <cliquepoly/cliques.hh>
#include <cliquepoly/errors.hh>

#include "parallel.hh"

#include <algorithm>
#include <cstdint>

using std::span;
using std::vector;

namespace cliquepoly
{
    namespace
    {
        // Greedy sequential colouring of p; `order` gets the vertices in non-decreasing colour
        // and `bound[i]` the colour number of order[i].
        auto colour_order(const Graph & g, const VertexSet & p, vector<Vertex> & order, vector<int> & bound) -> void
        {
            order.clear();
            bound.clear();
            VertexSet uncoloured = p;
            int colour = 0;
            while (! uncoloured.empty()) {
                ++colour;
                VertexSet q = uncoloured;
                while (! q.empty()) {
                    Vertex v = q.first();
                    q.reset(v);
                    uncoloured.reset(v);
                    q -= g.neighbours(v);
                    order.push_back(v);
                    bound.push_back(colour);
                }
            }
        }

        auto expand(const Graph & g, int depth, VertexSet p, int & best) -> void
        {
            vector<Vertex> order;
            vector<int> bound;
            colour_order(g, p, order, bound);

            for (int i = int(order.size()) - 1; i >= 0; --i) {
                if (depth + bound[i] <= best)
                    return;
                Vertex v = order[i];
                VertexSet next = p & g.neighbours(v);
                if (next.empty())
                    best = std::max(best, depth + 1);
                else
                    expand(g, depth + 1, next, best);
                p.reset(v);
            }
        }

        // Counts cliques of every size containing `depth` chosen vertices plus members of
        // `candidates`; tally[d] accumulates cliques of size d + 1.
        auto count_from(const Graph & g, const VertexSet & candidates, int depth, vector<std::uint64_t> & tally) -> void
        {
            if (tally.size() <= std::size_t(depth + 1))
                tally.resize(depth + 2, 0);
            for (Vertex v = candidates.first(); v != -1; v = candidates.next(v)) {
                ++tally[depth];
                VertexSet next = candidates & g.neighbours(v);
                next.drop_through(v);
                if (! next.empty())
                    count_from(g, next, depth + 1, tally);
            }
        }
    }

    auto enumerate_cliques(const Graph & g, int s, std::size_t cap) -> vector<Clique>
    {
        if (s < 1 || s > g.order())
            throw DomainError("clique size " + std::to_string(s) + " outside 1.." + std::to_string(g.order()));

        vector<Clique> result;
        for_each_clique(g, s, [&](span<const Vertex> c) {
            if (result.size() == cap)
                throw DomainError("more than " + std::to_string(cap) + " cliques of size " + std::to_string(s));
            result.push_back(Clique{vector<Vertex>(c.begin(), c.end())});
        });
        return result;
    }

    auto clique_number(const Graph & g) -> int
    {
        int best = 1;
        expand(g, 0, VertexSet::full(g.order()), best);
        return best;
    }

    auto count_cliques_all(const Graph & g, unsigned threads) -> CliqueCounts
    {
        int n = g.order();
        vector<vector<std::uint64_t>> per_root(n);

        auto work = [&](Vertex root) {
            auto & tally = per_root[root];
            tally.assign(1, 1);
            VertexSet next = g.neighbours(root);
            next.drop_through(root);
            if (! next.empty())
                count_from(g, next, 1, tally);
        };

        detail::parallel_for(n, threads, work);

        CliqueCounts result;
        for (auto & tally : per_root) {
            if (result.counts.size() < tally.size())
                result.counts.resize(tally.size(), 0);
            for (std::size_t d = 0; d < tally.size(); ++d)
                result.counts[d] += Integer{static_cast<unsigned long>(tally[d])};
        }
        while (! result.counts.empty() && result.counts.back() == 0)
            result.counts.pop_back();
        result.omega = int(result.counts.size());
        return result;
    }

    auto find_clique(const Graph & g, const VertexSet & candidates, int size) -> vector<Vertex>
    {
        if (size < 1)
            return {};
        vector<Vertex> stack;

        auto search = [&](auto & self, const VertexSet & cand, int remaining) -> bool {
            for (Vertex v = cand.first(); v != -1; v = cand.next(v)) {
                stack.push_back(v);
                if (remaining == 1)
                    return true;
                VertexSet next = cand & g.neighbours(v);
                next.drop_through(v);
                if (next.count() >= remaining - 1 && self(self, next, remaining - 1))
                    return true;
                stack.pop_back();
            }
            return false;
        };

        if (search(search, candidates, size))
            return stack;
        return {};
    }

    auto clique_cover_set(const Graph & g, int s) -> VertexSet
    {
        if (s < 1)
            throw DomainError("clique size must be positive");
        if (s > clique_number(g))
            throw DomainError("clique size " + std::to_string(s) + " exceeds the clique number");

        VertexSet covered(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            if (covered.test(v))
                continue;
            auto rest = find_clique(g, g.neighbours(v), s - 1);
            if (s == 1 || ! rest.empty()) {
                covered.set(v);
                for (auto w : rest)
                    covered.set(w);
            }
        }
        return covered;
    }

    CliqueTable::CliqueTable(const Graph & g) :
        _order(g.order()),
        _omega(clique_number(g))
    {
        _flat.resize(_omega);
        for (int s = 1; s <= _omega; ++s)
            for_each_clique(g, s, [&](span<const Vertex> c) { _flat[s - 1].insert(_flat[s - 1].end(), c.begin(), c.end()); });
    }

    auto CliqueTable::count(int s) const -> std::size_t
    {
        if (s < 1 || s > _omega)
            return 0;
        return _flat[s - 1].size() / s;
    }

    auto CliqueTable::clique(int s, std::size_t index) const -> span<const Vertex>
    {
        return span<const Vertex>(_flat.at(s - 1)).subspan(index * s, s);
    }

    auto CliqueTable::evaluate(span<const Rational> x, int s) const -> Rational
    {
        if (x.size() != std::size_t(_order))
            throw DomainError("weight vector length does not match graph order");
        Rational total = 0, term;
        if (s < 1 || s > _omega)
            return total;
        auto & flat = _flat[s - 1];
        for (std::size_t i = 0; i < flat.size(); i += s) {
            if (x[flat[i]] == 0)
                continue;
            term = x[flat[i]];
            for (int j = 1; j < s && term != 0; ++j)
                term *= x[flat[i + j]];
            total += term;
        }
        return total;
    }

    auto CliqueTable::gradient(span<const Rational> x, int s) const -> vector<Rational>
    {
        if (x.size() != std::size_t(_order))
            throw DomainError("weight vector length does not match graph order");
        vector<Rational> result(_order, Rational{0});
        if (s < 1 || s > _omega)
            return result;
        if (s == 1) {
            std::fill(result.begin(), result.end(), Rational{1});
            return result;
        }

        auto & flat = _flat[s - 1];
        Rational term;
        for (std::size_t i = 0; i < flat.size(); i += s) {
            int zeros = 0;
            for (int j = 0; j < s; ++j)
                zeros += (x[flat[i + j]] == 0);
            if (zeros > 1)
                continue;
            for (int j = 0; j < s; ++j) {
                if (zeros == 1 && x[flat[i + j]] != 0)
                    continue;
                term = 1;
                for (int k = 0; k < s; ++k)
                    if (k != j)
                        term *= x[flat[i + k]];
                result[flat[i + j]] += term;
            }
        }
        return result;
    }
}
