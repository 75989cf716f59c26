#include <cliquepoly/errors.hh>
#include <cliquepoly/oracle.hh>

#include <cstdint>

using std::vector;

namespace cliquepoly::oracle
{
    namespace
    {
        auto pairwise_adjacent(const Graph & g, const vector<Vertex> & c) -> bool
        {
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (! g.adjacent(c[i], c[j]))
                        return false;
            return true;
        }

        auto products(const vector<Clique> & cliques, const vector<std::int64_t> & k) -> std::int64_t
        {
            std::int64_t total = 0;
            for (auto & c : cliques) {
                std::int64_t p = 1;
                for (auto v : c.vertices)
                    p *= k[v];
                total += p;
            }
            return total;
        }
    }

    auto brute_force_cliques(const Graph & g, int s) -> vector<Clique>
    {
        int n = g.order();
        if (n > max_enumeration_order)
            throw DomainError("brute-force enumeration limited to " + std::to_string(max_enumeration_order) + " vertices");
        if (s < 1)
            throw DomainError("clique size must be positive");

        vector<Clique> result;
        if (s > n)
            return result;

        // lexicographic walk over s-combinations of 0..n-1
        vector<Vertex> c(s);
        for (int i = 0; i < s; ++i)
            c[i] = i;
        while (true) {
            if (pairwise_adjacent(g, c))
                result.push_back(Clique{c});
            int i = s - 1;
            while (i >= 0 && c[i] == n - s + i)
                --i;
            if (i < 0)
                break;
            ++c[i];
            for (int j = i + 1; j < s; ++j)
                c[j] = c[j - 1] + 1;
        }
        return result;
    }

    auto brute_force_clique_number(const Graph & g) -> int
    {
        int omega = 1;
        while (omega < g.order() && ! brute_force_cliques(g, omega + 1).empty())
            ++omega;
        return omega;
    }

    auto brute_force_f(const Graph & g, const WeightVector & x, int s) -> Rational
    {
        Rational total = 0;
        for (auto & c : brute_force_cliques(g, s)) {
            Rational p = 1;
            for (auto v : c.vertices)
                p *= x.at(v);
            total += p;
        }
        return total;
    }

    auto grid_search_max(const Graph & g, int s, const GridSpec & spec) -> GridResult
    {
        int n = g.order();
        if (spec.resolution < 1)
            throw DomainError("grid resolution must be positive");
        if (spec.vertex_cap > 6 || n > spec.vertex_cap)
            throw DomainError("grid search limited to " + std::to_string(std::min(spec.vertex_cap, 6)) + " vertices");
        if (s < 1)
            throw DomainError("level must be positive");

        auto level = brute_force_cliques(g, s);
        auto next_level = brute_force_cliques(g, s + 1);
        if (next_level.empty())
            throw DomainError("grid search needs an (s+1)-clique");

        int d = spec.resolution;
        vector<std::int64_t> k(n, 0), best_k;
        Integer best_fs = 0, best_fn = 0;
        long points = 0;

        auto consider = [&] {
            ++points;
            std::int64_t fs = products(level, k);
            if (fs == 0)
                return;
            std::int64_t fn = products(next_level, k);
            Integer a{static_cast<long>(fn)}, b{static_cast<long>(fs)};
            // fn^s / fs^(s+1) > best_fn^s / best_fs^(s+1), cross-multiplied
            if (best_k.empty() || pow(a, s) * pow(best_fs, s + 1) > pow(best_fn, s) * pow(b, s + 1)) {
                best_k = k;
                best_fs = b;
                best_fn = a;
            }
        };

        auto walk = [&](auto & self, int index, int remaining) -> void {
            if (index == n - 1) {
                k[index] = remaining;
                consider();
                return;
            }
            for (int value = 0; value <= remaining; ++value) {
                k[index] = value;
                self(self, index + 1, remaining - value);
            }
        };
        walk(walk, 0, d);

        GridResult result;
        result.points_evaluated = points;
        for (auto v : best_k)
            result.witness.push_back(Rational{long(v), long(d)});
        for (auto & w : result.witness)
            w.canonicalize();
        result.f_s = brute_force_f(g, result.witness, s);
        result.f_next = brute_force_f(g, result.witness, s + 1);
        result.value = CertifiedValue{pow(Rational{best_fn}, s) / pow(Rational{best_fs}, s + 1), static_cast<unsigned long>(s)};
        return result;
    }
}
