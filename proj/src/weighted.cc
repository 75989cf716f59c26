#include <cliquepoly/errors.hh>
#include <cliquepoly/weighted.hh>

#include "parallel.hh"

#include <charconv>
#include <fstream>
#include <sstream>

using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace cliquepoly
{
    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
            while (! s.empty() && is_space(s.front()))
                s.remove_prefix(1);
            while (! s.empty() && is_space(s.back()))
                s.remove_suffix(1);
            return s;
        }

        // Calls on_entry(line_no, vertex, value_text) for every "<vertex-id> <value>" line.
        template <typename F>
        auto scan_vertex_values(string_view text, int n, F && on_entry) -> void
        {
            vector<bool> seen(n, false);
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

                auto gap = line.find_first_of(" \t");
                if (gap == string_view::npos)
                    throw InputError("expected '<vertex-id> <value>'", line_no);
                auto id_text = line.substr(0, gap);
                auto value_text = trim(line.substr(gap));
                if (value_text.find_first_of(" \t") != string_view::npos)
                    throw InputError("expected '<vertex-id> <value>'", line_no);

                long id = 0;
                auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
                if (ec != std::errc{} || ptr != id_text.data() + id_text.size())
                    throw InputError("malformed vertex id '" + string(id_text) + "'", line_no);
                if (id < 1 || id > n)
                    throw InputError("vertex id out of range 1.." + std::to_string(n), line_no);
                if (seen[id - 1])
                    throw InputError("vertex " + std::to_string(id) + " listed twice", line_no);
                seen[id - 1] = true;
                on_entry(line_no, Vertex(id - 1), value_text);
            }
        }

        auto slurp(const string & path, const char * what) -> string
        {
            std::ifstream in(path);
            if (! in)
                throw InputError(string("cannot open ") + what + " file '" + path + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto check_level(int s, int omega) -> void
        {
            if (s < 1 || s > omega)
                throw DomainError("level s=" + std::to_string(s) + " outside 1.." + std::to_string(omega));
        }

        auto positive_support(span<const Rational> x) -> VertexSet
        {
            VertexSet result(int(x.size()));
            for (std::size_t v = 0; v < x.size(); ++v)
                if (x[v] > 0)
                    result.set(Vertex(v));
            return result;
        }

        // Sum over s-cliques inside `allowed` of weight products.
        auto clique_weight_sum(const Graph & g, span<const Rational> x, int s, const VertexSet & allowed) -> Rational
        {
            Rational sum = 0, term;
            for_each_clique(g, s, allowed, [&](span<const Vertex> c) {
                term = x[c[0]];
                for (std::size_t i = 1; i < c.size(); ++i)
                    term *= x[c[i]];
                sum += term;
            });
            return sum;
        }
    }

    auto unit_weights(int n) -> WeightVector
    {
        return WeightVector(n, Rational{1});
    }

    auto parse_weights(string_view text, int n) -> WeightVector
    {
        WeightVector result = unit_weights(n);
        scan_vertex_values(text, n, [&](int line_no, Vertex v, string_view value) {
            Rational q;
            if (! parse_rational(value, q))
                throw InputError("malformed rational '" + string(value) + "'", line_no);
            if (q < 0)
                throw InputError("negative weight for vertex " + std::to_string(v + 1), line_no);
            result[v] = q;
        });
        return result;
    }

    auto read_weights_file(const string & path, int n) -> WeightVector
    {
        try {
            return parse_weights(slurp(path, "weights"), n);
        }
        catch (const InputError & e) {
            throw InputError(path + ": " + e.what());
        }
    }

    auto parse_multiplicities(string_view text, int n) -> vector<long>
    {
        vector<long> result(n, 1);
        scan_vertex_values(text, n, [&](int line_no, Vertex v, string_view value) {
            long m = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), m);
            if (ec != std::errc{} || ptr != value.data() + value.size())
                throw InputError("malformed multiplicity '" + string(value) + "'", line_no);
            if (m < 1)
                throw InputError("multiplicity of vertex " + std::to_string(v + 1) + " must be positive", line_no);
            result[v] = m;
        });
        return result;
    }

    auto read_multiplicities_file(const string & path, int n) -> vector<long>
    {
        try {
            return parse_multiplicities(slurp(path, "multiplicities"), n);
        }
        catch (const InputError & e) {
            throw InputError(path + ": " + e.what());
        }
    }

    auto check_weights(const Graph & g, span<const Rational> x) -> void
    {
        if (x.size() != std::size_t(g.order()))
            throw DomainError("expected " + std::to_string(g.order()) + " weights, got " + std::to_string(x.size()));
        for (std::size_t v = 0; v < x.size(); ++v)
            if (x[v] < 0)
                throw DomainError("negative weight at vertex " + std::to_string(v + 1));
    }

    auto f_s(const Graph & g, span<const Rational> x, int s, unsigned threads) -> Rational
    {
        check_weights(g, x);
        check_level(s, clique_number(g));

        auto positive = positive_support(x);
        vector<Rational> per_root(g.order(), Rational{0});
        detail::parallel_for(g.order(), threads, [&](int root) {
            if (! positive.test(root))
                return;
            if (s == 1) {
                per_root[root] = x[root];
                return;
            }
            VertexSet later = g.neighbours(root) & positive;
            later.drop_through(root);
            per_root[root] = x[root] * clique_weight_sum(g, x, s - 1, later);
        });

        Rational total = 0;
        for (auto & r : per_root)
            total += r;
        return total;
    }

    auto rho(const Graph & g, span<const Rational> x, int s) -> Rational
    {
        int omega = clique_number(g);
        check_level(s, omega);
        return f_s(g, x, s) / Rational{binomial(omega, s)};
    }

    auto partial_derivative(const Graph & g, span<const Rational> x, int s, Vertex v) -> Rational
    {
        check_weights(g, x);
        check_level(s, clique_number(g));
        if (v < 0 || v >= g.order())
            throw DomainError("vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(g.order()));
        if (s == 1)
            return 1;
        return clique_weight_sum(g, x, s - 1, g.neighbours(v) & positive_support(x));
    }

    auto to_string(Verdict v) -> string
    {
        switch (v) {
            case Verdict::Strict: return "Strict";
            case Verdict::Equal: return "Equal";
            case Verdict::Violated: return "Violated";
        }
        return "?";
    }

    auto ChainReport::approx_mean(int s) const -> double
    {
        return approximate_root(values.at(s - 1), s);
    }

    auto ChainReport::violated() const -> bool
    {
        for (auto & l : levels)
            if (l.verdict == Verdict::Violated)
                return true;
        return false;
    }

    auto chain_from_values(vector<Rational> f, bool unit_weighted) -> ChainReport
    {
        ChainReport report;
        report.omega = int(f.size());
        report.unit_weighted = unit_weighted;
        for (int s = 1; s <= report.omega; ++s)
            report.values.push_back(f[s - 1] / Rational{binomial(report.omega, s)});
        report.f = std::move(f);

        for (int s = 1; s < report.omega; ++s) {
            ChainLevel level{s, pow(report.values[s - 1], s + 1), pow(report.values[s], s), Verdict::Equal};
            switch (compare(level.lhs_power, level.rhs_power)) {
                case Ordering::Greater: level.verdict = Verdict::Strict; break;
                case Ordering::Equal: level.verdict = Verdict::Equal; break;
                case Ordering::Less: level.verdict = Verdict::Violated; break;
            }
            report.levels.push_back(std::move(level));
        }
        return report;
    }

    auto verify_chain(const Graph & g, span<const Rational> x, unsigned threads) -> ChainReport
    {
        check_weights(g, x);
        int omega = clique_number(g);
        vector<Rational> f;
        for (int s = 1; s <= omega; ++s)
            f.push_back(f_s(g, x, s, threads));
        if (f[0] == 0)
            throw DomainError("all weights are zero");
        return chain_from_values(std::move(f), false);
    }

    auto verify_chain(const CliqueTable & table, span<const Rational> x) -> ChainReport
    {
        if (x.size() != std::size_t(table.order()))
            throw DomainError("weight vector length does not match graph order");
        for (auto & w : x)
            if (w < 0)
                throw DomainError("negative weight");
        vector<Rational> f;
        for (int s = 1; s <= table.omega(); ++s)
            f.push_back(table.evaluate(x, s));
        if (f[0] == 0)
            throw DomainError("all weights are zero");
        return chain_from_values(std::move(f), false);
    }

    auto verify_combinatorial_chain(const Graph & g, unsigned threads) -> ChainReport
    {
        auto counts = count_cliques_all(g, threads);
        vector<Rational> f;
        for (auto & k : counts.counts)
            f.emplace_back(k);
        return chain_from_values(std::move(f), true);
    }
}
