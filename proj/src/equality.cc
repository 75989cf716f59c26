#include <cliquepoly/cliques.hh>
#include <cliquepoly/equality.hh>
#include <cliquepoly/errors.hh>

using std::span;
using std::vector;

namespace cliquepoly
{
    namespace
    {
        auto check_positive(const Graph & g, span<const Rational> x) -> void
        {
            check_weights(g, x);
            for (std::size_t v = 0; v < x.size(); ++v)
                if (x[v] <= 0)
                    throw DomainError("equality analysis needs strictly positive weights; vertex " + std::to_string(v + 1) + " has weight 0");
        }

        auto analyse_level(const Graph & g, span<const Rational> x, int s, const ChainReport & chain) -> EqualityReport
        {
            EqualityReport report;
            report.s = s;
            report.omega = chain.omega;
            report.chain_equal = chain.levels.at(s - 1).verdict == Verdict::Equal;
            report.cover = clique_cover_set(g, s);

            auto sub = induced_subgraph(g, report.cover);
            auto parts = is_complete_multipartite(sub.graph);
            report.structure_ok = parts && int(parts->size()) == chain.omega;

            if (report.structure_ok) {
                vector<VertexSet> lifted;
                vector<Rational> sums;
                for (auto & part : *parts) {
                    VertexSet original(g.order());
                    Rational sum = 0;
                    part.for_each([&](Vertex v) {
                        original.set(sub.original[v]);
                        sum += x[sub.original[v]];
                    });
                    lifted.push_back(std::move(original));
                    sums.push_back(std::move(sum));
                }
                report.balanced = true;
                for (auto & sum : sums)
                    report.balanced = report.balanced && sum == sums.front();
                report.partition = std::move(lifted);
                report.class_sums = std::move(sums);
            }

            report.theorem_consistent = report.chain_equal == (report.structure_ok && report.balanced);
            return report;
        }
    }

    auto check_equality_conditions(const Graph & g, span<const Rational> x, int s) -> EqualityReport
    {
        check_positive(g, x);
        auto chain = verify_chain(g, x);
        if (s < 1 || s >= chain.omega)
            throw DomainError("equality level s=" + std::to_string(s) + " outside 1.." + std::to_string(chain.omega - 1));
        return analyse_level(g, x, s, chain);
    }

    auto detect_chain_equalities(const Graph & g, span<const Rational> x) -> vector<EqualityReport>
    {
        check_positive(g, x);
        auto chain = verify_chain(g, x);
        vector<EqualityReport> result;
        for (auto & level : chain.levels)
            if (level.verdict == Verdict::Equal)
                result.push_back(analyse_level(g, x, level.s, chain));
        return result;
    }
}
