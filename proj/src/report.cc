#include <cliquepoly/errors.hh>
#include <cliquepoly/report.hh>

#include <sstream>

using std::string;
using std::vector;

namespace cliquepoly::report
{
    namespace
    {
        auto ordering_name(Ordering o) -> string
        {
            switch (o) {
                case Ordering::Less: return "Less";
                case Ordering::Equal: return "Equal";
                case Ordering::Greater: return "Greater";
            }
            return "?";
        }

        auto weights_json(const WeightVector & x) -> Json
        {
            return rationals(x);
        }

        auto rational_field(const Json & j, const char * key) -> Rational
        {
            if (! j.contains(key) || ! j[key].is_string())
                throw InputError(string("trace record lacks rational field '") + key + "'");
            Rational q;
            if (! parse_rational(j[key].get<string>(), q))
                throw InputError(string("malformed rational in field '") + key + "'");
            return q;
        }

        auto int_field(const Json & j, const char * key) -> long
        {
            if (! j.contains(key) || ! j[key].is_number_integer())
                throw InputError(string("trace record lacks integer field '") + key + "'");
            return j[key].get<long>();
        }

        auto rational_list(const Json & j, const char * key) -> WeightVector
        {
            if (! j.contains(key) || ! j[key].is_array())
                throw InputError(string("trace record lacks list field '") + key + "'");
            WeightVector result;
            for (auto & item : j[key]) {
                Rational q;
                if (! item.is_string() || ! parse_rational(item.get<string>(), q))
                    throw InputError(string("malformed rational in list '") + key + "'");
                result.push_back(q);
            }
            return result;
        }

        auto pad(const string & s, std::size_t width) -> string
        {
            return s.size() >= width ? s : s + string(width - s.size(), ' ');
        }
    }

    auto vertex_ids(const VertexSet & s) -> Json
    {
        Json ids = Json::array();
        s.for_each([&](Vertex v) { ids.push_back(v + 1); });
        return ids;
    }

    auto rationals(const vector<Rational> & values) -> Json
    {
        Json list = Json::array();
        for (auto & q : values)
            list.push_back(to_pq_string(q));
        return list;
    }

    auto certified(const CertifiedValue & v) -> Json
    {
        return Json{{"radicand", to_pq_string(v.radicand)}, {"root", v.root}};
    }

    auto graph_record(const Graph & g) -> Json
    {
        return Json{{"section", "graph"}, {"n", g.order()}, {"edges", g.edge_count()}};
    }

    auto counts_record(const CliqueCounts & counts) -> Json
    {
        Json list = Json::array();
        for (auto & k : counts.counts)
            list.push_back(k.get_str());
        return Json{{"section", "clique_counts"}, {"omega", counts.omega}, {"counts", list}};
    }

    auto chain_records(const ChainReport & chain) -> vector<Json>
    {
        vector<Json> out;
        out.push_back(Json{{"section", "chain"}, {"omega", chain.omega}, {"unit_weights", chain.unit_weighted},
            {"f", rationals(chain.f)}, {"rho", rationals(chain.values)}});
        for (auto & level : chain.levels)
            out.push_back(Json{{"section", "chain_level"}, {"s", level.s}, {"lhs_power", to_pq_string(level.lhs_power)},
                {"rhs_power", to_pq_string(level.rhs_power)}, {"verdict", to_string(level.verdict)}});
        return out;
    }

    auto trace_records(const SymmetrizationTrace & trace) -> vector<Json>
    {
        vector<Json> out;
        out.push_back(Json{{"section", "trace_start"}, {"s", trace.s}, {"initial_weights", weights_json(trace.initial_weights)},
            {"f_s", to_pq_string(trace.f_s_initial)}, {"f_next", to_pq_string(trace.f_next_initial)}});

        std::size_t d = 0;
        auto emit_drops = [&](std::size_t before) {
            for (; d < trace.dropped.size() && trace.dropped[d].before_step == before; ++d) {
                auto & drop = trace.dropped[d];
                out.push_back(Json{{"section", "drop"}, {"vertex", drop.vertex + 1}, {"before_step", drop.before_step + 1},
                    {"reason", drop.reason == DropReason::ZeroWeight ? "zero_weight" : "no_clique"},
                    {"weight", to_pq_string(drop.weight)}});
            }
        };

        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            emit_drops(i);
            auto & step = trace.steps[i];
            out.push_back(Json{{"section", "step"}, {"index", i + 1}, {"u", step.u + 1}, {"v", step.v + 1},
                {"xi", to_pq_string(step.xi)}, {"eta", to_pq_string(step.eta)},
                {"f_s_before", to_pq_string(step.f_s_before)}, {"f_s_after", to_pq_string(step.f_s_after)},
                {"f_next_before", to_pq_string(step.f_next_before)}, {"f_next_after", to_pq_string(step.f_next_after)}});
        }
        emit_drops(trace.steps.size());

        out.push_back(Json{{"section", "trace_end"}, {"final_support", vertex_ids(trace.final_support)},
            {"final_weights", weights_json(trace.final_weights)}, {"f_s", to_pq_string(trace.f_s_final)},
            {"f_next", to_pq_string(trace.f_next_final)}, {"steps", trace.steps.size()}});
        return out;
    }

    auto maximum_record(int omega, const SymmetrizationTrace & trace) -> Json
    {
        auto best = max_f_next(omega, trace.s);
        auto initial = normalized_objective(trace.f_s_initial, trace.f_next_initial, trace.s);
        auto final = normalized_objective(trace.f_s_final, trace.f_next_final, trace.s);
        return Json{{"section", "maximum"}, {"omega", omega}, {"s", trace.s}, {"max_f_next", certified(best)},
            {"normalized_initial", certified(initial)}, {"normalized_final", certified(final)},
            {"initial_vs_max", ordering_name(initial.compare(best))}, {"final_vs_max", ordering_name(final.compare(best))}};
    }

    auto equality_record(const EqualityReport & r) -> Json
    {
        Json partition = nullptr, sums = nullptr;
        if (r.partition) {
            partition = Json::array();
            for (auto & part : *r.partition)
                partition.push_back(vertex_ids(part));
        }
        if (r.class_sums)
            sums = rationals(*r.class_sums);
        return Json{{"section", "equality"}, {"s", r.s}, {"omega", r.omega}, {"chain_equal", r.chain_equal},
            {"structure_ok", r.structure_ok}, {"cover", vertex_ids(r.cover)}, {"partition", partition},
            {"class_sums", sums}, {"balanced", r.balanced}, {"theorem_consistent", r.theorem_consistent}};
    }

    auto bound_record(const BoundReport & r) -> Json
    {
        Json certificate{{"holds", Json{{"lhs", r.holds_lhs.get_str()}, {"rhs", r.holds_rhs.get_str()}}}};
        certificate["fails"] = r.has_failure_witness
            ? Json{{"lhs", r.fails_lhs.get_str()}, {"rhs", r.fails_rhs.get_str()}}
            : Json(nullptr);
        return Json{{"section", "bound"}, {"omega", r.omega}, {"s", r.s}, {"t", r.t}, {"kind", to_string(r.kind)},
            {"given", r.given.get_str()}, {"bound", r.bound.get_str()}, {"certificate", certificate}};
    }

    auto trace_from_records(const vector<Json> & records) -> SymmetrizationTrace
    {
        SymmetrizationTrace trace;
        bool started = false, ended = false;
        for (auto & j : records) {
            if (! j.is_object() || ! j.contains("section"))
                continue;
            auto section = j["section"].get<string>();
            if (section == "trace_start") {
                started = true;
                trace.s = int(int_field(j, "s"));
                trace.initial_weights = rational_list(j, "initial_weights");
                trace.f_s_initial = rational_field(j, "f_s");
                trace.f_next_initial = rational_field(j, "f_next");
            }
            else if (section == "drop") {
                auto reason = j.value("reason", string{});
                if (reason != "zero_weight" && reason != "no_clique")
                    throw InputError("unknown drop reason '" + reason + "'");
                trace.dropped.push_back(DroppedVertex{Vertex(int_field(j, "vertex") - 1), std::size_t(int_field(j, "before_step") - 1),
                    reason == "zero_weight" ? DropReason::ZeroWeight : DropReason::NoClique, rational_field(j, "weight")});
            }
            else if (section == "step") {
                trace.steps.push_back(ShiftStep{Vertex(int_field(j, "u") - 1), Vertex(int_field(j, "v") - 1),
                    rational_field(j, "xi"), rational_field(j, "eta"), rational_field(j, "f_s_before"), rational_field(j, "f_s_after"),
                    rational_field(j, "f_next_before"), rational_field(j, "f_next_after")});
            }
            else if (section == "trace_end") {
                ended = true;
                trace.final_weights = rational_list(j, "final_weights");
                trace.f_s_final = rational_field(j, "f_s");
                trace.f_next_final = rational_field(j, "f_next");
                if (! j.contains("final_support") || ! j["final_support"].is_array())
                    throw InputError("trace_end lacks final_support");
                trace.final_support = VertexSet(int(trace.final_weights.size()));
                for (auto & id : j["final_support"]) {
                    if (! id.is_number_integer() || id.get<int>() < 1 || id.get<int>() > int(trace.final_weights.size()))
                        throw InputError("bad vertex id in final_support");
                    trace.final_support.set(id.get<int>() - 1);
                }
            }
        }
        if (! started || ! ended)
            throw InputError("trace is missing its trace_start or trace_end record");
        return trace;
    }

    auto counts_text(const CliqueCounts & counts) -> string
    {
        std::ostringstream out;
        out << "clique number: " << counts.omega << "\n";
        for (int s = 1; s <= counts.omega; ++s)
            out << "k_" << s << " = " << counts.k(s).get_str() << "\n";
        return out.str();
    }

    auto chain_text(const ChainReport & chain) -> string
    {
        std::ostringstream out;
        string f_name = chain.unit_weighted ? "k_" : "f_";
        out << "clique number: " << chain.omega << (chain.unit_weighted ? " (unit weights: clique counts)" : "") << "\n";
        for (int s = 1; s <= chain.omega; ++s)
            out << pad(f_name + std::to_string(s) + " = " + to_pq_string(chain.f[s - 1]), 28)
                << "rho_" << s << " = " << to_pq_string(chain.values[s - 1])
                << "   rho_" << s << "^(1/" << s << ") ≈ " << format_approx(chain.approx_mean(s)) << "\n";
        for (auto & level : chain.levels)
            out << "level " << level.s << ": rho_" << level.s << "^" << level.s + 1 << " = " << to_pq_string(level.lhs_power)
                << " vs rho_" << level.s + 1 << "^" << level.s << " = " << to_pq_string(level.rhs_power)
                << "  => " << to_string(level.verdict) << "\n";
        return out.str();
    }

    auto trace_text(const SymmetrizationTrace & trace) -> string
    {
        std::ostringstream out;
        out << "symmetrizing at level s=" << trace.s << ": f_" << trace.s << " = " << to_pq_string(trace.f_s_initial)
            << ", f_" << trace.s + 1 << " = " << to_pq_string(trace.f_next_initial) << "\n";
        std::size_t d = 0;
        auto emit_drops = [&](std::size_t before) {
            for (; d < trace.dropped.size() && trace.dropped[d].before_step == before; ++d)
                if (trace.dropped[d].reason == DropReason::NoClique)
                    out << "  drop vertex " << trace.dropped[d].vertex + 1 << " (in no " << trace.s << "-clique of the support, weight "
                        << to_pq_string(trace.dropped[d].weight) << ")\n";
        };
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            emit_drops(i);
            auto & step = trace.steps[i];
            out << "  step " << i + 1 << ": zero vertex " << step.u + 1 << ", vertex " << step.v + 1 << " gains "
                << to_pq_string(step.eta) << "; f_" << trace.s + 1 << ": " << to_pq_string(step.f_next_before) << " -> "
                << to_pq_string(step.f_next_after) << "\n";
        }
        emit_drops(trace.steps.size());
        out << "final support: {";
        bool first = true;
        trace.final_support.for_each([&](Vertex v) {
            out << (first ? "" : ",") << v + 1;
            first = false;
        });
        out << "}, f_" << trace.s << " = " << to_pq_string(trace.f_s_final) << ", f_" << trace.s + 1 << " = "
            << to_pq_string(trace.f_next_final) << "\n";
        return out.str();
    }

    auto maximum_text(int omega, const SymmetrizationTrace & trace) -> string
    {
        auto best = max_f_next(omega, trace.s);
        auto final = normalized_objective(trace.f_s_final, trace.f_next_final, trace.s);
        std::ostringstream out;
        out << "max f_" << trace.s + 1 << " subject to f_" << trace.s << " = 1 (omega=" << omega << "): "
            << best.to_string() << " ≈ " << format_approx(best.approx()) << "\n";
        auto relation = final.compare(best);
        out << "final point rescaled to f_" << trace.s << " = 1: " << final.to_string() << " ≈ " << format_approx(final.approx())
            << (relation == Ordering::Less ? "  (below the maximum)" : relation == Ordering::Equal ? "  (attains the maximum)" : "  (EXCEEDS the maximum)")
            << "\n";
        return out.str();
    }

    auto equality_text(const EqualityReport & r) -> string
    {
        std::ostringstream out;
        out << "level s=" << r.s << " (omega=" << r.omega << "): chain " << (r.chain_equal ? "Equal" : "Strict") << "\n";
        out << "  vertices in some " << r.s << "-clique: " << vertex_ids(r.cover).dump() << "\n";
        if (r.structure_ok) {
            out << "  induced graph is complete " << r.omega << "-partite with classes";
            for (auto & part : *r.partition)
                out << " " << vertex_ids(part).dump();
            out << "\n  class weight sums:";
            for (auto & sum : *r.class_sums)
                out << " " << to_pq_string(sum);
            out << (r.balanced ? " (balanced)" : " (unbalanced)") << "\n";
        }
        else
            out << "  induced graph is not complete " << r.omega << "-partite\n";
        out << "  structural and arithmetic verdicts " << (r.theorem_consistent ? "agree" : "DISAGREE") << "\n";
        return out.str();
    }

    auto bound_text(const BoundReport & r) -> string
    {
        std::ostringstream out;
        if (r.kind == BoundKind::UpperOnKt)
            out << "k_" << r.t << " ≤ " << r.bound.get_str() << "   (given k_" << r.s << " = " << r.given.get_str()
                << ", omega = " << r.omega << "; real bound ≈ " << format_approx(r.decimal) << ")\n";
        else
            out << "k_" << r.s << " ≥ " << r.bound.get_str() << "   (given k_" << r.t << " = " << r.given.get_str()
                << ", omega = " << r.omega << "; real bound ≈ " << format_approx(r.decimal) << ")\n";
        out << "certificate: " << r.holds_lhs.get_str() << " ≤ " << r.holds_rhs.get_str();
        if (r.has_failure_witness)
            out << "; one step further: " << r.fails_lhs.get_str() << " > " << r.fails_rhs.get_str();
        out << "\n";
        return out.str();
    }
}
