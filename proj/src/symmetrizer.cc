#include <cliquepoly/cliques.hh>
#include <cliquepoly/errors.hh>
#include <cliquepoly/symmetrizer.hh>

using std::pair;
using std::span;
using std::string;
using std::vector;

namespace cliquepoly
{
    auto CertifiedValue::compare(const CertifiedValue & other) const -> Ordering
    {
        return compare_roots(radicand, root, other.radicand, other.root);
    }

    auto CertifiedValue::compare(const Rational & value) const -> Ordering
    {
        if (value < 0)
            return Ordering::Greater;
        return compare_roots(radicand, root, value, 1);
    }

    auto CertifiedValue::to_string() const -> string
    {
        if (root == 1)
            return to_pq_string(radicand);
        return "(" + to_pq_string(radicand) + ")^(1/" + std::to_string(root) + ")";
    }

    auto max_f_next(int omega, int s) -> CertifiedValue
    {
        if (s < 1 || s >= omega)
            throw DomainError("max_f_next needs 1 <= s < omega, got s=" + std::to_string(s) + ", omega=" + std::to_string(omega));
        Rational radicand{pow(binomial(omega, s + 1), s), pow(binomial(omega, s), s + 1)};
        radicand.canonicalize();
        return CertifiedValue{radicand, static_cast<unsigned long>(s)};
    }

    auto normalized_objective(const Rational & f_s, const Rational & f_next, int s) -> CertifiedValue
    {
        if (f_s <= 0)
            throw DomainError("normalized_objective needs f_s > 0");
        return CertifiedValue{pow(f_next, s) / pow(f_s, s + 1), static_cast<unsigned long>(s)};
    }

    namespace
    {
        // The two endpoint moves for nonadjacent u, v given first partials of f_s (du, dv) and
        // of f_{s+1} (Du, Dv). Because u and v are nonadjacent neither partial depends on x_u
        // or x_v, so f_s and f_{s+1} are affine in (x_u, x_v).
        struct Move
        {
            Vertex zeroed, receiving;
            Rational eta;
        };

        auto choose_move(span<const Rational> x, Vertex u, Vertex v,
                const Rational & du, const Rational & dv, const Rational & Du, const Rational & Dv) -> Move
        {
            Rational eta_to_v = x[u] * du / dv;
            Rational eta_to_u = x[v] * dv / du;
            Rational gain_zero_u = eta_to_v * Dv - x[u] * Du;
            Rational gain_zero_v = eta_to_u * Du - x[v] * Dv;

            Move zero_u{u, v, eta_to_v}, zero_v{v, u, eta_to_u};
            int c = cmp(gain_zero_u, gain_zero_v);
            if (c > 0)
                return zero_u;
            if (c < 0)
                return zero_v;
            return u < v ? zero_u : zero_v;
        }

        auto apply_move(WeightVector & x, const Move & m) -> void
        {
            x[m.receiving] += m.eta;
            x[m.zeroed] = 0;
        }

        auto check_pair(const Graph & g, Vertex u, Vertex v) -> void
        {
            auto in_range = [&](Vertex w) { return w >= 0 && w < g.order(); };
            if (! in_range(u) || ! in_range(v))
                throw DomainError("shift pair vertex outside 1.." + std::to_string(g.order()));
            if (u == v)
                throw DomainError("shift pair needs two distinct vertices");
            if (g.adjacent(u, v))
                throw DomainError("shift pair " + std::to_string(u + 1) + "," + std::to_string(v + 1) + " is adjacent");
        }
    }

    auto shift_pair(const Graph & g, span<const Rational> x, int s, Vertex u, Vertex v) -> pair<WeightVector, ShiftStep>
    {
        check_weights(g, x);
        int omega = clique_number(g);
        if (s < 1 || s >= omega)
            throw DomainError("shift_pair needs 1 <= s < omega");
        check_pair(g, u, v);
        if (x[u] == 0 || x[v] == 0)
            throw DomainError("shift pair needs positive weight at both vertices");

        Rational du = partial_derivative(g, x, s, u), dv = partial_derivative(g, x, s, v);
        if (du == 0 || dv == 0)
            throw DomainError("shift pair needs a positive derivative of f_s at both vertices");
        Rational Du = partial_derivative(g, x, s + 1, u), Dv = partial_derivative(g, x, s + 1, v);

        auto move = choose_move(x, u, v, du, dv, Du, Dv);
        WeightVector next(x.begin(), x.end());
        ShiftStep step{move.zeroed, move.receiving, -x[move.zeroed], move.eta,
            f_s(g, x, s), 0, f_s(g, x, s + 1), 0};
        apply_move(next, move);
        step.f_s_after = f_s(g, next, s);
        step.f_next_after = f_s(g, next, s + 1);
        return {std::move(next), std::move(step)};
    }

    auto symmetrize(const Graph & g, span<const Rational> x0, int s) -> SymmetrizationTrace
    {
        check_weights(g, x0);
        CliqueTable table(g);
        if (s < 1 || s >= table.omega())
            throw DomainError("symmetrize needs 1 <= s < omega, got s=" + std::to_string(s) + ", omega=" + std::to_string(table.omega()));

        SymmetrizationTrace trace;
        trace.s = s;
        trace.initial_weights.assign(x0.begin(), x0.end());
        trace.f_s_initial = table.evaluate(x0, s);
        trace.f_next_initial = table.evaluate(x0, s + 1);
        if (trace.f_s_initial == 0)
            throw DomainError("symmetrize needs f_s > 0");

        WeightVector x = trace.initial_weights;
        VertexSet support(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            if (x[v] > 0)
                support.set(v);
            else
                trace.dropped.push_back(DroppedVertex{v, 0, DropReason::ZeroWeight, 0});
        }

        Rational f_now = trace.f_s_initial, f_next_now = trace.f_next_initial;
        while (true) {
            // within the support every weight is positive, so a zero partial means the vertex
            // lies in no s-clique of the support; removing it leaves both polynomials unchanged
            auto grad = table.gradient(x, s);
            VertexSet snapshot = support;
            snapshot.for_each([&](Vertex v) {
                if (grad[v] == 0) {
                    trace.dropped.push_back(DroppedVertex{v, trace.steps.size(), DropReason::NoClique, x[v]});
                    x[v] = 0;
                    support.reset(v);
                }
            });

            if (g.is_clique(support))
                break;

            Vertex u = -1, v = -1;
            for (Vertex a = support.first(); a != -1 && u == -1; a = support.next(a)) {
                VertexSet later = support - g.neighbours(a);
                later.drop_through(a);
                if (! later.empty()) {
                    u = a;
                    v = later.first();
                }
            }

            auto grad_next = table.gradient(x, s + 1);
            auto move = choose_move(x, u, v, grad[u], grad[v], grad_next[u], grad_next[v]);
            ShiftStep step{move.zeroed, move.receiving, -x[move.zeroed], move.eta, f_now, 0, f_next_now, 0};
            apply_move(x, move);
            support.reset(move.zeroed);
            step.f_s_after = table.evaluate(x, s);
            step.f_next_after = table.evaluate(x, s + 1);
            f_now = step.f_s_after;
            f_next_now = step.f_next_after;
            trace.steps.push_back(std::move(step));
        }

        trace.final_support = support;
        trace.final_weights = std::move(x);
        trace.f_s_final = f_now;
        trace.f_next_final = f_next_now;
        return trace;
    }

    auto replay_trace(const Graph & g, const SymmetrizationTrace & trace) -> ReplayResult
    {
        auto fail = [](string why) { return ReplayResult{false, std::move(why)}; };
        int s = trace.s;
        int omega = clique_number(g);
        if (s < 1 || s >= omega)
            return fail("level out of range");
        if (trace.initial_weights.size() != std::size_t(g.order()))
            return fail("initial weight vector has the wrong length");
        for (auto & w : trace.initial_weights)
            if (w < 0)
                return fail("negative initial weight");

        WeightVector x = trace.initial_weights;
        Rational f0 = f_s(g, x, s), f0_next = f_s(g, x, s + 1);
        if (f0 != trace.f_s_initial || f0_next != trace.f_next_initial)
            return fail("initial polynomial values do not match");
        if (trace.steps.size() > std::size_t(g.order()))
            return fail("more steps than vertices");

        std::size_t next_drop = 0;
        auto apply_drops = [&](std::size_t step_index) -> ReplayResult {
            for (; next_drop < trace.dropped.size() && trace.dropped[next_drop].before_step == step_index; ++next_drop) {
                auto & d = trace.dropped[next_drop];
                if (d.vertex < 0 || d.vertex >= g.order())
                    return fail("dropped vertex out of range");
                if (d.weight != x[d.vertex])
                    return fail("dropped vertex " + std::to_string(d.vertex + 1) + " has a different weight");
                if (d.reason == DropReason::ZeroWeight && x[d.vertex] != 0)
                    return fail("vertex " + std::to_string(d.vertex + 1) + " dropped for zero weight has positive weight");
                if (d.reason == DropReason::NoClique && partial_derivative(g, x, s, d.vertex) != 0)
                    return fail("vertex " + std::to_string(d.vertex + 1) + " dropped but lies in an s-clique of the support");
                x[d.vertex] = 0;
            }
            return {};
        };

        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            if (auto r = apply_drops(i); ! r.ok)
                return r;

            auto & step = trace.steps[i];
            string where = "step " + std::to_string(i + 1) + ": ";
            if (step.u < 0 || step.u >= g.order() || step.v < 0 || step.v >= g.order() || step.u == step.v)
                return fail(where + "bad vertex pair");
            if (g.adjacent(step.u, step.v))
                return fail(where + "pair is adjacent");
            if (x[step.u] <= 0 || x[step.v] <= 0)
                return fail(where + "pair lacks positive weight");
            if (step.xi != -x[step.u])
                return fail(where + "xi is not minus the zeroed weight");

            Rational du = partial_derivative(g, x, s, step.u), dv = partial_derivative(g, x, s, step.v);
            if (du <= 0 || dv <= 0)
                return fail(where + "zero derivative");
            if (step.eta != x[step.u] * du / dv)
                return fail(where + "eta does not preserve f_s to first order");

            Rational before = f_s(g, x, s), before_next = f_s(g, x, s + 1);
            if (before != step.f_s_before || before_next != step.f_next_before)
                return fail(where + "recorded values before the step do not match");

            x[step.v] += step.eta;
            x[step.u] = 0;
            Rational after = f_s(g, x, s), after_next = f_s(g, x, s + 1);
            if (after != step.f_s_after || after_next != step.f_next_after)
                return fail(where + "recorded values after the step do not match");
            if (after != before)
                return fail(where + "f_s changed");
            if (after_next < before_next)
                return fail(where + "f_{s+1} decreased");
        }
        if (auto r = apply_drops(trace.steps.size()); ! r.ok)
            return r;
        if (next_drop != trace.dropped.size())
            return fail("dropped vertices out of order");

        if (x != trace.final_weights)
            return fail("final weights do not match");
        VertexSet support(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            if (x[v] > 0)
                support.set(v);
        if (support != trace.final_support)
            return fail("final support does not match the final weights");
        if (! g.is_clique(support))
            return fail("final support is not a clique");
        if (support.count() > omega)
            return fail("final support exceeds the clique number");
        if (f_s(g, x, s) != trace.f_s_initial || trace.f_s_final != trace.f_s_initial)
            return fail("f_s not preserved end to end");
        if (f_s(g, x, s + 1) != trace.f_next_final || trace.f_next_final < trace.f_next_initial)
            return fail("final f_{s+1} mismatch or decrease");
        return {};
    }
}
