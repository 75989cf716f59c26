#include <cliquepoly/bounds.hh>
#include <cliquepoly/errors.hh>

namespace cliquepoly
{
    namespace
    {
        auto check_levels(int omega, int s, int t) -> void
        {
            if (s < 1 || t <= s)
                throw DomainError("bound levels need 1 <= s < t, got s=" + std::to_string(s) + ", t=" + std::to_string(t));
            if (omega < t)
                throw DomainError("bound level t=" + std::to_string(t) + " exceeds omega=" + std::to_string(omega));
        }

        // Smallest x >= 0 with pred(x) true, for pred monotone false..true and true somewhere.
        template <typename Pred>
        auto first_true(Pred && pred) -> Integer
        {
            if (pred(Integer{0}))
                return 0;
            Integer lo = 0, hi = 1;
            while (! pred(hi)) {
                lo = hi;
                hi *= 2;
            }
            // pred(lo) false, pred(hi) true
            while (hi - lo > 1) {
                Integer mid = (lo + hi) / 2;
                if (pred(mid))
                    hi = mid;
                else
                    lo = mid;
            }
            return hi;
        }
    }

    auto to_string(BoundKind kind) -> std::string
    {
        return kind == BoundKind::UpperOnKt ? "UpperOnKt" : "LowerOnKs";
    }

    auto bound_count(int omega, int s, const Integer & k_s, int t) -> BoundReport
    {
        check_levels(omega, s, t);
        if (k_s < 0)
            throw DomainError("clique count must be nonnegative");

        Integer scale_s = pow(binomial(omega, s), t);
        Integer rhs = pow(k_s, t) * pow(binomial(omega, t), s);
        auto lhs_at = [&](const Integer & b) -> Integer { return pow(b, s) * scale_s; };

        BoundReport report;
        report.omega = omega;
        report.s = s;
        report.t = t;
        report.kind = BoundKind::UpperOnKt;
        report.given = k_s;
        // largest b with lhs(b) <= rhs is one less than the first b where it fails
        report.bound = first_true([&](const Integer & b) { return lhs_at(b) > rhs; }) - 1;
        report.holds_lhs = lhs_at(report.bound);
        report.holds_rhs = rhs;
        report.has_failure_witness = true;
        report.fails_lhs = lhs_at(report.bound + 1);
        report.fails_rhs = rhs;
        report.decimal = approximate_root(Rational{pow(binomial(omega, t), s) * pow(k_s, t), pow(binomial(omega, s), t)}, s);
        return report;
    }

    auto lower_bound_count(int omega, int s, int t, const Integer & k_t) -> BoundReport
    {
        check_levels(omega, s, t);
        if (k_t < 0)
            throw DomainError("clique count must be nonnegative");

        Integer lhs = pow(k_t, s) * pow(binomial(omega, s), t);
        Integer scale_t = pow(binomial(omega, t), s);
        auto rhs_at = [&](const Integer & a) -> Integer { return pow(a, t) * scale_t; };

        BoundReport report;
        report.omega = omega;
        report.s = s;
        report.t = t;
        report.kind = BoundKind::LowerOnKs;
        report.given = k_t;
        report.bound = first_true([&](const Integer & a) { return lhs <= rhs_at(a); });
        report.holds_lhs = lhs;
        report.holds_rhs = rhs_at(report.bound);
        if (report.bound > 0) {
            report.has_failure_witness = true;
            report.fails_lhs = lhs;
            report.fails_rhs = rhs_at(report.bound - 1);
        }
        report.decimal = approximate_root(Rational{pow(binomial(omega, s), t) * pow(k_t, s), pow(binomial(omega, t), s)}, t);
        return report;
    }

    auto verify_certificate(const BoundReport & r) -> bool
    {
        if (r.s < 1 || r.t <= r.s || r.omega < r.t || r.bound < 0)
            return false;
        Integer cs = binomial(r.omega, r.s), ct = binomial(r.omega, r.t);

        if (r.kind == BoundKind::UpperOnKt) {
            Integer rhs = pow(r.given, r.t) * pow(ct, r.s);
            auto lhs_at = [&](const Integer & b) -> Integer { return pow(b, r.s) * pow(cs, r.t); };
            return r.holds_rhs == rhs && r.holds_lhs == lhs_at(r.bound) && r.holds_lhs <= r.holds_rhs
                && r.has_failure_witness && r.fails_lhs == lhs_at(r.bound + 1) && r.fails_rhs == rhs && r.fails_lhs > r.fails_rhs;
        }

        Integer lhs = pow(r.given, r.s) * pow(cs, r.t);
        auto rhs_at = [&](const Integer & a) -> Integer { return pow(a, r.t) * pow(ct, r.s); };
        if (r.holds_lhs != lhs || r.holds_rhs != rhs_at(r.bound) || r.holds_lhs > r.holds_rhs)
            return false;
        if (r.bound == 0)
            return ! r.has_failure_witness;
        return r.has_failure_witness && r.fails_lhs == lhs && r.fails_rhs == rhs_at(r.bound - 1) && r.fails_lhs > r.fails_rhs;
    }

    auto turan_bound(long n, int omega) -> Rational
    {
        if (omega < 1 || omega > n)
            throw DomainError("turan_bound needs 1 <= omega <= n");
        Rational result{binomial(omega, 2) * Integer{n} * Integer{n}, Integer{omega} * Integer{omega}};
        result.canonicalize();
        return result;
    }
}
