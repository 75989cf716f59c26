#pragma once

#include <cliquepoly/rational.hh>

#include <string>

namespace cliquepoly
{
    enum class BoundKind
    {
        UpperOnKt,  // largest k_t consistent with a given k_s
        LowerOnKs   // smallest k_s consistent with a given k_t
    };

    auto to_string(BoundKind kind) -> std::string;

    /// Clique-count bound read off the combinatorial chain between levels s < t:
    ///     (k_t / binom(omega, t))^s <= (k_s / binom(omega, s))^t
    /// cleared of denominators as
    ///     k_t^s * binom(omega, s)^t <= k_s^t * binom(omega, t)^s.
    /// The certificate holds both sides of that inequality at the bound, and at the first
    /// integer past the bound, where it must fail.
    struct BoundReport
    {
        int omega = 0;
        int s = 0;
        int t = 0;
        BoundKind kind = BoundKind::UpperOnKt;
        Integer given;  // k_s for UpperOnKt, k_t for LowerOnKs
        Integer bound;

        Integer holds_lhs, holds_rhs;  // holds_lhs <= holds_rhs
        bool has_failure_witness = false;
        Integer fails_lhs, fails_rhs;  // fails_lhs > fails_rhs, one step past the bound

        double decimal = 0.0;  // the real-valued bound, for display
    };

    /// Largest integer k_t allowed by the chain given k_s. Requires 1 <= s < t <= omega and k_s >= 0.
    auto bound_count(int omega, int s, const Integer & k_s, int t) -> BoundReport;

    /// Smallest integer k_s allowed by the chain given k_t. Same level requirements.
    auto lower_bound_count(int omega, int s, int t, const Integer & k_t) -> BoundReport;

    /// Recomputes both certificate inequalities from the report's own fields.
    auto verify_certificate(const BoundReport & report) -> bool;

    /// binom(omega, 2) * (n / omega)^2 = (1 - 1/omega) n^2 / 2: the s=1, t=2 chain bound on
    /// edges, equal to the Turan number when omega divides n. Requires 1 <= omega <= n.
    auto turan_bound(long n, int omega) -> Rational;
}
