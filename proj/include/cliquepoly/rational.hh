#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliquepoly
{
    using Integer = mpz_class;
    using Rational = mpq_class;

    /// Parses "p/q" or a plain integer (optionally signed). Returns false on malformed text
    /// or a zero denominator; the result is canonicalized.
    auto parse_rational(std::string_view text, Rational & out) -> bool;

    /// Canonical "p/q" form, always with an explicit denominator.
    auto to_pq_string(const Rational & value) -> std::string;

    auto pow(const Rational & base, unsigned long exponent) -> Rational;
    auto pow(const Integer & base, unsigned long exponent) -> Integer;

    auto binomial(unsigned long n, unsigned long k) -> Integer;

    /// value^(1/root) as a double, for display only.
    auto approximate_root(const Rational & value, unsigned long root) -> double;

    /// Renders a double with 6 significant digits.
    auto format_approx(double value) -> std::string;

    enum class Ordering
    {
        Less,
        Equal,
        Greater
    };

    auto compare(const Rational & a, const Rational & b) -> Ordering;

    /// Compares a^(1/p) with b^(1/q) for a, b >= 0 by comparing a^q with b^p.
    auto compare_roots(const Rational & a, unsigned long p, const Rational & b, unsigned long q) -> Ordering;
}
