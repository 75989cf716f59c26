#include <cliquepoly/rational.hh>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cliquepoly
{
    namespace
    {
        auto is_integer_text(std::string_view text) -> bool
        {
            if (text.empty())
                return false;
            std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
            if (start == text.size())
                return false;
            for (std::size_t i = start; i < text.size(); ++i)
                if (text[i] < '0' || text[i] > '9')
                    return false;
            return true;
        }

        auto to_integer(std::string_view text) -> Integer
        {
            if (text[0] == '+')
                text.remove_prefix(1);
            return Integer{std::string{text}, 10};
        }
    }

    auto parse_rational(std::string_view text, Rational & out) -> bool
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (! is_integer_text(text))
                return false;
            out = Rational{to_integer(text)};
            return true;
        }

        auto num = text.substr(0, slash), den = text.substr(slash + 1);
        if (! is_integer_text(num) || den.empty() || den[0] == '-' || den[0] == '+' || ! is_integer_text(den))
            return false;
        Integer d = to_integer(den);
        if (d == 0)
            return false;
        out = Rational{to_integer(num), d};
        out.canonicalize();
        return true;
    }

    auto to_pq_string(const Rational & value) -> std::string
    {
        return value.get_num().get_str() + "/" + value.get_den().get_str();
    }

    auto pow(const Integer & base, unsigned long exponent) -> Integer
    {
        Integer result;
        mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
        return result;
    }

    auto pow(const Rational & base, unsigned long exponent) -> Rational
    {
        // num and den stay coprime under powering, so no canonicalize needed
        Rational result;
        mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
        mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
        return result;
    }

    auto binomial(unsigned long n, unsigned long k) -> Integer
    {
        Integer result;
        mpz_bin_uiui(result.get_mpz_t(), n, k);
        return result;
    }

    auto approximate_root(const Rational & value, unsigned long root) -> double
    {
        if (root == 0)
            throw std::invalid_argument("approximate_root: zero root");
        if (value == 0)
            return 0.0;
        // log-domain so huge numerators and denominators do not overflow
        long num_exp = 0, den_exp = 0;
        double num = mpz_get_d_2exp(&num_exp, value.get_num_mpz_t());
        double den = mpz_get_d_2exp(&den_exp, value.get_den_mpz_t());
        double log2_value = std::log2(std::fabs(num)) + double(num_exp) - std::log2(den) - double(den_exp);
        return std::exp2(log2_value / double(root));
    }

    auto format_approx(double value) -> std::string
    {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", value);
        return buf;
    }

    auto compare(const Rational & a, const Rational & b) -> Ordering
    {
        int c = cmp(a, b);
        return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
    }

    auto compare_roots(const Rational & a, unsigned long p, const Rational & b, unsigned long q) -> Ordering
    {
        if (p == 0 || q == 0)
            throw std::invalid_argument("compare_roots: zero root");
        if (a < 0 || b < 0)
            throw std::invalid_argument("compare_roots: negative radicand");
        return compare(pow(a, q), pow(b, p));
    }
}
