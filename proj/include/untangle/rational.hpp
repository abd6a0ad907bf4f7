#ifndef UNTANGLE_RATIONAL_HPP
#define UNTANGLE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "untangle/error.hpp"

namespace untangle {

// Exact arbitrary precision rational. gmpxx keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with optional leading '-'.
inline Rational parse_rational(std::string_view text)
{
    if (text.empty())
        throw InputError("empty rational literal");
    const std::string s(text);
    const auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size())
            throw InputError("malformed rational '" + s + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw InputError("malformed rational '" + s + "'");
    };
    Rational q;
    if (slash == std::string::npos) {
        check_int(s);
        q.get_num() = mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
        q.get_den() = 1;
    } else {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        check_int(num);
        check_int(den);
        q.get_num() = mpz_class(num[0] == '+' ? num.substr(1) : num, 10);
        q.get_den() = mpz_class(den[0] == '+' ? den.substr(1) : den, 10);
        if (q.get_den() == 0)
            throw InputError("rational with zero denominator '" + s + "'");
    }
    q.canonicalize();
    return q;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string format_rational(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::size_t hash_rational(const Rational& q)
{
    // Low limbs are enough for bucketing; equality is exact.
    const auto h1 = std::hash<long>{}(mpz_get_si(q.get_num_mpz_t()));
    const auto h2 = std::hash<long>{}(mpz_get_si(q.get_den_mpz_t()));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

} // namespace untangle

#endif // UNTANGLE_RATIONAL_HPP
