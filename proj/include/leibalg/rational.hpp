#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leibalg {

/// Exact arbitrary-precision rational scalar. Always kept in canonical form
/// (coprime numerator/denominator, denominator > 0, zero is 0/1).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

/// Renders "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Parses "p" or "p/q" with optional sign; rejects anything else.
inline std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto digits_ok = [](std::string_view t, bool sign) {
        if (sign && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!digits_ok(s, true)) return std::nullopt;
            return Rational(Integer(std::string(s)));
        }
        const auto p = s.substr(0, slash);
        const auto q = s.substr(slash + 1);
        if (!digits_ok(p, true) || !digits_ok(q, false)) return std::nullopt;
        const Integer den{std::string(q)};
        if (den == 0) return std::nullopt;
        return Rational(Integer{std::string(p)}, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Exact integer k-th root: largest-magnitude r with r^k == v, if one exists.
inline std::optional<Integer> integer_kth_root(const Integer& v, unsigned k) {
    if (k == 0) return std::nullopt;
    if (v == 0) return Integer(0);
    const bool neg = v < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    Integer a = abs(v);
    Integer lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, k) < a) hi <<= 1;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) >> 1;
        if (boost::multiprecision::pow(mid, k) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (boost::multiprecision::pow(lo, k) != a) return std::nullopt;
    return neg ? Integer(-lo) : lo;
}

/// Exact rational k-th root, when one exists over Q.
inline std::optional<Rational> rational_kth_root(const Rational& v, unsigned k) {
    auto p = integer_kth_root(num(v), k);
    auto q = integer_kth_root(den(v), k);
    if (!p || !q) return std::nullopt;
    return Rational(*p, *q);
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw error("pow_rational: zero base, negative exponent");
    Rational r(1), b = base;
    long n = e < 0 ? -e : e;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) r = Rational(1) / r;
    return r;
}

}  // namespace leibalg
