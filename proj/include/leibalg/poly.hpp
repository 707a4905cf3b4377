#pragma once

#include <leibalg/matrix.hpp>
#include <leibalg/rational.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace leibalg {

/// Univariate polynomial over Q, coefficients lowest degree first, no
/// trailing zero coefficient (zero polynomial has an empty list).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly(Rational c) : c_{std::move(c)} { trim(); }
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }

    static Poly variable() { return Poly{Rational(0), Rational(1)}; }

    static Poly monomial(std::size_t deg, const Rational& c = Rational(1)) {
        std::vector<Rational> v(deg + 1, Rational(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
        return Poly(std::move(v));
    }

    Poly operator-(const Poly& o) const {
        std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
        return Poly(std::move(v));
    }

    Poly operator-() const {
        std::vector<Rational> v(c_);
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        return Poly(std::move(v));
    }

    Poly operator*(const Rational& s) const {
        std::vector<Rational> v(c_);
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational((long)i);
        return Poly(std::move(v));
    }

    /// Monic rescale (zero stays zero).
    Poly monic() const {
        if (is_zero()) return Poly();
        return *this * (Rational(1) / leading());
    }

    /// Euclidean division, remainder form: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw error("poly division by zero");
        std::vector<Rational> rem(c_);
        std::vector<Rational> quo;
        if (rem.size() >= d.c_.size()) quo.assign(rem.size() - d.c_.size() + 1, Rational(0));
        const Rational lead = d.c_.back();
        while (rem.size() >= d.c_.size() && !(rem.size() == 0)) {
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.size() < d.c_.size()) break;
            const std::size_t shift = rem.size() - d.c_.size();
            const Rational f = rem.back() / lead;
            quo[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    std::string str(const char* var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0) s += "-";
            const Rational a = abs(c_[i]);
            if (i == 0 || a != 1) s += to_string(a);
            if (i > 0) {
                if (a != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {
inline void divide_by_int(Rational& v, long k) { v /= k; }
inline void divide_by_int(Poly& v, long k) { v = v * Rational(1, k); }
}  // namespace detail

/// Characteristic polynomial det(tI - m) by the Faddeev-LeVerrier recurrence;
/// exact over Q and over Q[t] (polynomial-entry matrices).
template <class R>
std::vector<R> char_poly_coeffs(const MatrixT<R>& m) {
    if (!m.is_square()) throw error("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<R> c(n + 1, R(0));
    c[n] = R(1);
    MatrixT<R> mk = MatrixT<R>::zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c[n - k + 1];
        mk = m * mk;
        R t = mk.trace();
        detail::divide_by_int(t, (long)k);
        c[n - k] = -t;
    }
    return c;
}

inline Poly char_poly(const Matrix& m) { return Poly(char_poly_coeffs(m)); }

/// True iff char_poly(m) = t^n, equivalently m^n = 0.
inline bool is_nilpotent_matrix(const Matrix& m) {
    const auto c = char_poly_coeffs(m);
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (c[k] != 0) return false;
    return true;
}

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Sturm chain of p (square-free part is not required; standard chain).
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> s;
    if (p.is_zero()) return s;
    s.push_back(p);
    Poly d = p.derivative();
    if (!d.is_zero()) s.push_back(d);
    while (s.size() >= 2 && !s.back().is_zero()) {
        Poly r = s[s.size() - 2].divmod(s.back()).second;
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

namespace detail {
inline int sign_changes_at_inf(const std::vector<Poly>& chain, int dir) {
    int changes = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q.leading());
        if (dir < 0 && q.degree() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}
}  // namespace detail

/// Number of distinct real roots of p (Sturm count over the whole line).
inline std::size_t count_real_roots(const Poly& p) {
    if (p.is_zero()) throw error("count_real_roots: zero polynomial");
    if (p.is_constant()) return 0;
    const auto chain = sturm_chain(p);
    const int at_minus = detail::sign_changes_at_inf(chain, -1);
    const int at_plus = detail::sign_changes_at_inf(chain, +1);
    return (std::size_t)(at_minus - at_plus);
}

/// All rational roots of p, found exactly from divisor candidates of the
/// integer-cleared coefficients.
inline std::vector<Rational> rational_roots(const Poly& p) {
    std::vector<Rational> roots;
    if (p.is_zero() || p.is_constant()) return roots;
    Integer clear(1);
    for (const auto& c : p.coefficients()) clear = lcm(clear, den(c));
    std::vector<Integer> ic;
    for (const auto& c : p.coefficients()) ic.push_back(num(c) * (clear / den(c)));
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    const Integer a0 = abs(ic[low]), an = abs(ic.back());
    auto divisors = [](const Integer& v) {
        std::vector<Integer> ds;
        for (Integer d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    for (const auto& pnum : divisors(a0))
        for (const auto& qden : divisors(an))
            for (int s : {1, -1}) {
                const Rational cand(s * pnum, qden);
                if (p.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace leibalg
