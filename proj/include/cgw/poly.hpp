#pragma once

// Bivariate Laurent polynomials over Q in the variables l and r.
// Exponent pairs are (a, b) for l^a * r^b, ordered lexicographically.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace cgw {

class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Q>;

    BiPoly() = default;
    explicit BiPoly(const Q& c) {
        if (sgn(c) != 0) t_[{0, 0}] = c;
    }
    BiPoly(long c) : BiPoly(Q(c)) {}

    static BiPoly term(const Q& c, int a, int b) {
        BiPoly p;
        if (sgn(c) != 0) p.t_[{a, b}] = c;
        return p;
    }
    static BiPoly var_l() { return term(Q(1), 1, 0); }
    static BiPoly var_r() { return term(Q(1), 0, 1); }

    bool zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    bool operator==(const BiPoly& o) const { return t_ == o.t_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.t_) add_term(k, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.t_) add_term(k, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    BiPoly operator-() const {
        BiPoly p;
        for (const auto& [k, c] : t_) p.t_[k] = -c;
        return p;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly p;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_)
                p.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return p;
    }
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }
    BiPoly scaled(const Q& c) const {
        BiPoly p;
        if (sgn(c) == 0) return p;
        for (const auto& [k, v] : t_) p.t_[k] = v * c;
        return p;
    }
    BiPoly shifted(int da, int db) const {
        BiPoly p;
        for (const auto& [k, v] : t_) p.t_[{k.first + da, k.second + db}] = v;
        return p;
    }

    int min_l() const { return fold_l(true); }
    int max_l() const { return fold_l(false); }
    int min_r() const { return fold_r(true); }
    int max_r() const { return fold_r(false); }

    // Strip the monomial l^min_l * r^min_r so both minimal exponents become 0.
    BiPoly poly_part() const {
        if (zero()) return BiPoly();
        return shifted(-min_l(), -min_r());
    }

    // Leading term under lex order on (a, b).
    std::pair<Key, Q> lead() const {
        auto it = t_.rbegin();
        return {it->first, it->second};
    }

    // Rational content with the sign of the leading coefficient.
    Q content() const {
        if (zero()) return Q(0);
        mpz_class g = 0, l = 1;
        for (const auto& [k, c] : t_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
        Q c = Q(g) / Q(l);
        if (sgn(lead().second) < 0) c = -c;
        return c;
    }
    BiPoly primitive() const {
        if (zero()) return BiPoly();
        return scaled(Q(1) / content());
    }

    // Exact Laurent division; nullopt if the quotient does not exist.
    std::optional<BiPoly> divided_exact(const BiPoly& d) const {
        if (d.zero()) return std::nullopt;
        if (zero()) return BiPoly();
        int sa = min_l() - d.min_l(), sb = min_r() - d.min_r();
        BiPoly rem = poly_part(), dd = d.poly_part();
        auto [dk, dc] = dd.lead();
        BiPoly q;
        while (!rem.zero()) {
            auto [rk, rc] = rem.lead();
            int ea = rk.first - dk.first, eb = rk.second - dk.second;
            if (ea < 0 || eb < 0) return std::nullopt;
            Q qc = rc / dc;
            q.add_term({ea, eb}, qc);
            rem -= dd.shifted(ea, eb).scaled(qc);
        }
        return q.shifted(sa, sb);
    }

    Q eval(const Q& lv, const Q& rv) const {
        Q s(0);
        for (const auto& [k, c] : t_)
            s += c * qpow(lv, k.first) * qpow(rv, k.second);
        return s;
    }

    // Substitute l = c * r^k; result involves r only.
    BiPoly eval_l(const Q& c, int k) const {
        BiPoly p;
        for (const auto& [key, v] : t_)
            p.add_term({0, key.second + k * key.first}, v * qpow(c, key.first));
        return p;
    }

    int deg_l() const { return zero() ? -1 : max_l(); }

    // Coefficient of l^a as a polynomial in r alone.
    BiPoly coeff_l(int a) const {
        BiPoly p;
        for (const auto& [k, c] : t_)
            if (k.first == a) p.t_[{0, k.second}] = c;
        return p;
    }

    bool is_monomial() const { return t_.size() == 1; }
    bool is_constant() const {
        return zero() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
    }

    // Terms sorted by (l-exp desc, r-exp desc), e.g. "l*r^21 - 1".
    std::string str() const {
        if (zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [k, c] = *it;
            Q ac = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
                first = false;
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            std::vector<std::string> parts;
            if (!(ac == 1) || (k.first == 0 && k.second == 0)) parts.push_back(qstr(ac));
            if (k.first != 0)
                parts.push_back(k.first == 1 ? "l" : "l^" + std::to_string(k.first));
            if (k.second != 0)
                parts.push_back(k.second == 1 ? "r" : "r^" + std::to_string(k.second));
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) os << "*";
                os << parts[i];
            }
        }
        return os.str();
    }

    void add_term(const Key& k, const Q& c) {
        if (sgn(c) == 0) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_[k] = c;
        } else {
            it->second += c;
            if (sgn(it->second) == 0) t_.erase(it);
        }
    }

private:
    Terms t_;

    int fold_l(bool mn) const {
        int v = 0;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (first || (mn ? k.first < v : k.first > v)) v = k.first;
            first = false;
        }
        return v;
    }
    int fold_r(bool mn) const {
        int v = 0;
        bool first = true;
        for (const auto& [k, c] : t_) {
            if (first || (mn ? k.second < v : k.second > v)) v = k.second;
            first = false;
        }
        return v;
    }
};

namespace detail {

// Univariate gcd in r (inputs have no l terms); primitive with positive lead.
inline BiPoly gcd_uni_r(BiPoly a, BiPoly b) {
    a = a.poly_part().primitive();
    b = b.poly_part().primitive();
    if (a.zero()) return b;
    if (b.zero()) return a;
    while (!b.zero()) {
        if (a.max_r() < b.max_r()) std::swap(a, b);
        // ordinary remainder over Q, re-primitivized each round
        BiPoly rem = a;
        auto [bk, bc] = b.lead();
        while (!rem.zero() && rem.max_r() >= bk.second) {
            auto [rk, rc] = rem.lead();
            rem -= b.shifted(0, rk.second - bk.second).scaled(rc / bc);
        }
        a = b;
        b = rem.zero() ? BiPoly() : rem.poly_part().primitive();
    }
    return a;
}

// gcd of the r-coefficient polynomials of p (viewed as a poly in l).
inline BiPoly content_r(const BiPoly& p) {
    BiPoly g;
    for (int a = p.min_l(); a <= p.max_l(); ++a) {
        BiPoly c = p.coeff_l(a);
        if (!c.zero()) g = gcd_uni_r(g, c);
        if (!g.zero() && g.is_constant()) break;
    }
    return g;
}

inline BiPoly prem_l(const BiPoly& a, const BiPoly& b) {
    int db = b.deg_l();
    BiPoly lcb = b.coeff_l(db);
    BiPoly rem = a;
    while (!rem.zero() && rem.deg_l() >= db) {
        int dr = rem.deg_l();
        BiPoly lcr = rem.coeff_l(dr);
        rem = rem * lcb - b * lcr.shifted(dr - db, 0);
    }
    return rem;
}

} // namespace detail

// Polynomial gcd treating l as the outer variable; result primitive, positive lead.
inline BiPoly poly_gcd(BiPoly a, BiPoly b) {
    if (a.zero()) return b.poly_part().primitive();
    if (b.zero()) return a.poly_part().primitive();
    int ml = std::max(0, std::min(a.min_l(), b.min_l()));
    int mr = std::max(0, std::min(a.min_r(), b.min_r()));
    a = a.poly_part();
    b = b.poly_part();
    BiPoly g;
    if (a.deg_l() == 0 && b.deg_l() == 0) {
        g = detail::gcd_uni_r(a, b);
    } else {
        BiPoly ca = detail::content_r(a), cb = detail::content_r(b);
        BiPoly pa = *a.divided_exact(ca), pb = *b.divided_exact(cb);
        BiPoly gc = detail::gcd_uni_r(ca, cb);
        while (true) {
            if (pa.deg_l() < pb.deg_l()) std::swap(pa, pb);
            if (pb.deg_l() == 0) {
                g = pb.zero() ? pa : BiPoly(1);
                break;
            }
            BiPoly rem = detail::prem_l(pa, pb);
            pa = pb;
            if (rem.zero()) {
                g = pa;
                break;
            }
            pb = *rem.divided_exact(detail::content_r(rem));
        }
        if (!g.is_constant()) {
            BiPoly cg = detail::content_r(g);
            g = *g.divided_exact(cg);
        }
        g = g * gc;
    }
    g = g.primitive();
    return g.shifted(ml, mr);
}

inline BiPoly poly_lcm(const BiPoly& a, const BiPoly& b) {
    if (a.zero() || b.zero()) return BiPoly();
    BiPoly g = poly_gcd(a, b);
    return (a * *b.divided_exact(g)).primitive();
}

} // namespace cgw
