#pragma once

// Elements of Q(l,r): normalized fractions of bivariate Laurent polynomials.
// Canonical form: den is a true polynomial, primitive over Z, positive leading
// coefficient, no common polynomial factor with num; Laurent monomials stay in num.

#include <optional>

#include "poly.hpp"

namespace cgw {

// l := coeff * r^power
struct LValue {
    Q coeff = Q(1);
    int power = 0;

    bool operator==(const LValue& o) const {
        return coeff == o.coeff && power == o.power;
    }

    std::string str() const {
        return BiPoly::term(coeff, 0, power).str();
    }

    static LValue parse(const std::string& s) {
        size_t p = 0;
        auto skip = [&] { while (p < s.size() && s[p] == ' ') ++p; };
        skip();
        bool neg = false;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) neg = (s[p++] == '-');
        skip();
        std::string numtok;
        while (p < s.size() && (isdigit(static_cast<unsigned char>(s[p])) || s[p] == '/')) numtok += s[p++];
        skip();
        Q c = numtok.empty() ? Q(1) : qparse(numtok);
        if (p < s.size() && s[p] == '*') { ++p; skip(); }
        int pw = 0;
        if (p < s.size() && s[p] == 'r') {
            ++p;
            pw = 1;
            if (p < s.size() && s[p] == '^') {
                ++p;
                std::string e;
                if (p < s.size() && (s[p] == '-' || s[p] == '+')) e += s[p++];
                while (p < s.size() && isdigit(static_cast<unsigned char>(s[p]))) e += s[p++];
                if (e.empty()) throw std::invalid_argument("bad l expression: " + s);
                pw = std::stoi(e);
            }
        }
        skip();
        if (p != s.size()) throw std::invalid_argument("bad l expression: " + s);
        if (neg) c = -c;
        if (sgn(c) == 0) throw std::invalid_argument("l value must be nonzero");
        return LValue{c, pw};
    }
};

class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}
    explicit RatFun(const Q& c) : num_(c), den_(1) {}
    explicit RatFun(const BiPoly& n) : num_(n), den_(1) {}
    RatFun(BiPoly n, BiPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.zero()) throw std::domain_error("division by zero");
        normalize();
    }

    static RatFun var_l() { return RatFun(BiPoly::var_l()); }
    static RatFun var_r() { return RatFun(BiPoly::var_r()); }
    static RatFun monomial(const Q& c, int a, int b) {
        return RatFun(BiPoly::term(c, a, b));
    }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool zero() const { return num_.zero(); }
    bool is_one() const { return num_ == BiPoly(1) && den_ == BiPoly(1); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.zero()) throw std::domain_error("division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun operator-() const {
        RatFun x = *this;
        x.num_ = -x.num_;
        return x;
    }
    RatFun& operator+=(const RatFun& o) { *this = *this + o; return *this; }
    RatFun& operator-=(const RatFun& o) { *this = *this - o; return *this; }
    RatFun& operator*=(const RatFun& o) { *this = *this * o; return *this; }
    RatFun& operator/=(const RatFun& o) { *this = *this / o; return *this; }

    RatFun inv() const {
        if (zero()) throw std::domain_error("division by zero");
        return RatFun(den_, num_);
    }

    // exact equality by cross-multiplication
    bool operator==(const RatFun& o) const {
        if (den_ == o.den_) return num_ == o.num_;
        return num_ * o.den_ == o.num_ * den_;
    }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    Q eval(const Q& lv, const Q& rv) const {
        Q d = den_.eval(lv, rv);
        if (sgn(d) == 0) throw std::domain_error("denominator vanishes: " + den_.str());
        return num_.eval(lv, rv) / d;
    }

    // substitute l = c * r^k, keeping r symbolic
    RatFun specialize_l(const LValue& l) const {
        BiPoly d = den_.eval_l(l.coeff, l.power);
        if (d.zero())
            throw std::domain_error("denominator vanishes at l=" + l.str() + ": " + den_.str());
        return RatFun(num_.eval_l(l.coeff, l.power), d);
    }

    Q eval_r(const Q& rv) const {
        // valid for elements with no l dependence
        return eval(Q(1), rv);
    }

    size_t complexity() const { return num_.size() + den_.size(); }

    std::string str() const {
        if (den_ == BiPoly(1)) return num_.str();
        std::string n = num_.str();
        if (num_.size() > 1) n = "(" + n + ")";
        std::string d = den_.str();
        if (den_.size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    BiPoly num_, den_;

    void normalize() {
        if (num_.zero()) {
            den_ = BiPoly(1);
            return;
        }
        // move the denominator's monomial part into num
        int ma = den_.min_l(), mb = den_.min_r();
        if (ma || mb) {
            den_ = den_.shifted(-ma, -mb);
            num_ = num_.shifted(-ma, -mb);
        }
        if (!den_.is_constant()) {
            BiPoly g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *num_.divided_exact(g);
                den_ = *den_.divided_exact(g);
            }
        }
        Q c = den_.content();
        if (!(c == 1)) {
            den_ = den_.scaled(Q(1) / c);
            num_ = num_.scaled(Q(1) / c);
        }
    }
};

inline RatFun specialize(const RatFun& x, const std::optional<LValue>& l,
                         const std::optional<Q>& r) {
    RatFun y = x;
    if (l) y = y.specialize_l(*l);
    if (r) {
        BiPoly n, dn;
        for (const auto& [k, c] : y.num().terms())
            n.add_term({k.first, 0}, c * qpow(*r, k.second));
        for (const auto& [k, c] : y.den().terms())
            dn.add_term({k.first, 0}, c * qpow(*r, k.second));
        if (dn.zero())
            throw std::domain_error("denominator vanishes at r=" + qstr(*r) + ": " + y.den().str());
        y = RatFun(n, dn);
    }
    return y;
}

} // namespace cgw
