#pragma once

// Trial division of rational functions against the candidate factor family
// { l*r^k -+ 1, l -+ r^k, r^k -+ 1 }.

#include <set>
#include <vector>

#include "ratfun.hpp"

namespace cgw {

struct FactoredForm {
    RatFun unit;                               // monomial times rational
    std::vector<std::pair<BiPoly, int>> factors;  // (poly, multiplicity), den factors negative
    bool complete = false;
    RatFun cofactor = RatFun(1);               // leftover when incomplete

    RatFun expand() const {
        RatFun x = unit * cofactor;
        for (const auto& [p, m] : factors) {
            RatFun f(p);
            for (int k = 0; k < (m > 0 ? m : -m); ++k)
                x = m > 0 ? x * f : x / f;
        }
        return x;
    }

    std::string str() const {
        std::string s;
        for (const auto& [p, m] : factors) {
            if (!s.empty()) s += " * ";
            s += "(" + p.str() + ")";
            if (m != 1) s += "^" + std::to_string(m);
        }
        std::string u = unit.str();
        if (s.empty()) return u;
        if (!(u == "1")) s = u + " * " + s;
        if (!complete) s += " * [" + cofactor.str() + "]";
        return s;
    }
};

inline std::vector<BiPoly> default_family(int n) {
    std::vector<BiPoly> fam;
    std::set<std::string> seen;
    auto put = [&](BiPoly p) {
        p = p.poly_part().primitive();
        if (p.is_constant()) return;
        std::string s = p.str();
        if (seen.insert(s).second) fam.push_back(p);
    };
    BiPoly l = BiPoly::var_l();
    for (int k = -4 * n; k <= 4 * n; ++k) {
        BiPoly lk = BiPoly::term(Q(1), 1, k);
        put(lk - BiPoly(1));
        put(lk + BiPoly(1));
        put(l - BiPoly::term(Q(1), 0, k));
        put(l + BiPoly::term(Q(1), 0, k));
    }
    for (int k = 1; k <= 2 * n; ++k) {
        BiPoly rk = BiPoly::term(Q(1), 0, k);
        put(rk - BiPoly(1));
        put(rk + BiPoly(1));
    }
    return fam;
}

inline FactoredForm trial_factor(const RatFun& x, const std::vector<BiPoly>& family) {
    FactoredForm out;
    if (x.zero()) {
        out.unit = RatFun(0);
        out.complete = true;
        return out;
    }
    BiPoly num = x.num(), den = x.den();
    for (const auto& f : family) {
        int mult = 0;
        while (true) {
            auto q = num.divided_exact(f);
            if (!q) break;
            num = *q;
            ++mult;
        }
        while (true) {
            auto q = den.divided_exact(f);
            if (!q) break;
            den = *q;
            --mult;
        }
        if (mult != 0) out.factors.push_back({f, mult});
    }
    if (num.is_monomial() && den.is_monomial()) {
        out.unit = RatFun(num, den);
        out.complete = true;
    } else {
        // pull out what monomial unit we can, leave the rest opaque
        out.unit = RatFun(1);
        out.cofactor = RatFun(num, den);
    }
    return out;
}

inline FactoredForm trial_factor(const RatFun& x, int n) {
    return trial_factor(x, default_family(n));
}

// l-roots of the degree-1-in-l factors, each of the form a*l + b with monomial a, b.
inline std::vector<LValue> l_roots(const FactoredForm& f) {
    std::vector<LValue> roots;
    for (const auto& [p, m] : f.factors) {
        if (m <= 0) continue;
        if (p.max_l() != 1 || p.min_l() != 0) continue;
        BiPoly a = p.coeff_l(1), b = p.coeff_l(0);
        if (!a.is_monomial() || !b.is_monomial()) continue;
        auto [ka, ca] = a.lead();
        auto [kb, cb] = b.lead();
        roots.push_back(LValue{-cb / ca, kb.second - ka.second});
    }
    return roots;
}

} // namespace cgw
