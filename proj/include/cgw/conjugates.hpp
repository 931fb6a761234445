#pragma once

// Conjugates C_ij / Chat_ij of the idempotents, their sum S(n), determinant
// factorization, and kernel computations at specialized l.

#include <tuple>

#include "factor.hpp"
#include "rep.hpp"
#include "sample.hpp"

namespace cgw {

// g_{s,t}: product of the generators with subscripts running from s to t,
// multiplied left to right; starred variant multiplies the inverses in the
// same subscript order.
template <class T>
SparseMat<T> g_path(const Rep<T>& rep, int s, int t, bool starred) {
    const auto& src = starred ? rep.gi : rep.g;
    int step = s <= t ? 1 : -1;
    SparseMat<T> m = src[s];
    for (int k = s + step; step > 0 ? k <= t : k >= t; k += step) m = m * src[k];
    return m;
}

template <class T>
SparseMat<T> c_matrix(const Rep<T>& rep, int i, int j, bool hatted) {
    if (!(1 <= i && i < j && j <= rep.n)) throw std::invalid_argument("bad conjugate index");
    if (!hatted) {
        if (j == i + 1) return rep.e[i + 1];
        return g_path(rep, j, i + 2, false) * rep.e[i + 1] * g_path(rep, i + 2, j, true);
    }
    if (i == 1 && j == 2) return rep.e[1];
    if (i == 1) return g_path(rep, j, 3, false) * rep.e[1] * g_path(rep, 3, j, true);
    return g_path(rep, i, 2, false) * g_path(rep, j, 3, false) * rep.e[1] *
           g_path(rep, 3, j, true) * g_path(rep, 2, i, true);
}

template <class T>
struct ConjugateSet {
    const Rep<T>* rep;
    std::map<std::tuple<int, int, bool>, SparseMat<T>> cache;

    explicit ConjugateSet(const Rep<T>& r) : rep(&r) {}

    const SparseMat<T>& get(int i, int j, bool hatted) {
        auto key = std::make_tuple(i, j, hatted);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, c_matrix(*rep, i, j, hatted)).first;
        return it->second;
    }

    template <class F>
    void for_each(F&& fn) {
        for (int i = 1; i <= rep->n; ++i)
            for (int j = i + 1; j <= rep->n; ++j)
                for (bool hatted : {false, true}) fn(i, j, hatted, get(i, j, hatted));
    }
};

template <class T>
SparseMat<T> sum_matrix(const Rep<T>& rep) {
    SparseMat<T> s(rep.dim());
    for (int i = 1; i <= rep.n; ++i)
        for (int j = i + 1; j <= rep.n; ++j)
            for (bool hatted : {false, true}) s = s + c_matrix(rep, i, j, hatted);
    return s;
}

struct KernelReport {
    int n = 0;
    LValue l;
    int rank = 0;
    int k = 0;
    std::vector<std::map<int, RatFun>> basis;  // over Q(r), cleared and normalized
    bool verified = false;                     // each vector killed by every conjugate
};

// clear denominators, strip content, make first nonzero coordinate positive
inline void normalize_kernel_vector(std::vector<RatFun>& v) {
    BiPoly lcm(1);
    for (const auto& x : v)
        if (!x.zero()) lcm = poly_lcm(lcm, x.den());
    std::vector<BiPoly> p(v.size());
    BiPoly g;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].zero()) continue;
        p[i] = *(v[i].num() * lcm).divided_exact(v[i].den());
        g = g.zero() ? p[i].poly_part() : poly_gcd(g, p[i]);
    }
    std::vector<BiPoly> q(v.size());
    int ml = 0, mr = 0;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (p[i].zero()) continue;
        q[i] = *p[i].divided_exact(g);
        if (first || q[i].min_l() < ml) ml = q[i].min_l();
        if (first || q[i].min_r() < mr) mr = q[i].min_r();
        first = false;
    }
    Q lead(0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (q[i].zero()) {
            v[i] = RatFun(0);
            continue;
        }
        BiPoly w = q[i].shifted(-ml, -mr);
        if (sgn(lead) == 0) lead = w.content();
        v[i] = RatFun(w.scaled(Q(1) / lead));
    }
}

inline KernelReport kernel_at(int n, const LValue& l) {
    Rep<RatFun> rep = Rep<RatFun>::build(n, l_specialized_params(l));
    ConjugateSet<RatFun> conj(rep);
    SparseMat<RatFun> s(rep.dim());
    conj.for_each([&](int, int, bool, const SparseMat<RatFun>& c) { s = s + c; });
    auto dense = s.dense();
    auto ker = nullspace(dense, rep.dim());
    KernelReport out;
    out.n = n;
    out.l = l;
    out.k = static_cast<int>(ker.size());
    out.rank = rep.dim() - out.k;
    out.verified = true;
    for (auto& v : ker) {
        normalize_kernel_vector(v);
        std::map<int, RatFun> sv;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].zero()) sv[static_cast<int>(i)] = v[i];
        conj.for_each([&](int, int, bool, const SparseMat<RatFun>& c) {
            if (!vec_zero(c.apply(sv))) out.verified = false;
        });
        out.basis.push_back(std::move(sv));
    }
    return out;
}

// Lemma 5: the kernel is a submodule; image of each basis vector under each
// generator is still annihilated by S(n).
inline bool verify_lemma5(int n, const LValue& l) {
    Rep<RatFun> rep = Rep<RatFun>::build(n, l_specialized_params(l));
    SparseMat<RatFun> s = sum_matrix(rep);
    KernelReport rep_k = kernel_at(n, l);
    for (const auto& v : rep_k.basis)
        for (int k = 1; k <= n; ++k)
            if (!vec_zero(s.apply(rep.g[k].apply(v)))) return false;
    return !rep_k.basis.empty();
}

// symbolic determinant of S(n), trial-factored
inline FactoredForm det_sum_symbolic(int n) {
    Rep<RatFun> rep = Rep<RatFun>::build(n, symbolic_params());
    SparseMat<RatFun> s = sum_matrix(rep);
    RatFun det = bareiss_det(s);
    return trial_factor(det, default_family(n));
}

// paper's closed form for det S(7)
inline RatFun det_s7_closed_form() {
    BiPoly l = BiPoly::var_l();
    auto lrk = [&](int k) { return BiPoly::term(Q(1), 1, k); };
    auto rk = [&](int k) { return BiPoly::term(Q(1), 0, k); };
    RatFun num(1);
    auto mul_pow = [&](const BiPoly& p, int e) {
        RatFun f(p);
        for (int i = 0; i < e; ++i) num = num * f;
    };
    mul_pow(BiPoly(-1) + lrk(1), 21);
    mul_pow(l - rk(3), 14);
    mul_pow(l + rk(3), 35);
    mul_pow(BiPoly(-1) + lrk(7), 6);
    mul_pow(BiPoly(1) + lrk(9), 7);
    mul_pow(BiPoly(-1) + lrk(21), 1);
    BiPoly den = BiPoly::term(Q(1), 42, 105);
    BiPoly r2m1 = rk(2) - BiPoly(1);
    for (int i = 0; i < 42; ++i) den = den * r2m1;
    return num / RatFun(den);
}

// pointwise determinant of S(n) at rational parameters
inline Q det_sum_at_point(int n, const Q& lv, const Q& rv) {
    Rep<Q> rep = Rep<Q>::build(n, rational_params(lv, rv));
    SparseMat<Q> s(rep.dim());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (bool hatted : {false, true}) s = s + c_matrix(rep, i, j, hatted);
    auto a = s.dense();
    int d = rep.dim();
    Q det(1);
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int i = c; i < d; ++i)
            if (sgn(a[i][c]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Q(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Q inv = Q(1) / a[c][c];
        for (int j = c; j < d; ++j) a[c][j] *= inv;
        for (int i = c + 1; i < d; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            Q f = a[i][c];
            for (int j = c; j < d; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

// probabilistic check of det S(n) against a closed form
inline bool det_sum_probabilistic(int n, const RatFun& target, int points, unsigned long seed) {
    PointGen gen(seed, n);
    int done = 0;
    while (done < points) {
        auto [lv, rv] = gen.point();
        if (sgn(target.den().eval(lv, rv)) == 0) continue;
        if (det_sum_at_point(n, lv, rv) != target.eval(lv, rv)) return false;
        ++done;
    }
    return true;
}

} // namespace cgw
