#pragma once

// Explicit invariant vectors and matrix families: the one-dimensional
// eigenvector u, the v_i ladder, the t_ij span, the kernel vectors
// X / Y / z / J_n, the 4x4 H matrices and the 2x2 J matrices.

#include <set>
#include <type_traits>

#include "conjugates.hpp"

namespace cgw {

struct CriticalSet {
    int n = 0;
    std::vector<LValue> l_values;
    std::vector<LValue> t_values;
    bool bijection = false;  // t-set maps onto l-set under l = r^3 / t
};

inline CriticalSet critical_sets(int n) {
    if (n < 4) throw std::invalid_argument("n must be >= 4");
    CriticalSet cs;
    cs.n = n;
    cs.l_values = {{Q(1), 7 - 4 * n}, {Q(1), 7 - 2 * n}, {Q(-1), 5 - 2 * n},
                   {Q(1), 3},         {Q(1), -1},        {Q(-1), 3}};
    cs.t_values = {{Q(1), 4 * n - 4}, {Q(1), 2 * n - 4}, {Q(-1), 2 * n - 2},
                   {Q(1), 0},         {Q(1), 4},         {Q(-1), 0}};
    auto key = [](const LValue& v) { return std::pair<std::string, int>{qstr(v.coeff), v.power}; };
    std::multiset<std::pair<std::string, int>> a, b;
    for (const auto& t : cs.t_values)
        a.insert(key(LValue{Q(1) / t.coeff, 3 - t.power}));  // l = r^3 / t
    for (const auto& l : cs.l_values) b.insert(key(l));
    cs.bijection = a == b;
    return cs;
}

template <class T>
using Vec = std::map<Label, T>;

template <class T>
std::map<int, T> to_indexed(const Basis& b, const Vec<T>& v) {
    std::map<int, T> out;
    for (const auto& [lab, c] : v)
        if (!scalar_zero(c)) out[b.index.at(lab)] = c;
    return out;
}

template <class T>
void vec_add(Vec<T>& v, const Label& lab, const std::type_identity_t<T>& c) {
    auto it = v.find(lab);
    if (it == v.end()) {
        if (!scalar_zero(c)) v[lab] = c;
    } else {
        it->second += c;
        if (scalar_zero(it->second)) v.erase(it);
    }
}

// Theorem-3 eigenvector: u = sum r^{i+j} (wh_ij + r^{2n-4} w_ij), at l = r^{7-4n}.
template <class T>
Vec<T> vector_u(int n, const RepParams<T>& par) {
    Vec<T> u;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            vec_add(u, {i, j, true}, par.rpow(i + j));
            vec_add(u, {i, j, false}, par.rpow(i + j + 2 * n - 4));
        }
    return u;
}

// v_1 of the (Delta) ladder (Eq. (35) shape), defined for n >= 5.
template <class T>
Vec<T> vector_v1(int n, const RepParams<T>& par) {
    Vec<T> v;
    vec_add(v, {1, 2, false}, par.rpow(2 * n - 6) - par.rpow(-2));
    for (int j = 3; j <= n; ++j) {
        T c = par.rpow(j - 5);
        vec_add(v, {2, j, false}, c);
        vec_add(v, {1, j, false}, -(c * par.r));
        vec_add(v, {2, j, true}, c * par.rpow(2));
        vec_add(v, {1, j, true}, -(c * par.rpow(3)));
    }
    return v;
}

template <class T>
std::map<int, T> scale_vec(const std::map<int, T>& v, const std::type_identity_t<T>& c) {
    std::map<int, T> out;
    for (const auto& [i, x] : v) {
        T y = x * c;
        if (!scalar_zero(y)) out[i] = y;
    }
    return out;
}

template <class T>
std::map<int, T> add_vec(const std::map<int, T>& a, const std::map<int, T>& b) {
    std::map<int, T> out = a;
    for (const auto& [i, x] : b) {
        auto it = out.find(i);
        if (it == out.end()) {
            if (!scalar_zero(x)) out[i] = x;
        } else {
            it->second += x;
            if (scalar_zero(it->second)) out.erase(it);
        }
    }
    return out;
}

// v_1 .. v_{n-1}, indexed 1..n-1, generated by the (f') recursion
// v_{i-1} = (1/r) nu_i(v_{i-2}) - v_{i-2}.
template <class T>
std::vector<std::map<int, T>> vectors_v(const Rep<T>& rep) {
    int n = rep.n;
    if (n < 5) throw std::invalid_argument("vectors_v needs n >= 5");
    std::vector<std::map<int, T>> v(n);
    v[1] = to_indexed(rep.basis, vector_v1(n, rep.par));
    T rinv = T(1) / rep.par.r;
    for (int i = 3; i <= n; ++i)
        v[i - 1] = add_vec(scale_vec(rep.g[i].apply(v[i - 2]), rinv), scale_vec(v[i - 2], T(-1)));
    v.erase(v.begin());  // drop unused slot 0; v[t-1] is v_t afterwards
    return v;
}

// closed-form v_i for the cross-check against the recursion
template <class T>
Vec<T> vector_v_closed(int n, int i, const RepParams<T>& par) {
    Vec<T> cf;
    vec_add(cf, {i, i + 1, false}, par.rpow(2 * n - 6) - par.rpow(-2));
    for (int j = i + 2; j <= n; ++j) {
        T c = par.rpow(j - i - 4);
        vec_add(cf, {i + 1, j, false}, c);
        vec_add(cf, {i, j, false}, -(c * par.r));
        vec_add(cf, {i + 1, j, true}, c * par.rpow(2));
        vec_add(cf, {i, j, true}, -(c * par.rpow(3)));
    }
    for (int s = 1; s < i; ++s) {
        T c = par.rpow(s - i);
        vec_add(cf, {s, i + 1, false}, c * par.rpow(2 * n - 6));
        vec_add(cf, {s, i, false}, -(c * par.rpow(2 * n - 5)));
        vec_add(cf, {s, i + 1, true}, c);
        vec_add(cf, {s, i, true}, -(c * par.r));
    }
    return cf;
}

// Full (Delta) system check. (b') uses the corrected coefficient r on v_2
// (the conjugate of (nabla)(b) under r -> -1/r).
template <class T>
std::vector<std::pair<std::string, bool>> check_delta_system(
    const Rep<T>& rep, const std::vector<std::map<int, T>>& v) {
    int n = rep.n;
    T r = rep.par.r;
    T rinv = T(1) / r;
    auto vt = [&](int t) -> const std::map<int, T>& { return v[t - 1]; };
    std::vector<std::pair<std::string, bool>> out;
    auto rec = [&](const std::string& name, int k, int t, const std::map<int, T>& expd) {
        auto got = rep.g[k].apply(vt(t));
        out.push_back({name + " k=" + std::to_string(k) + " t=" + std::to_string(t),
                       vec_zero(add_vec(got, scale_vec(expd, T(-1))))});
    };
    for (int t = 1; t <= n - 1; ++t) {
        if (t == 1)
            rec("a'", 1, 1, scale_vec(vt(1), -rinv));
        else if (t == 2)
            rec("b'", 1, 2, add_vec(scale_vec(vt(1), rinv), scale_vec(vt(2), r)));
        else
            rec("c'", 1, t, scale_vec(vt(t), r));
    }
    for (int k = 2; k <= n; ++k)
        for (int t = 1; t <= n - 1; ++t) {
            if (t == k && k <= n - 1)
                rec("d'", k, t, add_vec(scale_vec(vt(k - 1), rinv), scale_vec(vt(k), r)));
            else if (t == k - 1)
                rec("e'", k, t, scale_vec(vt(k - 1), -rinv));
            else if (t == k - 2)
                rec("f'", k, t, scale_vec(add_vec(vt(k - 2), vt(k - 1)), r));
            else if (t != k)
                rec("g'", k, t, scale_vec(vt(t), r));
        }
    return out;
}

// Theorem-7 span: t_ij = w_ij - wh_ij, invariant at l = 1/r.
template <class T>
std::vector<std::map<int, T>> vectors_t(const Rep<T>& rep) {
    std::vector<std::map<int, T>> out;
    for (int i = 1; i <= rep.n; ++i)
        for (int j = i + 1; j <= rep.n; ++j) {
            Vec<T> v;
            vec_add(v, {i, j, false}, T(1));
            vec_add(v, {i, j, true}, T(-1));
            out.push_back(to_indexed(rep.basis, v));
        }
    return out;
}

// Is the span of `vecs` invariant under every generator?
template <class T>
bool span_invariant(const Rep<T>& rep, const std::vector<std::map<int, T>>& vecs) {
    int d = rep.dim();
    auto densify = [&](const std::map<int, T>& v) {
        std::vector<T> row(d, T(0));
        for (const auto& [i, c] : v) row[i] = c;
        return row;
    };
    std::vector<std::vector<T>> base;
    for (const auto& v : vecs) base.push_back(densify(v));
    int rk = rank_of(base);
    for (int k = 1; k <= rep.n; ++k)
        for (const auto& v : vecs) {
            auto ext = base;
            ext.push_back(densify(rep.g[k].apply(v)));
            if (rank_of(ext) != rk) return false;
        }
    return true;
}

// span dimension
template <class T>
int span_dim(const Rep<T>& rep, const std::vector<std::map<int, T>>& vecs) {
    int d = rep.dim();
    std::vector<std::vector<T>> base;
    for (const auto& v : vecs) {
        std::vector<T> row(d, T(0));
        for (const auto& [i, c] : v) row[i] = c;
        base.push_back(std::move(row));
    }
    return rank_of(base);
}

// Theorem-10 kernel vectors, each with its own l-value.
template <class T>
Vec<T> vector_X(const RepParams<T>& par) {
    Vec<T> v;
    vec_add(v, {2, 4, false}, T(1));
    vec_add(v, {2, 4, true}, par.rpow(2));
    vec_add(v, {1, 4, false}, -par.r);
    vec_add(v, {1, 4, true}, -par.rpow(3));
    vec_add(v, {2, 3, false}, -par.r);
    vec_add(v, {2, 3, true}, -par.rpow(3));
    vec_add(v, {1, 3, false}, par.rpow(2));
    vec_add(v, {1, 3, true}, par.rpow(4));
    return v;
}

template <class T>
Vec<T> vector_Y(int n, const RepParams<T>& par) {
    if (n < 5) throw std::invalid_argument("Y requires n >= 5");
    Vec<T> v;
    vec_add(v, {3, 4, false}, T(1));
    vec_add(v, {3, 5, false}, -par.rpow(-1));
    vec_add(v, {4, 5, false}, par.rpow(-2));
    return v;
}

template <class T>
Vec<T> vector_z(int n, const RepParams<T>& par) {
    if (n != 4) throw std::invalid_argument("z is the n = 4 vector");
    Vec<T> v;
    vec_add(v, {2, 4, true}, par.rpow(3));
    vec_add(v, {3, 4, true}, -par.rpow(2));
    vec_add(v, {2, 3, false}, T(1));
    return v;
}

template <class T>
Vec<T> vector_Jn(int n, const RepParams<T>& par) {
    Vec<T> v;
    vec_add(v, {1, 2, true}, T(1));
    vec_add(v, {1, 2, false}, par.rpow(2 * n - 6));
    vec_add(v, {1, 3, true}, -par.rpow(-1));
    vec_add(v, {1, 3, false}, -par.rpow(2 * n - 7));
    vec_add(v, {2, 3, false}, -(T(1) + par.rpow(2 * n - 6)));
    for (int j = 4; j <= n; ++j) {
        T c = par.rpow(j - 4);
        vec_add(v, {3, j, false}, c);
        vec_add(v, {3, j, true}, -c);
        vec_add(v, {2, j, false}, -(c * par.r));
        vec_add(v, {2, j, true}, c * par.r);
    }
    return v;
}

// membership in the common kernel of all conjugates
template <class T>
bool in_kernel(ConjugateSet<T>& conj, const Vec<T>& v) {
    auto iv = to_indexed(conj.rep->basis, v);
    bool ok = true;
    conj.for_each([&](int, int, bool, const SparseMat<T>& c) {
        if (ok && !vec_zero(c.apply(iv))) ok = false;
    });
    return ok;
}

// Proposition 1: e_i annihilates every vector of a proper invariant subspace.
template <class T>
bool e_annihilation_check(const Rep<T>& rep, const std::vector<std::map<int, T>>& vecs) {
    for (int k = 1; k <= rep.n; ++k)
        for (const auto& v : vecs)
            if (!vec_zero(rep.e[k].apply(v))) return false;
    return true;
}

// 4x4 Hecke matrices of Theorem 9 over Q(r).
inline std::vector<SparseMat<RatFun>> h_matrices() {
    auto rp = [](int k) { return RatFun::monomial(Q(1), 0, k); };
    auto mk = [&](std::vector<std::vector<RatFun>> rows) {
        SparseMat<RatFun> m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.set(i, j, rows[i][j]);
        return m;
    };
    RatFun z(0), r = rp(1);
    std::vector<SparseMat<RatFun>> h;
    h.push_back(mk({{r, z, z, z},
                    {rp(-2) - rp(2), rp(-3), -rp(-2) - rp(-4), z},
                    {rp(-1) - rp(3), rp(-2) - rp(2), r - rp(-3) - rp(-1), z},
                    {RatFun(1) - rp(2), rp(-1) - r, -rp(-2), r}}));
    h.push_back(mk({{r, z, z, z}, {z, r, z, z}, {z, z, r, z}, {z, z, RatFun(1), -rp(-1)}}));
    h.push_back(mk({{r, z, z, z}, {z, r, z, z}, {z, RatFun(1), -rp(-1), RatFun(1)}, {z, z, z, r}}));
    h.push_back(mk({{r - rp(-1), RatFun(1), -rp(-1), z},
                    {RatFun(1), z, RatFun(1), z},
                    {z, z, r, z},
                    {z, z, z, r}}));
    return h;
}

inline std::vector<SparseMat<RatFun>> j_matrices() {
    auto rp = [](int k) { return RatFun::monomial(Q(1), 0, k); };
    RatFun z(0), r = rp(1);
    SparseMat<RatFun> a(2), b(2);
    a.set(0, 0, -rp(-1));
    a.set(0, 1, RatFun(1));
    a.set(1, 1, r);
    b.set(0, 0, r);
    b.set(1, 0, RatFun(1));
    b.set(1, 1, -rp(-1));
    return {a, a, b, a};  // J_1 = J_2 = J_4, J_3 distinct
}

struct HeckeCheck {
    std::vector<std::pair<std::string, bool>> items;
    bool all() const {
        for (const auto& [n, p] : items)
            if (!p) return false;
        return true;
    }
};

// relations of the D4 diagram plus the quadratic, for 4 given matrices
inline HeckeCheck d4_hecke_relations(const std::vector<SparseMat<RatFun>>& h) {
    RatFun r = RatFun::monomial(Q(1), 0, 1);
    RatFun m = RatFun::monomial(Q(1), 0, -1) - r;
    int d = h[0].dim();
    SparseMat<RatFun> id = SparseMat<RatFun>::identity(d);
    HeckeCheck out;
    auto rec = [&](const std::string& name, bool p) { out.items.push_back({name, p}); };
    for (int i = 0; i < 4; ++i)
        rec("quad " + std::to_string(i + 1), h[i] * h[i] + h[i].scaled(m) == id);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            const auto& a = h[i - 1];
            const auto& b = h[j - 1];
            std::string ij = std::to_string(i) + std::to_string(j);
            if (dn_adjacent(i, j))
                rec("braid " + ij, a * b * a == b * a * b);
            else
                rec("comm " + ij, a * b == b * a);
        }
    return out;
}

// dimension of { u : H_i u = r u for all i }
inline int joint_r_eigenspace_dim(const std::vector<SparseMat<RatFun>>& h) {
    RatFun r = RatFun::monomial(Q(1), 0, 1);
    int d = h[0].dim();
    std::vector<std::vector<RatFun>> rows;
    for (const auto& m : h) {
        auto a = (m - SparseMat<RatFun>::identity(d).scaled(r)).dense();
        for (auto& row : a) rows.push_back(std::move(row));
    }
    return d - rank_of(rows);
}

// (nabla) search: express v_2..v_{n-1} in terms of v_1 via the (f) recursion
// v_{i-1} = -r nu_i(v_{i-2}) - v_{i-2}, then impose the chosen labeled
// constraints as a linear system in v_1. Returns the solution-space dimension.
inline int nabla_search(int n, const Q& lv, const Q& rv, const std::string& labels) {
    Rep<Q> rep = Rep<Q>::build(n, rational_params(lv, rv));
    int d = rep.dim();
    auto mm = [&](const SparseMat<Q>& m, const std::vector<std::vector<Q>>& v) {
        std::vector<std::vector<Q>> out(d, std::vector<Q>(d, Q(0)));
        for (int a = 0; a < d; ++a)
            for (const auto& [b, c] : m.row(a))
                for (int k = 0; k < d; ++k)
                    if (sgn(v[b][k]) != 0) out[a][k] += c * v[b][k];
        return out;
    };
    std::vector<std::vector<std::vector<Q>>> V(n);
    V[1].assign(d, std::vector<Q>(d, Q(0)));
    for (int i = 0; i < d; ++i) V[1][i][i] = 1;
    Q r = rv;
    for (int i = 3; i <= n; ++i) {
        auto gv = mm(rep.g[i], V[i - 2]);
        V[i - 1].assign(d, std::vector<Q>(d, Q(0)));
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) V[i - 1][a][b] = -r * gv[a][b] - V[i - 2][a][b];
    }
    std::vector<std::vector<Q>> rows;
    auto lin = [&](std::vector<std::pair<Q, int>> terms) {
        std::vector<std::vector<Q>> out(d, std::vector<Q>(d, Q(0)));
        for (const auto& [c, t] : terms)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) out[a][b] += c * V[t][a][b];
        return out;
    };
    auto constrain = [&](const std::vector<std::vector<Q>>& lhs,
                         const std::vector<std::vector<Q>>& rhs) {
        for (int a = 0; a < d; ++a) {
            std::vector<Q> row(d);
            for (int b = 0; b < d; ++b) row[b] = lhs[a][b] - rhs[a][b];
            rows.push_back(std::move(row));
        }
    };
    auto on = [&](char c) { return labels.find(c) != std::string::npos; };
    Q rinv = Q(1) / r;
    for (int t = 1; t <= n - 1; ++t) {
        auto lhs = mm(rep.g[1], V[t]);
        if (t == 1 && on('a'))
            constrain(lhs, lin({{r, 1}}));
        else if (t == 2 && on('b'))
            constrain(lhs, lin({{-r, 1}, {-rinv, 2}}));
        else if (t >= 3 && on('c'))
            constrain(lhs, lin({{-rinv, t}}));
    }
    for (int i = 2; i <= n; ++i)
        for (int t = 1; t <= n - 1; ++t) {
            if (t == i - 2) continue;  // consumed by the recursion
            auto lhs = mm(rep.g[i], V[t]);
            if (t == i && on('d'))
                constrain(lhs, lin({{-r, i - 1}, {-rinv, i}}));
            else if (t == i - 1 && on('e'))
                constrain(lhs, lin({{r, i - 1}}));
            else if (t != i && t != i - 1 && on('g'))
                constrain(lhs, lin({{-rinv, t}}));
        }
    return d - rank_of(rows);
}

} // namespace cgw
