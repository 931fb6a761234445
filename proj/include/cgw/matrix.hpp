#pragma once

// Sparse square matrices over an exact field scalar (RatFun or Q), plus
// dense elimination (rank / nullspace / RREF) and fraction-free Bareiss
// determinants for RatFun matrices.

#include <map>
#include <vector>

#include "ratfun.hpp"

namespace cgw {

inline bool scalar_zero(const Q& x) { return sgn(x) == 0; }
inline bool scalar_zero(const RatFun& x) { return x.zero(); }
inline size_t scalar_cost(const Q&) { return 1; }
inline size_t scalar_cost(const RatFun& x) { return x.complexity(); }

template <class T>
class SparseMat {
public:
    explicit SparseMat(int n = 0) : n_(n), rows_(n) {}

    static SparseMat identity(int n) {
        SparseMat m(n);
        for (int i = 0; i < n; ++i) m.rows_[i][i] = T(1);
        return m;
    }

    int dim() const { return n_; }
    const std::map<int, T>& row(int i) const { return rows_[i]; }

    T get(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? T(0) : it->second;
    }
    void add_to(int i, int j, const T& v) {
        if (scalar_zero(v)) return;
        auto it = rows_[i].find(j);
        if (it == rows_[i].end()) {
            rows_[i][j] = v;
        } else {
            it->second += v;
            if (scalar_zero(it->second)) rows_[i].erase(it);
        }
    }
    void set(int i, int j, const T& v) {
        if (scalar_zero(v))
            rows_[i].erase(j);
        else
            rows_[i][j] = v;
    }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        SparseMat c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (const auto& [k, av] : a.rows_[i])
                for (const auto& [j, bv] : b.rows_[k])
                    c.add_to(i, j, av * bv);
        return c;
    }
    friend SparseMat operator+(const SparseMat& a, const SparseMat& b) {
        SparseMat c = a;
        for (int i = 0; i < a.n_; ++i)
            for (const auto& [j, v] : b.rows_[i]) c.add_to(i, j, v);
        return c;
    }
    friend SparseMat operator-(const SparseMat& a, const SparseMat& b) {
        SparseMat c = a;
        for (int i = 0; i < a.n_; ++i)
            for (const auto& [j, v] : b.rows_[i]) c.add_to(i, j, -v);
        return c;
    }
    SparseMat scaled(const T& s) const {
        SparseMat c(n_);
        if (scalar_zero(s)) return c;
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[i]) c.rows_[i][j] = v * s;
        return c;
    }

    bool operator==(const SparseMat& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const SparseMat& o) const { return !(*this == o); }
    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }

    std::map<int, T> apply(const std::map<int, T>& v) const {
        std::map<int, T> out;
        for (int i = 0; i < n_; ++i) {
            T s(0);
            bool any = false;
            for (const auto& [j, mv] : rows_[i]) {
                auto it = v.find(j);
                if (it != v.end()) {
                    s += mv * it->second;
                    any = true;
                }
            }
            if (any && !scalar_zero(s)) out[i] = s;
        }
        return out;
    }

    std::vector<std::vector<T>> dense() const {
        std::vector<std::vector<T>> d(n_, std::vector<T>(n_, T(0)));
        for (int i = 0; i < n_; ++i)
            for (const auto& [j, v] : rows_[i]) d[i][j] = v;
        return d;
    }

private:
    int n_;
    std::vector<std::map<int, T>> rows_;
};

template <class T>
bool vec_zero(const std::map<int, T>& v) {
    for (const auto& [i, x] : v)
        if (!scalar_zero(x)) return false;
    return true;
}

// In-place row reduction to RREF; returns pivot columns.
template <class T>
std::vector<int> rref(std::vector<std::vector<T>>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    int nr = static_cast<int>(a.size()), nc = static_cast<int>(a[0].size());
    int rk = 0;
    for (int c = 0; c < nc && rk < nr; ++c) {
        int piv = -1;
        size_t best = 0;
        for (int i = rk; i < nr; ++i) {
            if (scalar_zero(a[i][c])) continue;
            size_t cost = scalar_cost(a[i][c]);
            if (piv < 0 || cost < best) {
                piv = i;
                best = cost;
            }
        }
        if (piv < 0) continue;
        std::swap(a[rk], a[piv]);
        T inv = T(1) / a[rk][c];
        for (int j = c; j < nc; ++j)
            if (!scalar_zero(a[rk][j])) a[rk][j] = a[rk][j] * inv;
        for (int i = 0; i < nr; ++i) {
            if (i == rk || scalar_zero(a[i][c])) continue;
            T f = a[i][c];
            for (int j = c; j < nc; ++j)
                if (!scalar_zero(a[rk][j])) a[i][j] = a[i][j] - f * a[rk][j];
        }
        pivots.push_back(c);
        ++rk;
    }
    return pivots;
}

template <class T>
int rank_of(std::vector<std::vector<T>> a) {
    return static_cast<int>(rref(a).size());
}

// Nullspace basis of a (rows are equations), vectors of length nc.
template <class T>
std::vector<std::vector<T>> nullspace(std::vector<std::vector<T>> a, int nc) {
    std::vector<int> piv = a.empty() ? std::vector<int>{} : rref(a);
    std::vector<bool> is_piv(nc, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<T>> basis;
    for (int fc = 0; fc < nc; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<T> v(nc, T(0));
        v[fc] = T(1);
        for (size_t pr = 0; pr < piv.size(); ++pr)
            v[piv[pr]] = -a[pr][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fraction-free determinant over Q(l,r): clear row denominators, Bareiss.
inline RatFun bareiss_det(const SparseMat<RatFun>& m) {
    int n = m.dim();
    std::vector<std::vector<BiPoly>> a(n, std::vector<BiPoly>(n));
    BiPoly cleared(1);
    for (int i = 0; i < n; ++i) {
        BiPoly l(1);
        for (const auto& [j, v] : m.row(i)) l = poly_lcm(l, v.den());
        for (const auto& [j, v] : m.row(i)) a[i][j] = *(v.num() * l).divided_exact(v.den());
        cleared = cleared * l;
    }
    BiPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pr = -1, pc = -1;
        size_t best = 0;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                if (a[i][j].zero()) continue;
                size_t cost = a[i][j].size();
                if (pr < 0 || cost < best) {
                    pr = i;
                    pc = j;
                    best = cost;
                }
            }
        if (pr < 0) return RatFun(0);
        if (pr != k) {
            std::swap(a[pr], a[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (int i = 0; i < n; ++i) std::swap(a[i][pc], a[i][k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BiPoly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = t.zero() ? BiPoly() : *t.divided_exact(prev);
            }
            a[i][k] = BiPoly();
        }
        prev = a[k][k];
    }
    BiPoly det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return RatFun(det, cleared);
}

} // namespace cgw
