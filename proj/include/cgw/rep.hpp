#pragma once

// Basis of the degree-n(n-1) space and the generator / idempotent matrices,
// over any exact scalar (symbolic l and r, l specialized, or both rational).

#include <functional>
#include <string>

#include "matrix.hpp"

namespace cgw {

struct Label {
    int i = 0, j = 0;
    bool hat = false;

    bool operator==(const Label& o) const { return i == o.i && j == o.j && hat == o.hat; }
    bool operator<(const Label& o) const {
        if (j != o.j) return j < o.j;
        if (i != o.i) return i < o.i;
        return hat < o.hat;
    }
    std::string str() const {
        return (hat ? "wh_" : "w_") + std::to_string(i) + "_" + std::to_string(j);
    }
};

struct Basis {
    int n = 0;
    std::vector<Label> labels;
    std::map<Label, int> index;

    static Basis make(int n) {
        if (n < 4) throw std::invalid_argument("n must be >= 4");
        Basis b;
        b.n = n;
        for (int j = 2; j <= n; ++j)
            for (int i = 1; i < j; ++i) {
                b.labels.push_back({i, j, false});
                b.labels.push_back({i, j, true});
            }
        // j-major order already; labels with j = n come last
        for (size_t k = 0; k < b.labels.size(); ++k) b.index[b.labels[k]] = static_cast<int>(k);
        return b;
    }

    int dim() const { return static_cast<int>(labels.size()); }
    int at(int i, int j, bool hat) const { return index.at({i, j, hat}); }
};

template <class T>
struct RepParams {
    T l, r;

    T rpow(int k) const {
        T p(1);
        T base = k >= 0 ? r : T(1) / r;
        for (int i = 0; i < (k >= 0 ? k : -k); ++i) p = p * base;
        return p;
    }
    T m() const { return T(1) / r - r; }
    T linv() const { return T(1) / l; }
};

inline RepParams<RatFun> symbolic_params() {
    return {RatFun::var_l(), RatFun::var_r()};
}
inline RepParams<RatFun> l_specialized_params(const LValue& l) {
    return {RatFun(BiPoly::term(l.coeff, 0, l.power)), RatFun::var_r()};
}
inline RepParams<Q> rational_params(const Q& l, const Q& r) { return {l, r}; }

template <class T>
class Rep {
public:
    int n;
    Basis basis;
    RepParams<T> par;
    std::vector<SparseMat<T>> g, e, gi;  // 1-based; index 0 unused

    static Rep build(int n, const RepParams<T>& par) {
        Rep rep;
        rep.n = n;
        rep.basis = Basis::make(n);
        rep.par = par;
        int d = rep.basis.dim();
        rep.g.assign(n + 1, SparseMat<T>(d));
        rep.e.assign(n + 1, SparseMat<T>(d));
        rep.gi.assign(n + 1, SparseMat<T>(d));
        T m = par.m();
        SparseMat<T> id = SparseMat<T>::identity(d);
        for (int k = 1; k <= n; ++k) {
            rep.g[k] = rep.nu_g(k);
            // e_k = (l/m)(g_k^2 + m g_k - 1)
            SparseMat<T> q = rep.g[k] * rep.g[k] + rep.g[k].scaled(m) - id;
            rep.e[k] = q.scaled(par.l / m);
            // g_k^{-1} = g_k - m e_k + m
            rep.gi[k] = rep.g[k] - rep.e[k].scaled(m) + id.scaled(m);
        }
        return rep;
    }

    int dim() const { return basis.dim(); }

    SparseMat<T> nu_g(int k) const {
        if (k < 1 || k > n) throw std::invalid_argument("generator index out of range");
        const T& l = par.l;
        const T& r = par.r;
        T m = par.m();
        int d = basis.dim();
        SparseMat<T> M(d);
        for (const Label& lab : basis.labels) {
            int col = basis.at(lab.i, lab.j, lab.hat);
            auto add = [&](int i, int j, bool hat, const T& c) {
                M.add_to(basis.at(i, j, hat), col, c);
            };
            int s = lab.i, t = lab.j;
            bool hat = lab.hat;
            if (k == 1) {
                if (hat && s >= 3) {
                    int i = s, j = t;
                    add(1, i, true, m * par.rpow(j - 5));
                    add(1, i, false, -(m * par.rpow(j - 5)));
                    add(2, i, true, m * par.rpow(j - 4));
                    add(2, i, false, -(m * par.rpow(j - 4)));
                    add(1, j, true, m * par.rpow(i - 3));
                    add(1, j, false, -(m * par.rpow(i - 3)));
                    add(2, j, true, m * par.rpow(i - 2));
                    add(2, j, false, -(m * par.rpow(i - 2)));
                    T c = m * m * (par.rpow(i + j - 8) + par.rpow(i + j - 6));
                    add(1, 2, true, c);
                    add(1, 2, false, -c);
                    add(i, j, true, r);
                } else if (hat && s == 1 && t >= 3) {
                    add(2, t, false, T(1));
                } else if (hat && s == 2 && t >= 3) {
                    int j = t;
                    add(1, j, false, T(1));
                    add(1, 2, false, m * par.rpow(j - 3));
                    add(2, j, false, -m);
                } else if (!hat && s == 2 && t >= 3) {
                    int j = t;
                    add(1, j, true, T(1));
                    add(1, 2, true, m * par.rpow(j - 3));
                    add(2, j, false, -m);
                } else if (!hat && s == 1 && t >= 3) {
                    int j = t;
                    add(2, j, true, T(1));
                    add(1, 2, true, m * par.rpow(j - 4));
                    add(1, 2, false, -(m * par.rpow(j - 4)));
                    add(1, j, true, m);
                    add(1, j, false, -m);
                } else if (hat && s == 1 && t == 2) {
                    add(1, 2, true, par.linv());
                } else {
                    add(s, t, hat, r);
                }
            } else {
                if (s == k - 1 && t == k) {
                    if (hat)
                        add(s, t, true, r);
                    else
                        add(s, t, false, par.linv());
                } else if (s == k - 1 && t >= k + 1) {
                    add(k, t, hat, T(1));
                } else if (t == k - 1) {
                    add(s, k, hat, T(1));
                } else if (s == k && t >= k + 1) {
                    if (hat) {
                        add(k - 1, t, true, T(1));
                        add(k - 1, k, false, m * par.linv() * par.rpow(t - k - 2));
                        add(k, t, true, -m);
                    } else {
                        add(k - 1, t, false, T(1));
                        add(k - 1, k, false, m * par.rpow(t - k - 1));
                        add(k, t, false, -m);
                    }
                } else if (t == k && s <= k - 2) {
                    add(s, k - 1, hat, T(1));
                    add(k - 1, k, false, m * par.linv() * par.rpow(-(k - s - 2)));
                    add(s, k, hat, -m);
                } else {
                    add(s, t, hat, r);
                }
            }
        }
        return M;
    }
};

struct RelationResult {
    std::string name;
    int i = 0, j = 0;
    bool pass = false;
};

// node adjacency of the type D diagram: 1~3, and i~i+1 for i >= 2
inline bool dn_adjacent(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 1) return j == 3;
    return j == i + 1;
}

template <class T>
std::vector<RelationResult> verify_relations(const Rep<T>& rep) {
    int n = rep.n;
    const auto& g = rep.g;
    const auto& e = rep.e;
    T m = rep.par.m();
    T delta = T(1) - (rep.par.l - rep.par.linv()) / m;
    SparseMat<T> id = SparseMat<T>::identity(rep.dim());
    std::vector<RelationResult> out;
    auto rec = [&](const std::string& name, int i, int j, bool ok) {
        out.push_back({name, i, j, ok});
    };
    for (int i = 2; i < n; ++i)
        rec("braid", i, i + 1, g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1]);
    rec("braid", 1, 3, g[1] * g[3] * g[1] == g[3] * g[1] * g[3]);
    for (int k = 2; k <= n; ++k)
        if (k != 3) rec("comm", 1, k, g[1] * g[k] == g[k] * g[1]);
    for (int i = 2; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) rec("comm", i, j, g[i] * g[j] == g[j] * g[i]);
    for (int i = 1; i <= n; ++i) {
        rec("ge", i, 0, g[i] * e[i] == e[i].scaled(rep.par.linv()));
        rec("eg", i, 0, e[i] * g[i] == e[i].scaled(rep.par.linv()));
        rec("e2", i, 0, e[i] * e[i] == e[i].scaled(delta));
        rec("quad", i, 0,
            (g[i] * g[i] + g[i].scaled(m) - id - e[i].scaled(m / rep.par.l)).is_zero());
        for (int j = 1; j <= n; ++j) {
            if (!dn_adjacent(i, j)) continue;
            rec("ege", i, j, e[i] * g[j] * e[i] == e[i].scaled(rep.par.l));
            rec("eee", i, j, e[i] * e[j] * e[i] == e[i]);
            rec("gge", i, j, g[j] * g[i] * e[j] == e[i] * e[j]);
        }
    }
    for (int i = 1; i <= n; ++i)
        rec("rank_e", i, 0, rank_of(e[i].dense()) == 1);
    return out;
}

inline bool all_pass(const std::vector<RelationResult>& res) {
    for (const auto& r : res)
        if (!r.pass) return false;
    return true;
}

} // namespace cgw
