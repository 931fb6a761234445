#pragma once

// Tabulated single-basis-vector actions of the conjugates (the sixteen
// mnemonic formulas) checked by direct matrix-vector products.

#include <array>

#include "conjugates.hpp"

namespace cgw {

struct Prop2Result {
    std::string name;
    int i = 0, j = 0, s = 0, t = 0;
    bool pass = false;
};

namespace detail {

struct Prop2Spec {
    bool c_hatted;        // which conjugate acts
    Label arg;            // input basis vector
    bool zero;            // rhs is the zero vector
    Label out;            // rhs basis vector when nonzero
    // coefficient computed by caller
};

} // namespace detail

// Single case: returns pass/fail; throws on out-of-range indices.
template <class T>
bool prop2_check(ConjugateSet<T>& conj, const std::string& name, int i, int j, int s,
                 int t) {
    const Rep<T>& rep = *conj.rep;
    const RepParams<T>& par = rep.par;
    T m = par.m();
    T one(1);
    bool c_hat = false, zero = false;
    Label arg, out;
    T coeff(0);
    auto need = [&](bool cond) {
        if (!cond) throw std::invalid_argument("prop2 indices out of range: " + name);
    };
    need(1 <= i && i < j && j <= rep.n);
    if (name == "LONHNH" || name == "LONHH" || name == "LOHNH" || name == "LOHH") {
        need(s >= 1 && i - s >= 1);
        bool ah = name == "LONHH" || name == "LOHH";
        c_hat = name == "LOHNH" || name == "LOHH";
        arg = {i - s, i, ah};
        out = {i, j, c_hat};
        if (name == "LOHH")
            coeff = par.linv() * par.rpow(-((j - i) + (s - 1)));
        else if (name == "LOHNH")
            coeff = par.l * par.rpow(-((j - i) + (s - 3)));
        else
            coeff = par.rpow(-((j - i) + (s - 2)));
    } else if (name == "LINHNH" || name == "LINHH" || name == "LIHH" || name == "LIHNH") {
        need(s >= 1 && s <= j - i - 1);
        bool ah = name == "LINHH" || name == "LIHH";
        c_hat = name == "LIHH" || name == "LIHNH";
        arg = {i, j - s, ah};
        out = {i, j, c_hat};
        if (name == "LINHNH" || name == "LIHH")
            coeff = par.linv() * par.rpow(-(s - 1));
        else
            coeff = par.rpow(-(s - 2));
    } else if (name == "INHH" || name == "IHNH" || name == "IHH") {
        need(t >= 1 && s >= 1 && i + t < j - s);
        bool ah = name != "IHNH";
        c_hat = name != "INHH";
        arg = {i + t, j - s, ah};
        if (name == "INHH") {
            out = {i, j, false};
            coeff = m * par.rpow(t - s - 2) * par.linv() * (one - par.l * par.r) *
                    (one + par.r * par.r);
        } else {
            zero = true;
        }
    } else if (name == "ELOHH") {
        need(s > t && t >= 1 && i - s >= 1);
        c_hat = true;
        arg = {i - s, i - t, true};
        out = {i, j, true};
        coeff = m * par.linv() * par.rpow(-(j - i + s + t - 2)) * (one - par.l * par.r) *
                (one + par.r * par.r);
    } else if (name == "LCNHNH" || name == "LCNHH" || name == "LCHNH" || name == "LCHH") {
        need(s >= 1 && i - s >= 1 && t >= 1 && j - t > i);
        bool ah = name == "LCNHH" || name == "LCHH";
        c_hat = name == "LCHNH" || name == "LCHH";
        arg = {i - s, j - t, ah};
        out = {i, j, c_hat};
        if (name == "LCHNH")
            coeff = m * par.rpow(-(s + t - 2)) * (par.r - par.l);
        else
            coeff = m * par.rpow(-(s + t - 2)) * (par.linv() - one / par.r);
    } else {
        throw std::invalid_argument("unknown prop2 case: " + name);
    }
    std::map<int, T> v;
    v[rep.basis.at(arg.i, arg.j, arg.hat)] = one;
    auto got = conj.get(i, j, c_hat).apply(v);
    if (zero) return vec_zero(got);
    std::map<int, T> expd;
    if (!scalar_zero(coeff)) expd[rep.basis.at(out.i, out.j, out.hat)] = coeff;
    if (got.size() != expd.size()) return false;
    for (const auto& [idx, c] : expd) {
        auto it = got.find(idx);
        if (it == got.end() || !(it->second == c)) return false;
    }
    return true;
}

inline const std::vector<std::string>& prop2_case_names() {
    static const std::vector<std::string> names = {
        "LONHNH", "LONHH", "LOHNH", "LOHH", "LINHNH", "LINHH", "LIHH", "LIHNH",
        "INHH",   "IHNH",  "IHH",   "ELOHH", "LCNHNH", "LCNHH", "LCHNH", "LCHH"};
    return names;
}

// All valid (i, j, s, t) for one named case.
inline std::vector<std::array<int, 4>> prop2_index_range(const std::string& name, int n) {
    std::vector<std::array<int, 4>> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (name.substr(0, 2) == "LO") {
                for (int s = 1; i - s >= 1; ++s) idx.push_back({i, j, s, 0});
            } else if (name.substr(0, 2) == "LI") {
                for (int s = 1; s <= j - i - 1; ++s) idx.push_back({i, j, s, 0});
            } else if (name == "INHH" || name == "IHNH" || name == "IHH") {
                for (int t = 1; t < j - i; ++t)
                    for (int s = 1; i + t < j - s; ++s) idx.push_back({i, j, s, t});
            } else if (name == "ELOHH") {
                for (int s = 2; i - s >= 1; ++s)
                    for (int t = 1; t < s; ++t) idx.push_back({i, j, s, t});
            } else {
                for (int s = 1; i - s >= 1; ++s)
                    for (int t = 1; j - t > i; ++t) idx.push_back({i, j, s, t});
            }
        }
    return idx;
}

template <class T>
std::vector<Prop2Result> prop2_sweep(ConjugateSet<T>& conj) {
    std::vector<Prop2Result> out;
    for (const auto& name : prop2_case_names())
        for (const auto& [i, j, s, t] : prop2_index_range(name, conj.rep->n))
            out.push_back({name, i, j, s, t, prop2_check(conj, name, i, j, s, t)});
    return out;
}

} // namespace cgw
