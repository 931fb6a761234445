// Acceptance suite: one line per criterion, exit nonzero on any failure.

#include <cstdio>
#include <random>
#include <sstream>

#include <cgw/parallel.hpp>
#include <cgw/prop2.hpp>
#include <cgw/specht.hpp>
#include <cgw/subspaces.hpp>

using namespace cgw;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

bool is_critical(int n, const Q& lv, const Q& rv) {
    for (const auto& c : critical_sets(n).l_values)
        if (lv == c.coeff * qpow(rv, c.power)) return true;
    return false;
}

// random generic parameters, rejecting critical l
std::pair<Q, Q> generic_point(PointGen& gen, int n) {
    for (;;) {
        auto [lv, rv] = gen.point();
        if (!is_critical(n, lv, rv)) return {lv, rv};
    }
}

bool relations_ok() {
    for (int n : {4, 5, 6}) {
        Rep<RatFun> rep = Rep<RatFun>::build(n, symbolic_params());
        if (!all_pass(verify_relations(rep))) return false;
    }
    PointGen gen(0, 7);
    std::vector<std::pair<Q, Q>> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(gen.point());
    auto res = parallel_map(pts, [](const std::pair<Q, Q>& p) {
        Rep<Q> rep = Rep<Q>::build(7, rational_params(p.first, p.second));
        return all_pass(verify_relations(rep));
    });
    for (bool ok : res)
        if (!ok) return false;
    return true;
}

bool det7_ok() { return det_sum_probabilistic(7, det_s7_closed_form(), 12, 0); }

bool k7_table_ok(std::string& detail) {
    std::vector<std::pair<std::string, int>> table = {
        {"r^-21", 1}, {"r^-7", 6}, {"-r^-9", 7}, {"r^3", 14}, {"r^-1", 21}, {"-r^3", 35}};
    auto got = parallel_map(table, [](const std::pair<std::string, int>& e) {
        KernelReport k = kernel_at(7, LValue::parse(e.first));
        return std::make_pair(k.k, k.verified);
    });
    std::ostringstream os;
    bool ok = true;
    for (size_t i = 0; i < table.size(); ++i) {
        os << (i ? ", " : "") << "k(7," << table[i].first << ")=" << got[i].first;
        if (got[i].first != table[i].second || !got[i].second) ok = false;
    }
    detail = os.str();
    return ok;
}

bool det_symbolic_ok(int n) {
    FactoredForm f = det_sum_symbolic(n);
    if (!f.complete) return false;
    std::set<std::pair<std::string, int>> roots, expected;
    for (const auto& r : l_roots(f)) roots.insert({qstr(r.coeff), r.power});
    for (const auto& l : critical_sets(n).l_values) expected.insert({qstr(l.coeff), l.power});
    return roots == expected;
}

// criterion 5 helpers: each family passes at its critical l and fails at
// five generic random l

bool u_family_ok() {
    for (int n : {4, 5, 6}) {
        Rep<RatFun> rep = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(1), 7 - 4 * n}));
        auto u = to_indexed(rep.basis, vector_u(n, rep.par));
        for (int k = 1; k <= n; ++k) {
            auto resid = add_vec(rep.g[k].apply(u), scale_vec(u, -rep.par.r));
            if (!vec_zero(resid)) return false;
        }
    }
    PointGen gen(1, 6);
    for (int trial = 0; trial < 5; ++trial) {
        auto [lv, rv] = generic_point(gen, 5);
        Rep<Q> rep = Rep<Q>::build(5, rational_params(lv, rv));
        auto u = to_indexed(rep.basis, vector_u(5, rep.par));
        bool eig = true;
        for (int k = 1; k <= 5 && eig; ++k)
            if (!vec_zero(add_vec(rep.g[k].apply(u), scale_vec(u, -rv)))) eig = false;
        if (eig) return false;  // must fail away from the critical l
    }
    return true;
}

bool v_family_ok() {
    for (int n : {5, 6}) {
        Rep<RatFun> rep = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(1), 7 - 2 * n}));
        auto v = vectors_v(rep);
        if (static_cast<int>(v.size()) != n - 1) return false;
        for (const auto& [name, pass] : check_delta_system(rep, v))
            if (!pass) return false;
        if (!span_invariant(rep, v)) return false;
        if (span_dim(rep, v) != n - 1) return false;
    }
    PointGen gen(2, 6);
    for (int trial = 0; trial < 5; ++trial) {
        auto [lv, rv] = generic_point(gen, 5);
        Rep<Q> rep = Rep<Q>::build(5, rational_params(lv, rv));
        auto v = vectors_v(rep);
        bool all = true;
        for (const auto& [name, pass] : check_delta_system(rep, v))
            if (!pass) all = false;
        if (all) return false;
    }
    return true;
}

bool t_family_ok() {
    for (int n : {4, 5, 6}) {
        Rep<RatFun> rep = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(1), -1}));
        auto t = vectors_t(rep);
        if (span_dim(rep, t) != n * (n - 1) / 2) return false;
        if (!span_invariant(rep, t)) return false;
    }
    PointGen gen(3, 6);
    for (int trial = 0; trial < 5; ++trial) {
        auto [lv, rv] = generic_point(gen, 4);
        Rep<Q> rep = Rep<Q>::build(4, rational_params(lv, rv));
        if (span_invariant(rep, vectors_t(rep))) return false;
    }
    return true;
}

bool kernel_vectors_ok() {
    for (int n : {4, 5, 6}) {
        {
            Rep<RatFun> rep = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(1), 3}));
            ConjugateSet<RatFun> conj(rep);
            if (!in_kernel(conj, vector_X(rep.par))) return false;
        }
        if (n == 4) {
            Rep<RatFun> rep = Rep<RatFun>::build(4, l_specialized_params(LValue{Q(-1), 3}));
            ConjugateSet<RatFun> conj(rep);
            if (!in_kernel(conj, vector_z(4, rep.par))) return false;
        } else {
            Rep<RatFun> rep = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(-1), 3}));
            ConjugateSet<RatFun> conj(rep);
            if (!in_kernel(conj, vector_Y(n, rep.par))) return false;
        }
        {
            Rep<RatFun> rep =
                Rep<RatFun>::build(n, l_specialized_params(LValue{Q(-1), 5 - 2 * n}));
            ConjugateSet<RatFun> conj(rep);
            if (!in_kernel(conj, vector_Jn(n, rep.par))) return false;
        }
    }
    PointGen gen(4, 6);
    for (int trial = 0; trial < 5; ++trial) {
        auto [lv, rv] = generic_point(gen, 5);
        Rep<Q> rep = Rep<Q>::build(5, rational_params(lv, rv));
        ConjugateSet<Q> conj(rep);
        if (in_kernel(conj, vector_X(rep.par))) return false;
        if (in_kernel(conj, vector_Y(5, rep.par))) return false;
        if (in_kernel(conj, vector_Jn(5, rep.par))) return false;
    }
    return true;
}

bool e_annihilation_ok() {
    for (int n : {4, 5, 6}) {
        Rep<RatFun> ru = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(1), 7 - 4 * n}));
        if (!e_annihilation_check(ru, {to_indexed(ru.basis, vector_u(n, ru.par))})) return false;
        Rep<RatFun> rt = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(1), -1}));
        if (!e_annihilation_check(rt, vectors_t(rt))) return false;
        if (n >= 5) {
            Rep<RatFun> rv = Rep<RatFun>::build(n, l_specialized_params(LValue{Q(1), 7 - 2 * n}));
            if (!e_annihilation_check(rv, vectors_v(rv))) return false;
        }
    }
    return true;
}

bool prop2_ok(std::string& detail) {
    long checked = 0;
    for (int n : {5, 6}) {
        Rep<RatFun> rep = Rep<RatFun>::build(n, symbolic_params());
        ConjugateSet<RatFun> conj(rep);
        for (const auto& r : prop2_sweep(conj)) {
            ++checked;
            if (!r.pass) return false;
        }
    }
    detail = std::to_string(checked) +
             " cases over n=5,6; indices outside each formula's range excluded by construction";
    return true;
}

bool hecke_ok() {
    auto h = h_matrices();
    if (!d4_hecke_relations(h).all()) return false;
    if (joint_r_eigenspace_dim(h) != 0) return false;
    auto j = j_matrices();
    return d4_hecke_relations(j).all();
}

bool specht_ok() {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions_of(n))
            if (syt_count(p) != syt_enumerate(p)) return false;
    for (int n = 4; n <= 8; ++n)
        if (!dim_sum_check(n)) return false;
    return degree_set(8, 56) ==
               std::set<std::int64_t>{1, 7, 8, 14, 20, 21, 28, 35, 42, 48} &&
           degree_set(9, 72) ==
               std::set<std::int64_t>{1, 8, 9, 27, 28, 36, 42, 48, 56, 63, 70};
}

bool generic_kernel_ok() {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> cnum(2, 40), cden(1, 40), pow(-5, 5);
    std::vector<std::pair<int, LValue>> jobs;
    for (int n = 4; n <= 7; ++n)
        for (int t = 0; t < 3; ++t) {
            LValue l;
            do {
                l = LValue{Q(cnum(rng)) / Q(cden(rng)), pow(rng)};
            } while ([&] {
                for (const auto& c : critical_sets(n).l_values)
                    if (c.coeff == l.coeff && c.power == l.power) return true;
                return false;
            }());
            jobs.push_back({n, l});
        }
    auto res = parallel_map(jobs, [](const std::pair<int, LValue>& j) {
        return kernel_at(j.first, j.second).k;
    });
    for (int k : res)
        if (k != 0) return false;
    return true;
}

bool bijection_ok() {
    for (int n = 4; n <= 12; ++n)
        if (!critical_sets(n).bijection) return false;
    return true;
}

} // namespace

int main() {
    report(1, relations_ok(),
           "defining relations: symbolic n=4,5,6 and 20 rational points at n=7");
    report(2, det7_ok(), "det S(7) matches the closed form at 12 admissible points");
    {
        std::string d;
        bool ok = k7_table_ok(d);
        report(3, ok, "kernel dimensions at the six critical l for n=7 [" + d + "]");
    }
    report(4, det_symbolic_ok(4) && det_symbolic_ok(5),
           "symbolic det S(n) factors completely with critical l-roots, n=4,5");
    report(5, u_family_ok() && v_family_ok() && t_family_ok() && kernel_vectors_ok(),
           "invariant vectors pass at critical l and fail at 5 generic l each");
    report(6, e_annihilation_ok(), "e_i annihilates every verified invariant subspace");
    {
        std::string d;
        bool ok = prop2_ok(d);
        report(7, ok, "conjugate action formulas sweep [" + d + "]");
    }
    report(8, hecke_ok(), "H and J matrices satisfy the diagram relations; joint "
                          "r-eigenspace of the H family is trivial");
    report(9, specht_ok(), "tableau counts, dimension sums n=4..8, degree lists n=8,9");
    report(10, generic_kernel_ok(), "trivial kernel at 3 random non-critical l, n=4..7");
    report(11, bijection_ok(), "t-set maps onto the critical l-set under l=r^3/t, n=4..12");
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
