#include <doctest.h>

#include <cgw/factor.hpp>
#include <cgw/sample.hpp>

using namespace cgw;

static RatFun L() { return RatFun::var_l(); }
static RatFun R() { return RatFun::var_r(); }

TEST_CASE("laurent polynomial basics") {
    BiPoly p = BiPoly::var_l() * BiPoly::var_r() - BiPoly(1);
    CHECK(p.str() == "l*r - 1");
    BiPoly q = BiPoly::term(Q(-1), 0, -9);
    CHECK(q.str() == "-r^-9");
    BiPoly s = BiPoly::term(Q(1), 1, 21) * BiPoly::var_r();
    CHECK(s.str() == "l*r^22");
    CHECK((p * q * q).divided_exact(q * q).value() == p);
    CHECK(!BiPoly::var_l().divided_exact(p).has_value());
}

TEST_CASE("gcd and lcm") {
    BiPoly lr1 = BiPoly::var_l() * BiPoly::var_r() - BiPoly(1);
    BiPoly lp3 = BiPoly::var_l() + BiPoly::term(Q(1), 0, 3);
    BiPoly a = lr1 * lr1 * lp3;
    BiPoly b = lr1 * (BiPoly::var_r() - BiPoly(1));
    BiPoly g = poly_gcd(a, b);
    CHECK(g == lr1);
    CHECK(poly_lcm(lr1, lp3) == lr1 * lp3);
    // univariate path
    BiPoly r2m1 = BiPoly::term(Q(1), 0, 2) - BiPoly(1);
    BiPoly rm1 = BiPoly::var_r() - BiPoly(1);
    CHECK(poly_gcd(r2m1, rm1) == rm1);
}

TEST_CASE("rational function arithmetic and canonical form") {
    RatFun x = L() / R();
    RatFun y = R() / L();
    CHECK((x * y).is_one());
    RatFun m = RatFun(1) / R() - R();
    CHECK(m.eval(Q(1), Q(2)) == Q(-3, 2));
    RatFun delta = RatFun(1) - (L() - RatFun(1) / L()) / m;
    CHECK(delta.specialize_l(LValue{Q(1), -1}).zero());
    // (l^2 - r^2)/(l - r) reduces to l + r
    RatFun z = (L() * L() - R() * R()) / (L() - R());
    CHECK(z == L() + R());
    CHECK(z.den() == BiPoly(1));
    CHECK_THROWS_AS(x / RatFun(0), std::domain_error);
}

TEST_CASE("field axioms on pseudo-random triples") {
    PointGen gen(7, 5);
    for (int t = 0; t < 12; ++t) {
        RatFun a = RatFun::monomial(gen.rand_q(), t % 3 - 1, t % 5 - 2) + L();
        RatFun b = R() * RatFun(gen.rand_q()) - a;
        RatFun c = RatFun(gen.rand_q()) / R() + L() * R();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.zero()) CHECK((a * (RatFun(1) / a)).is_one());
    }
}

TEST_CASE("specialize") {
    RatFun x = L() * RatFun::monomial(Q(1), 0, 3);
    RatFun s = specialize(x, LValue{Q(1), -21}, std::nullopt);
    CHECK(s == RatFun::monomial(Q(1), 0, -18));
    RatFun one_over = RatFun(1) / (RatFun::monomial(Q(1), 0, 2) - RatFun(1));
    CHECK_THROWS_AS(specialize(one_over, std::nullopt, Q(1)), std::domain_error);
    // specialize commutes with multiplication
    PointGen gen(11, 5);
    for (int t = 0; t < 100; ++t) {
        Q c1 = gen.rand_q(), c2 = gen.rand_q();
        RatFun a = L() * RatFun(c1) + RatFun(1) / R();
        RatFun b = R() - RatFun(c2) / L();
        LValue lv{gen.rand_q(), t % 7 - 3};
        CHECK(specialize(a * b, lv, std::nullopt) ==
              specialize(a, lv, std::nullopt) * specialize(b, lv, std::nullopt));
    }
}

TEST_CASE("lvalue grammar") {
    CHECK(LValue::parse("r^-21") == LValue{Q(1), -21});
    CHECK(LValue::parse("-r^3") == LValue{Q(-1), 3});
    CHECK(LValue::parse("r") == LValue{Q(1), 1});
    CHECK(LValue::parse("1") == LValue{Q(1), 0});
    CHECK(LValue::parse("2/3*r^5") == LValue{Q(2, 3), 5});
    CHECK(LValue{Q(-1), -9}.str() == "-r^-9");
    CHECK(LValue{Q(1), 3}.str() == "r^3");
    CHECK_THROWS(LValue::parse("bogus"));
}

TEST_CASE("trial factor") {
    BiPoly lr1 = BiPoly::var_l() * BiPoly::var_r() - BiPoly(1);
    RatFun x = RatFun(lr1) * RatFun(lr1) / L();
    FactoredForm f = trial_factor(x, 4);
    CHECK(f.complete);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == lr1);
    CHECK(f.factors[0].second == 2);
    CHECK(f.unit == RatFun(1) / L());
    CHECK(f.expand() == x);

    FactoredForm mono = trial_factor(RatFun::monomial(Q(1), 0, 5), 4);
    CHECK(mono.complete);
    CHECK(mono.factors.empty());
    CHECK(mono.unit == RatFun::monomial(Q(1), 0, 5));

    // an off-family factor stays as cofactor
    RatFun y = RatFun(lr1) * (L() * L() + RatFun(1));
    FactoredForm g = trial_factor(y, 4);
    CHECK(!g.complete);
    CHECK(g.expand() == y);
    auto roots = l_roots(f);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == LValue{Q(1), -1});
}

TEST_CASE("probabilistic identity") {
    CHECK(probabilistic_identity(L() + R(), L() + R(), 4, 3));
    RatFun lhs = (L() * L() - R() * R()) / (L() - R());
    CHECK(probabilistic_identity(lhs, L() + R(), 6, 3));
    CHECK(!probabilistic_identity(L(), R(), 1, 3));
    CHECK_THROWS(probabilistic_identity(L(), R(), 0, 3));
}

TEST_CASE("admissibility rejection") {
    PointGen gen(5, 6);
    CHECK(!gen.admissible_r(Q(1)));
    CHECK(!gen.admissible_r(Q(-1)));
    CHECK(!gen.admissible_r(Q(0)));
    CHECK(gen.admissible_r(Q(3, 2)));
    for (int i = 0; i < 50; ++i) CHECK(gen.admissible_r(gen.rand_r()));
}
