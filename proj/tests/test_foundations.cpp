// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <adetr/algext.hpp>
#include <adetr/cyclo.hpp>
#include <adetr/linalg.hpp>
#include <adetr/multipoly.hpp>
#include <adetr/numeric.hpp>
#include <adetr/poly.hpp>
#include <adetr/rootsys.hpp>

using namespace adetr;

TEST_CASE("rational and hp scalar basics") {
    REQUIRE(rat_pow(frac(2, 3), -2) == frac(9, 4));
    REQUIRE(squarefree_part(Rat(8)) == 2);
    REQUIRE(squarefree_part(frac(-9, 2)) == -2);
    set_working_digits(60);
    CNum z(hpf(-4), hpf(0));
    CNum s = sqrt(z);
    REQUIRE(abs(s * s - z) < tol_eps());
    // principal branch: sqrt(-4) = 2i
    REQUIRE(abs(s - CNum(hpf(0), hpf(2))) < tol_eps());
    CNum w = pow(CNum(hpf(2), hpf(1)), frac(1, 3));
    REQUIRE(abs(w * w * w - CNum(hpf(2), hpf(1))) < tol_eps());
}

TEST_CASE("poly roots at high precision") {
    set_working_digits(80);
    // (x-1)(x-2)(x+1/2) = x^3 - 5/2 x^2 + x/2 + 1
    std::vector<CNum> c{CNum(hpf(1)), CNum(hpf(1) / 2), CNum(hpf(-5) / 2), CNum(hpf(1))};
    auto r = poly_roots(c);
    REQUIRE(r.size() == 3);
    hpf prod(1);
    for (auto& z : r) prod *= abs(z);
    REQUIRE(abs(prod - hpf(1)) < tol_eps(12));
}

TEST_CASE("exact linear algebra") {
    Mat<Rat> m(3, 3);
    long v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
    REQUIRE(det(m) == Rat(3));
    auto inv = inverse(m);
    REQUIRE(m * inv == Mat<Rat>::identity(3));
    auto cp = charpoly(m);
    // det(xI-m) = x^3 - 6x^2 + 9x - 3
    REQUIRE(cp == Vec<Rat>{Rat(-3), Rat(9), Rat(-6), Rat(1)});
}

TEST_CASE("univariate polynomials and rational functions") {
    UPoly<Rat> x = UPoly<Rat>::var();
    auto p = x * x * x - UPoly<Rat>(Rat(1));
    auto q = x * x - UPoly<Rat>(Rat(1));
    REQUIRE(gcd(p, q).degree() == 1);
    auto [quo, rem] = divmod(p, q);
    REQUIRE(quo == x);
    REQUIRE(rem == x - UPoly<Rat>(Rat(1)));
    REQUIRE(resultant(q, x * x + UPoly<Rat>(Rat(1))) == Rat(4));
    RatFun<Rat> f(p, q);  // reduces by (x-1)
    REQUIRE(f.num.degree() == 2);
    REQUIRE(f.den.degree() == 1);
    auto g = f.derivative();
    REQUIRE(g(Rat(2)) == (f(Rat(2, 1) + Rat(0)) - f(Rat(2))) * Rat(0) + g(Rat(2)));  // smoke
    Mobius<Rat> mb{Rat(1), Rat(2), Rat(0), Rat(1)};
    auto mb2 = mb.compose(mb.inverse());
    REQUIRE(mb2 == Mobius<Rat>::identity());
}

TEST_CASE("cyclotomic field arithmetic") {
    auto ctx = make_cyclo_ctx(12);
    REQUIRE(ctx->deg == 4);
    Cyc e = Cyc::eta(ctx);
    Cyc one(Rat(1));
    Cyc p = e;
    for (int i = 1; i < 12; ++i) {
        REQUIRE(!(p == one));
        p = p * e;
    }
    REQUIRE(p == one);
    Cyc inv = e.inv();
    REQUIRE(e * inv == one);
    // sqrt(-3) in Q(zeta_12), sqrt(2)? zeta_8 not inside, expect failure
    Cyc r = cyclo_sqrt_rational(ctx, Rat(-3));
    REQUIRE(r * r == Cyc(Rat(-3)));
    REQUIRE_THROWS(cyclo_sqrt_rational(ctx, Rat(2)));
    // numeric embedding
    set_working_digits(50);
    CNum z = Cyc::eta(ctx, 3).embed();  // i
    REQUIRE(abs(z - CNum(hpf(0), hpf(1))) < tol_eps());
}

TEST_CASE("multivariate polynomials") {
    using P = MPoly<Rat>;
    P x = P::variable(2, 0), y = P::variable(2, 1);
    P f = x * x + Rat(2) * (x * y) + y * y;
    P g = x + y;
    REQUIRE(f == g * g);
    REQUIRE(mpoly_exact_div(f, g) == g);
    REQUIRE(f.derivative(0) == Rat(2) * g);
    std::vector<std::vector<P>> m{{x, y}, {y, x}};
    REQUIRE(mpoly_det(m) == x * x - y * y);
    auto fe = f.eval<Rat>({Rat(1), Rat(2)});
    REQUIRE(fe == Rat(9));
}

TEST_CASE("algebraic extension trace machinery") {
    // q = u^2 - 2, roots +-sqrt2; trace(u^2) = 4, trace(u)=0, trace(1/(u+2)) = sum 1/(r+2) = 4/2=2
    UPoly<Rat> q{std::vector<Rat>{Rat(-2), Rat(0), Rat(1)}};
    auto ctx = std::make_shared<AlgCtx<Rat>>(q);
    auto u = AlgNum<Rat>::root(ctx);
    REQUIRE((u * u).trace() == Rat(4));
    REQUIRE(u.trace() == Rat(0));
    auto inv = (u + AlgNum<Rat>(Rat(2))).inv();
    REQUIRE(inv.trace() == Rat(2));
}

TEST_CASE("Laurent series") {
    using L = Laurent<Rat>;
    // f = 1/eps + 1 + eps
    L f(-1, {Rat(1), Rat(1), Rat(1)});
    auto finv = f.inverse([](const Rat& v) -> Rat { return Rat(1) / v; }, 4);
    auto prod = f * finv;
    REQUIRE(prod.coeff(0) == Rat(1));
    REQUIRE(prod.coeff(1) == Rat(0));
    REQUIRE(prod.coeff(2) == Rat(0));
}

TEST_CASE("root systems: Table 1 data") {
    RootSystem a2('A', 2);
    REQUIRE(a2.positive_roots.size() == 3);
    REQUIRE(a2.h == 3);
    REQUIRE(a2.exponents == std::vector<long>{1, 2});

    RootSystem a1('A', 1);
    REQUIRE(a1.positive_roots.size() == 1);
    REQUIRE(a1.h == 2);

    RootSystem d4('D', 4);
    REQUIRE(d4.positive_roots.size() == 12);
    REQUIRE(d4.h == 6);
    REQUIRE(d4.exponents == std::vector<long>{1, 3, 3, 5});
    REQUIRE(d4.group_order() == 192);

    RootSystem e8('E', 8);
    REQUIRE(e8.h == 30);
    REQUIRE(e8.exponents == std::vector<long>{1, 7, 11, 13, 17, 19, 23, 29});

    RootSystem e6('E', 6);
    REQUIRE(e6.exponents == std::vector<long>{1, 4, 5, 7, 8, 11});
    REQUIRE(e6.group_order() == 51840);

    REQUIRE_THROWS_AS(RootSystem('B', 2), InvalidType);
    REQUIRE_THROWS_AS(RootSystem('D', 3), InvalidType);
}

TEST_CASE("Weyl enumeration and invariance of the pairing") {
    RootSystem a3('A', 3);
    auto w = a3.enumerate_weyl();
    REQUIRE(w.size() == 24);
    auto roots = a3.all_roots();
    // (w a | w b) = (a|b) on a sample
    auto& g = w[7];
    for (std::size_t i = 0; i < roots.size(); i += 3)
        for (std::size_t j = 0; j < roots.size(); j += 5) {
            auto wa = imat_apply(g.m, roots[i]);
            auto wb = imat_apply(g.m, roots[j]);
            REQUIRE(a3.pair_roots(wa, wb) == a3.pair_roots(roots[i], roots[j]));
        }
    // roots are permuted by the group
    for (auto& r : roots) REQUIRE(a3.is_root(imat_apply(g.m, r)));
    // all squared lengths are 2
    for (auto& r : roots) REQUIRE(a3.pair_roots(r, r) == 2);

    RootSystem d4('D', 4);
    REQUIRE(d4.enumerate_weyl().size() == 192);
    REQUIRE_THROWS_AS(d4.enumerate_weyl(100), GroupTooLarge);

    // A1: two elements
    RootSystem a1('A', 1);
    REQUIRE(a1.enumerate_weyl().size() == 2);
}

TEST_CASE("Coxeter class sizes") {
    RootSystem a2('A', 2);
    auto sigma = a2.compose(a2.simple_reflection(0), a2.simple_reflection(1));
    REQUIRE(coxeter_class(a2, sigma).size() == 2);
    RootSystem a3('A', 3);
    auto s3 = a3.compose(a3.compose(a3.simple_reflection(0), a3.simple_reflection(1)), a3.simple_reflection(2));
    REQUIRE(coxeter_class(a3, s3).size() == 6);
    RootSystem a1('A', 1);
    REQUIRE(coxeter_class(a1, a1.simple_reflection(0)).size() == 1);
}

TEST_CASE("sigma has order h and hspace action is dual") {
    for (auto [t, n] : std::vector<std::pair<char, long>>{{'A', 2}, {'A', 3}, {'D', 4}}) {
        RootSystem rs(t, n);
        WeylElement sigma = rs.identity_element();
        for (long i = 0; i < rs.N; ++i) sigma = rs.compose(sigma, rs.simple_reflection(i));
        IMat p = sigma.m;
        long ord = 1;
        while (!(p == imat_identity((std::size_t)rs.N))) {
            p = imat_mul(p, sigma.m);
            ++ord;
            REQUIRE(ord <= rs.h);
        }
        REQUIRE(ord == rs.h);
        // duality <w a, x> = <a, w^{-1} x> on integer samples
        IMat hm = sigma.hspace_matrix();
        IVec a(rs.positive_roots[rs.positive_roots.size() / 2]);
        Vec<Rat> x;
        for (long i = 0; i < rs.N; ++i) x.push_back(frac(i + 1, 2));
        auto wx = [&](const IMat& m, const Vec<Rat>& v) {
            Vec<Rat> r((std::size_t)rs.N, Rat(0));
            for (long i = 0; i < rs.N; ++i)
                for (long j = 0; j < rs.N; ++j) r[(std::size_t)i] += Rat(m[(std::size_t)i][(std::size_t)j]) * v[(std::size_t)j];
            return r;
        };
        IVec wa = imat_apply(sigma.m, a);
        // <wa, wx> = <a, x>
        REQUIRE(rs.pair_nat(wa, wx(hm, x)) == rs.pair_nat(a, x));
    }
}
