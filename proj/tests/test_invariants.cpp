// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <adetr/invariants.hpp>

using namespace adetr;

static bool is_invariant(const RootSystem& rs, const QPoly& p) {
    for (long i = 0; i < rs.N; ++i)
        if (!(weyl_act(rs, rs.simple_reflection(i), p) == p)) return false;
    return true;
}

TEST_CASE("basic invariants: degrees and invariance") {
    for (auto [t, n] : std::vector<std::pair<char, long>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'D', 4}, {'D', 5}}) {
        RootSystem rs(t, n);
        auto b = basic_invariants(rs);
        std::vector<long> want;
        for (long m : rs.exponents) want.push_back(m + 1);
        REQUIRE(b.degrees == want);
        for (auto& p : b.polys) {
            REQUIRE(is_invariant(rs, p));
            Rat deg;
            std::vector<Rat> ones(p.n, Rat(1));
            REQUIRE(p.weighted_homogeneous(ones, deg));
        }
    }
    REQUIRE_THROWS_AS(basic_invariants(RootSystem('E', 7)), UnsupportedType);
}

TEST_CASE("A2 invariant degrees {2,3}, D4 {2,4,4,6}, A1 single x^2") {
    REQUIRE(basic_invariants(RootSystem('A', 2)).degrees == std::vector<long>{2, 3});
    REQUIRE(basic_invariants(RootSystem('D', 4)).degrees == std::vector<long>{2, 4, 4, 6});
    auto a1 = basic_invariants(RootSystem('A', 1));
    REQUIRE(a1.degrees == std::vector<long>{2});
    // single invariant proportional to x^2
    REQUIRE(a1.polys[0].t.size() == 1);
}

TEST_CASE("Reynolds operator") {
    RootSystem rs('A', 2);
    auto group = rs.enumerate_weyl();
    auto b = basic_invariants(rs);
    // invariant input is a fixed point
    REQUIRE(reynolds(rs, group, b.polys[0]) == b.polys[0]);
    // degree-1 input averages to zero
    QPoly x1 = QPoly::variable(2, 0);
    REQUIRE(reynolds(rs, group, x1).zero());
    // x1^2 averages to a nonzero multiple of the quadratic invariant
    QPoly r = reynolds(rs, group, x1 * x1);
    REQUIRE(!r.zero());
    QPoly q = mpoly_exact_div(r, b.polys[0]);
    REQUIRE(q.total_degree() == 0);
}

TEST_CASE("Jacobian identity det(dt/dx) = c prod <alpha,x>") {
    // A1: t = q2 = -x^2/4 -> det = -x/2, product = x, c = -1/2
    {
        RootSystem rs('A', 1);
        auto b = basic_invariants(rs);
        Rat c = jacobian_check(rs, b);
        REQUIRE(!is_zero(c));
    }
    for (auto [t, n] : std::vector<std::pair<char, long>>{{'A', 2}, {'A', 3}, {'A', 4}, {'D', 4}}) {
        RootSystem rs(t, n);
        auto b = basic_invariants(rs);
        Rat c = jacobian_check(rs, b);
        REQUIRE(!is_zero(c));
    }
    // a wrong basis (repeat the first invariant) must be rejected
    {
        RootSystem rs('A', 2);
        auto b = basic_invariants(rs);
        auto bad = b;
        bad.polys[1] = b.polys[0] * b.polys[0];  // degree 4, dependent columns never proportional
        REQUIRE_THROWS_AS(jacobian_check(rs, bad), IdentityViolated);
    }
}

TEST_CASE("d(V) both formulas") {
    auto dv = [](char t, long n) {
        RootSystem rs(t, n);
        return d_of_V(rs, basic_invariants(rs));
    };
    REQUIRE(dv('A', 3) == 1);
    REQUIRE(dv('A', 2) == -1);
    REQUIRE(dv('D', 4) == 5);
}

TEST_CASE("averaging identity vanishes up to degree d(V)") {
    Rng rng(20260810);
    for (auto [t, n] : std::vector<std::pair<char, long>>{{'A', 3}, {'A', 4}, {'D', 4}}) {
        RootSystem rs(t, n);
        auto group = rs.enumerate_weyl();
        auto b = basic_invariants(rs);
        long dV = d_of_V(rs, b);
        std::size_t nn = (std::size_t)rs.N;
        for (int rep = 0; rep < 3; ++rep) {
            Vec<Rat> gamma(nn);
            for (auto& g : gamma) g = Rat(rng.range(-3, 3));
            // random phi of degree <= dV
            QPoly phi(nn);
            for (int terms = 0; terms < 4; ++terms) {
                Expo e(nn, 0);
                long left = dV;
                for (std::size_t i = 0; i < nn && left > 0; ++i) {
                    e[i] = (int)rng.range(0, left);
                    left -= e[i];
                }
                phi.add_term(e, Rat(rng.range(-4, 4)));
            }
            if (phi.zero()) phi = QPoly(nn, Rat(1));
            auto sum = averaging_identity_sum(rs, group, gamma, phi, dV);
            REQUIRE(sum.zero());
        }
    }
    // A3 spec example: gamma = omega_1, phi = y_1 (deg 1 <= d(V) = 1)
    {
        RootSystem rs('A', 3);
        auto group = rs.enumerate_weyl();
        Vec<Rat> gamma(3, Rat(0));
        for (std::size_t j = 0; j < 3; ++j) gamma[j] = rs.cartan_inv(j, 0);
        QPoly phi = QPoly::variable(3, 0);
        REQUIRE(averaging_identity_sum(rs, group, gamma, phi, 1).zero());
    }
    // degree violation is rejected (A2 has d(V) = -1: any nonzero phi too big)
    {
        RootSystem rs('A', 2);
        auto group = rs.enumerate_weyl();
        QPoly phi(2, Rat(1));
        REQUIRE_THROWS_AS(averaging_identity_sum(rs, group, {Rat(1), Rat(0)}, phi, -1), DegreeTooHigh);
    }
    // negative control: for A3 the first nonvanishing bidegree is (1,3)
    {
        RootSystem rs('A', 3);
        auto group = rs.enumerate_weyl();
        QPoly y1 = QPoly::variable(3, 0), y2 = QPoly::variable(3, 1);
        QPoly phi = y1 * y1 * y2;
        auto sum = averaging_identity_sum(rs, group, {Rat(1), Rat(1), Rat(1)}, phi, 3);
        REQUIRE(!sum.zero());
    }
}

TEST_CASE("invariant basis JSON round trip is bit exact") {
    RootSystem rs('D', 4);
    auto b = basic_invariants(rs);
    auto j = invariants_to_json(b);
    auto b2 = invariants_from_json(j);
    REQUIRE(b2.degrees == b.degrees);
    for (std::size_t i = 0; i < b.polys.size(); ++i) REQUIRE(b2.polys[i] == b.polys[i]);
}

TEST_CASE("E6 invariants: degrees, invariance, independence at a point") {
    RootSystem rs('E', 6);
    auto b = basic_invariants(rs);
    REQUIRE(b.degrees == std::vector<long>{2, 5, 6, 8, 9, 12});
    for (auto& p : b.polys) REQUIRE(is_invariant(rs, p));
    // algebraic independence: Jacobian matrix at a random rational point is nonsingular
    std::vector<Rat> pt{Rat(1), Rat(-2), Rat(1, 2), Rat(3), Rat(-1, 3), Rat(2)};
    Mat<Rat> J(6, 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t i = 0; i < 6; ++i) J(a, i) = b.polys[a].derivative(i).eval<Rat>(pt);
    REQUIRE(!is_zero(det(J)));
}
