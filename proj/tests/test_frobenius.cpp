// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <adetr/frames.hpp>
#include <adetr/frobenius.hpp>

using namespace adetr;

static Rat lowered(const FrobeniusChart& ch, const Vec<Rat>& t, std::size_t a, std::size_t b, std::size_t c) {
    // (v_a * v_b, v_c)
    Vec<Rat> ea((std::size_t)ch.N, Rat(0)), eb((std::size_t)ch.N, Rat(0));
    ea[a] = 1;
    eb[b] = 1;
    auto ab = ch.multiply(t, ea, eb);
    Rat s(0);
    for (std::size_t i = 0; i < (std::size_t)ch.N; ++i) s += ab[i] * ch.pairing(i, c);
    return s;
}

TEST_CASE("A-type charts: unit, pairing, grading") {
    for (long N : {1L, 2L, 3L, 4L}) {
        FrobeniusChart ch = FrobeniusChart::build('A', N);
        REQUIRE(ch.h == N + 1);
        // unit: multiplication by v_N is the identity
        Vec<Rat> t((std::size_t)N);
        Rng rng(7 + (std::uint64_t)N);
        for (auto& v : t) v = rng.rat(4, 3);
        REQUIRE(ch.mult_matrix((std::size_t)N - 1, t) == Mat<Rat>::identity((std::size_t)N));
        // pairing is antidiagonal with ones off the middle
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) {
                Rat v = ch.pairing((std::size_t)i, (std::size_t)j);
                if (i + j != N - 1)
                    REQUIRE(is_zero(v));
                else if (i != j)
                    REQUIRE(v == Rat(1));
            }
        REQUIRE(ch.euler_grading_holds());
        // theta eigenvalues symmetric around zero
        for (long a = 0; a < N; ++a) REQUIRE(ch.theta[(std::size_t)a] + ch.theta[(std::size_t)(N - 1 - a)] == Rat(0));
    }
    // A1 middle value and A3 middle value
    REQUIRE(FrobeniusChart::build('A', 1).pairing(0, 0) == frac(1, 2));
    REQUIRE(FrobeniusChart::build('A', 3).pairing(1, 1) == Rat(1));
}

TEST_CASE("multiplication: commutative, associative, Frobenius, Jacobi anchor") {
    FrobeniusChart ch = FrobeniusChart::build('A', 3);
    Rng rng(99);
    Vec<Rat> t(3);
    for (auto& v : t) v = rng.rat(4, 3);
    // associativity on all basis triples (exact)
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) {
                Vec<Rat> ea(3, Rat(0)), eb(3, Rat(0)), ec(3, Rat(0));
                ea[a] = 1;
                eb[b] = 1;
                ec[c] = 1;
                auto left = ch.multiply(t, ch.multiply(t, ea, eb), ec);
                auto right = ch.multiply(t, ea, ch.multiply(t, eb, ec));
                REQUIRE(left == right);
                // total symmetry of the lowered tensor
                REQUIRE(lowered(ch, t, a, b, c) == lowered(ch, t, b, a, c));
                REQUIRE(lowered(ch, t, a, b, c) == lowered(ch, t, a, c, b));
            }
    // Jacobi-algebra oracle at a point: structure constants from the quotient
    auto pa = ch.point_algebra(t);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            auto prod = pa.nf_coords(ch.v_at(a, t) * ch.v_at(b, t));
            auto coords = pa.to_flat.apply(prod);
            Vec<Rat> ea(3, Rat(0)), eb(3, Rat(0));
            ea[a] = 1;
            eb[b] = 1;
            REQUIRE(ch.multiply(t, ea, eb) == coords);
        }
    // A2 at t=0: x * x = 0 in the Jacobi algebra of x^3
    FrobeniusChart a2 = FrobeniusChart::build('A', 2);
    Vec<Rat> zero(2, Rat(0)), e1(2, Rat(0));
    e1[0] = 1;
    auto sq = a2.multiply(zero, e1, e1);
    REQUIRE(sq == Vec<Rat>{Rat(0), Rat(0)});
    // conformal dimension D = 1 - 2/h: A2 -> 1/3
    REQUIRE(a2.conformal_dimension() == frac(1, 3));
}

TEST_CASE("canonical frames and caustic detection (A2)") {
    set_working_digits(100);
    FrobeniusChart ch = FrobeniusChart::build('A', 2);
    Vec<Rat> s{Rat(1), Rat(0)};
    auto fr = canonical_frame(ch, s);
    REQUIRE(fr.u.size() == 2);
    REQUIRE(abs(fr.u[0] - fr.u[1]) > hpf(1) / 1000);
    // orthonormal frame: Psi g^{-1} Psi^T = Id
    CMat test = fr.Psi * to_cmat(ch.pairing_inv) * fr.Psi.transposed();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) REQUIRE(abs(test(i, j) - (i == j ? CNum(1L) : CNum())) < tol_eps());
    // Gtheta antisymmetric
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) REQUIRE(abs(fr.Gtheta(i, j) + fr.Gtheta(j, i)) < tol_eps());
    // homogeneity: sum_k u_k dlogDelta_j(k) = D exactly in the limit
    for (std::size_t j = 0; j < 2; ++j) {
        CNum s2;
        for (std::size_t k = 0; k < 2; ++k) s2 += fr.u[k] * fr.dlog_delta(j, k);
        REQUIRE(abs(s2 - CNum(ch.conformal_dimension())) < tol_eps());
    }
    REQUIRE_THROWS_AS(canonical_frame(ch, Vec<Rat>{Rat(0), Rat(0)}), CausticPoint);
    // A1: u_1 = t_1
    FrobeniusChart a1 = FrobeniusChart::build('A', 1);
    auto f1 = canonical_frame(a1, Vec<Rat>{frac(5, 7)});
    REQUIRE(abs(f1.u[0] - CNum(frac(5, 7))) < tol_eps());
}

TEST_CASE("D4 chart: flatness, unit, grading, frames") {
    set_working_digits(100);
    FrobeniusChart ch = FrobeniusChart::build('D', 4);
    REQUIRE(ch.degrees == std::vector<long>{2, 4, 4, 6});
    Rng rng(1234);
    Vec<Rat> t(4);
    for (auto& v : t) v = rng.rat(3, 2);
    REQUIRE(ch.mult_matrix(3, t) == Mat<Rat>::identity(4));
    REQUIRE(ch.euler_grading_holds());
    // pairing antidiagonal-with-block structure: entries vanish unless degrees pair up
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (ch.degrees[i] + ch.degrees[j] != ch.h + 2) REQUIRE(is_zero(ch.pairing(i, j)));
    // associativity spot checks
    for (int rep = 0; rep < 2; ++rep) {
        Vec<Rat> x(4), y(4), z(4);
        for (auto& v : x) v = rng.rat(3, 2);
        for (auto& v : y) v = rng.rat(3, 2);
        for (auto& v : z) v = rng.rat(3, 2);
        auto l = ch.multiply(t, ch.multiply(t, x, y), z);
        auto r = ch.multiply(t, x, ch.multiply(t, y, z));
        REQUIRE(l == r);
    }
    auto fr = canonical_frame(ch, t);
    REQUIRE(fr.u.size() == 4);
    CMat test = fr.Psi * to_cmat(ch.pairing_inv) * fr.Psi.transposed();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) REQUIRE(abs(test(i, j) - (i == j ? CNum(1L) : CNum())) < tol_eps());
}
