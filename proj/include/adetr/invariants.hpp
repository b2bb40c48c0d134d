// SPDX-License-Identifier: Apache-2.0
//
// W-invariant polynomial rings of ADE Weyl groups on the Cartan space,
// in fundamental-weight coordinates x_1..x_N (so <alpha_i, x> = x_i).
//
// A_N is realized on {z in C^{N+1} : sum z = 0} with W = S_{N+1}; D_N on C^N
// with signed permutations (even sign count); E6 invariants come from orbit
// sums of powers of the 27-element minuscule weight orbit.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multipoly.hpp"
#include "rng.hpp"
#include "rootsys.hpp"

#include <json.hpp>

namespace adetr {

struct UnsupportedType : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdentityViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeTooHigh : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using QPoly = MPoly<Rat>;

/// Linear realization z(x) for the classical types: rows of z_of_x give the
/// coordinates z_i as linear forms in x.
struct Realization {
    Mat<Rat> z_of_x;

    static Realization build(const RootSystem& rs) {
        Realization r;
        long N = rs.N;
        if (rs.type == 'A') {
            // z_i = sum_{j>=i} x_j - (1/(N+1)) sum_j j x_j   (1-based j)
            r.z_of_x = Mat<Rat>((std::size_t)N + 1, (std::size_t)N);
            for (long i = 0; i <= N; ++i)
                for (long j = 0; j < N; ++j) {
                    Rat v = -frac(j + 1, N + 1);
                    if (j >= i) v += 1;
                    r.z_of_x((std::size_t)i, (std::size_t)j) = v;
                }
        } else if (rs.type == 'D') {
            // solve M z = x with rows of M the realized simple roots
            Mat<Rat> M((std::size_t)N, (std::size_t)N);
            for (long i = 0; i + 1 < N; ++i) {
                M((std::size_t)i, (std::size_t)i) = 1;
                M((std::size_t)i, (std::size_t)i + 1) = -1;
            }
            M((std::size_t)N - 1, (std::size_t)N - 2) = 1;
            M((std::size_t)N - 1, (std::size_t)N - 1) = 1;
            r.z_of_x = inverse(M);
        } else {
            throw UnsupportedType("no linear realization wired for E types");
        }
        return r;
    }

    /// the z_i as degree-1 polynomials in x
    std::vector<QPoly> linear_forms() const {
        std::vector<QPoly> out;
        for (std::size_t i = 0; i < z_of_x.rows; ++i) {
            QPoly f(z_of_x.cols);
            for (std::size_t j = 0; j < z_of_x.cols; ++j)
                if (sgn(z_of_x(i, j)) != 0) f.add_term(unit_expo(z_of_x.cols, j), z_of_x(i, j));
            out.push_back(f);
        }
        return out;
    }

    static Expo unit_expo(std::size_t n, std::size_t j) {
        Expo e(n, 0);
        e[(std::size_t)j] = 1;
        return e;
    }
};

/// elementary symmetric polynomials e_1..e_k of the given polynomials
inline std::vector<QPoly> elementary_symmetric(const std::vector<QPoly>& z, std::size_t upto) {
    std::size_t n = z.empty() ? 0 : z[0].n;
    std::vector<QPoly> e(upto + 1, QPoly(n));
    e[0] = QPoly(n, Rat(1));
    // standard DP: e_k <- e_k + z_i * e_{k-1}, i ascending, k descending
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t k = std::min(upto, i + 1); k >= 1; --k) e[k] = e[k] + z[i] * e[k - 1];
    return e;
}

struct InvariantBasis {
    char type;
    long N;
    std::vector<QPoly> polys;   // t_1..t_N in weight coordinates, degree-sorted
    std::vector<long> degrees;  // d_1 <= ... <= d_N
};

/// action of w on polynomials: (w . p)(x) = p(w^{-1} x); the required matrix
/// is just the transpose of the hstar matrix of w (integral).
inline QPoly weyl_act(const RootSystem& rs, const WeylElement& w, const QPoly& p) {
    Mat<Rat> m((std::size_t)rs.N, (std::size_t)rs.N);
    for (long i = 0; i < rs.N; ++i)
        for (long j = 0; j < rs.N; ++j) m((std::size_t)i, (std::size_t)j) = Rat(w.m[(std::size_t)j][(std::size_t)i]);
    return p.substitute_linear(m);
}

/// Reynolds operator |W|^{-1} sum_w w.p
inline QPoly reynolds(const RootSystem& rs, const std::vector<WeylElement>& group, const QPoly& p) {
    QPoly s((std::size_t)rs.N);
    for (auto& w : group) s = s + weyl_act(rs, w, p);
    return frac(1, (long)group.size()) * s;
}

/// W-orbit of a rational hstar vector (root coordinates)
inline std::vector<Vec<Rat>> weight_orbit(const RootSystem& rs, const Vec<Rat>& v) {
    std::set<std::vector<Rat>> seen{v};
    std::vector<Vec<Rat>> out{v};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (long i = 0; i < rs.N; ++i) {
            Vec<Rat> img((std::size_t)rs.N, Rat(0));
            for (long r = 0; r < rs.N; ++r)
                for (long c = 0; c < rs.N; ++c)
                    img[(std::size_t)r] += Rat(rs.simple_refl[(std::size_t)i][(std::size_t)r][(std::size_t)c]) * out[head][(std::size_t)c];
            if (seen.insert(img).second) out.push_back(img);
        }
    }
    return out;
}

inline InvariantBasis basic_invariants(const RootSystem& rs) {
    InvariantBasis b;
    b.type = rs.type;
    b.N = rs.N;
    std::size_t n = (std::size_t)rs.N;
    if (rs.type == 'A') {
        auto z = Realization::build(rs).linear_forms();
        auto e = elementary_symmetric(z, n + 1);
        for (std::size_t k = 2; k <= n + 1; ++k) b.polys.push_back(e[k]);
    } else if (rs.type == 'D') {
        auto z = Realization::build(rs).linear_forms();
        std::vector<QPoly> z2;
        for (auto& f : z) z2.push_back(f * f);
        auto e = elementary_symmetric(z2, n - 1);
        for (std::size_t k = 1; k + 1 <= n; ++k) b.polys.push_back(e[k]);
        QPoly prod(n, Rat(1));
        for (auto& f : z) prod = prod * f;
        b.polys.push_back(prod);
    } else if (rs.N == 6) {
        // E6: orbit power sums of the 27-element minuscule orbit
        Vec<Rat> omega1(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) omega1[j] = rs.cartan_inv(j, 0);
        auto orbit = weight_orbit(rs, omega1);
        if (orbit.size() != 27) throw InternalInconsistency("E6 minuscule orbit size");
        for (long m : rs.exponents) {
            long d = m + 1;
            QPoly sum(n);
            for (auto& mu : orbit) {
                QPoly lin(n);
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(mu[j]) != 0) lin.add_term(Realization::unit_expo(n, j), mu[j]);
                QPoly p(n, Rat(1));
                for (long k = 0; k < d; ++k) p = p * lin;
                sum = sum + p;
            }
            if (sum.zero()) throw InternalInconsistency("E6 orbit power sum vanished");
            b.polys.push_back(sum);
        }
    } else {
        throw UnsupportedType("basic invariants for E7/E8 are not enumerable under the default strategy");
    }
    // degree sort (stable; D_N needs it)
    std::vector<std::pair<long, QPoly>> tagged;
    for (auto& p : b.polys) tagged.push_back({p.total_degree(), p});
    std::stable_sort(tagged.begin(), tagged.end(), [](auto& a, auto& c) { return a.first < c.first; });
    b.polys.clear();
    for (auto& [d, p] : tagged) {
        b.degrees.push_back(d);
        b.polys.push_back(p);
    }
    std::vector<long> want;
    for (long m : rs.exponents) want.push_back(m + 1);
    if (b.degrees != want) throw InternalInconsistency("invariant degrees do not match exponents+1");
    return b;
}

/// product of <alpha, x> over positive roots
inline QPoly mirror_product(const RootSystem& rs) {
    std::size_t n = (std::size_t)rs.N;
    QPoly prod(n, Rat(1));
    for (auto& r : rs.positive_roots) {
        QPoly lin(n);
        for (std::size_t j = 0; j < n; ++j)
            if (r[j] != 0) lin.add_term(Realization::unit_expo(n, j), Rat(r[j]));
        prod = prod * lin;
    }
    return prod;
}

/// the constant c with det(dt_a/dx_i) = c * prod_{alpha>0} <alpha,x>
inline Rat jacobian_check(const RootSystem& rs, const InvariantBasis& basis) {
    std::size_t n = (std::size_t)rs.N;
    std::vector<std::vector<QPoly>> jac(n, std::vector<QPoly>(n, QPoly(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i) jac[a][i] = basis.polys[a].derivative(i);
    QPoly d = mpoly_det(jac);
    QPoly prod = mirror_product(rs);
    if (d.zero()) throw IdentityViolated("Jacobian determinant vanishes identically");
    QPoly q;
    try {
        q = mpoly_exact_div(d, prod);
    } catch (const std::exception&) {
        throw IdentityViolated("Jacobian determinant is not divisible by the mirror product");
    }
    if (q.total_degree() != 0) throw IdentityViolated("Jacobian/mirror ratio is not constant");
    return q.t.begin()->second;
}

/// d(V) = N h/2 - h - 1 = d_1 + ... + d_{N-1} - N - 1, both ways
inline long d_of_V(const RootSystem& rs, const InvariantBasis& basis) {
    long a = rs.N * rs.h / 2 - rs.h - 1;
    long b = -rs.N - 1;
    for (std::size_t i = 0; i + 1 < basis.degrees.size(); ++i) b += basis.degrees[i];
    if (a != b) throw InternalInconsistency("two expressions for d(V) disagree");
    return a;
}

/// sum_w det(w) <w gamma, x> phi(w^{-1} y), a polynomial on hspace x hspace:
/// variables 0..N-1 are x, N..2N-1 are y. Zero whenever deg phi <= d(V).
inline QPoly averaging_identity_sum(const RootSystem& rs, const std::vector<WeylElement>& group, const Vec<Rat>& gamma,
                                    const QPoly& phi, long dV) {
    if (phi.total_degree() > dV) throw DegreeTooHigh("phi degree exceeds d(V)");
    std::size_t n = (std::size_t)rs.N;
    QPoly total(2 * n);
    for (auto& w : group) {
        // <w gamma, x>: (w gamma)_i x_i with w gamma in root coordinates
        Vec<Rat> wg(n, Rat(0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (w.m[r][c] != 0) wg[r] += Rat(w.m[r][c]) * gamma[c];
        QPoly lin(2 * n);
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(wg[j]) != 0) lin.add_term(Realization::unit_expo(2 * n, j), wg[j]);
        // phi(w^{-1} y): x_i -> sum_j (w.m)_{j i} y_j, then re-embed into y block
        Mat<Rat> sub(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sub(i, n + j) = Rat(w.m[j][i]);
        QPoly phiw = phi.substitute_linear(sub);
        QPoly term = lin * phiw;
        total = (w.det > 0) ? total + term : total - term;
    }
    return total;
}

// --- cache format: bit-exact JSON round trip ------------------------------
inline nlohmann::json invariants_to_json(const InvariantBasis& b) {
    nlohmann::json j;
    j["type"] = std::string(1, b.type);
    j["rank"] = b.N;
    j["degrees"] = b.degrees;
    auto& arr = j["polys"] = nlohmann::json::array();
    for (auto& p : b.polys) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& [e, v] : p.t) terms.push_back({{"e", e}, {"c", v.get_str()}});
        arr.push_back({{"nvars", p.n}, {"terms", terms}});
    }
    return j;
}

inline InvariantBasis invariants_from_json(const nlohmann::json& j) {
    InvariantBasis b;
    b.type = j.at("type").get<std::string>()[0];
    b.N = j.at("rank").get<long>();
    b.degrees = j.at("degrees").get<std::vector<long>>();
    for (auto& pj : j.at("polys")) {
        QPoly p(pj.at("nvars").get<std::size_t>());
        for (auto& tj : pj.at("terms")) {
            Expo e = tj.at("e").get<Expo>();
            p.t[e] = Rat(tj.at("c").get<std::string>());
        }
        b.polys.push_back(p);
    }
    return b;
}

}  // namespace adetr
