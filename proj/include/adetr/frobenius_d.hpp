// SPDX-License-Identifier: Apache-2.0
//
// D-type Frobenius chart: metric by Grothendieck-residue interpolation, flat
// coordinates from the Levi-Civita flatness equations solved degree by degree,
// structure constants interpolated in flat coordinates.
#pragma once

#include "frobenius.hpp"
#include "rng.hpp"

namespace adetr {

namespace detail {

/// all exponent vectors e with sum e_i * w_i == target (small searches)
inline void weighted_monomials(const std::vector<long>& w, long target, Expo& cur, std::size_t pos, std::vector<Expo>& out) {
    if (pos == w.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    for (long k = 0; k * w[pos] <= target; ++k) {
        cur[pos] = (int)k;
        weighted_monomials(w, target - k * w[pos], cur, pos + 1, out);
    }
    cur[pos] = 0;
}

inline std::vector<Expo> weighted_monomials(const std::vector<long>& w, long target) {
    std::vector<Expo> out;
    if (target < 0) return out;
    Expo cur(w.size(), 0);
    weighted_monomials(w, target, cur, 0, out);
    return out;
}

/// exact polynomial interpolation with a known candidate monomial set
inline QPoly fit_polynomial(const std::vector<Expo>& candidates, const std::vector<Vec<Rat>>& points,
                            const std::vector<Rat>& values, std::size_t nvars) {
    if (candidates.empty()) {
        for (auto& v : values)
            if (!is_zero(v)) throw std::runtime_error("fit_polynomial: nonzero values with empty candidate set");
        return QPoly(nvars);
    }
    Mat<Rat> A(points.size(), candidates.size());
    for (std::size_t r = 0; r < points.size(); ++r)
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            Rat m(1);
            for (std::size_t i = 0; i < nvars; ++i)
                for (int k = 0; k < candidates[c][i]; ++k) m *= points[r][i];
            A(r, c) = m;
        }
    Vec<Rat> x = solve(A, values);
    QPoly p(nvars);
    for (std::size_t c = 0; c < candidates.size(); ++c) p.add_term(candidates[c], x[c]);
    return p;
}

}  // namespace detail

inline FrobeniusChart FrobeniusChart::build_D(const RootSystem& rs) {
    FrobeniusChart ch;
    ch.type = 'D';
    ch.N = rs.N;
    ch.h = rs.h;
    for (long m : rs.exponents) ch.degrees.push_back(m + 1);
    ch.nvars_x = 2;
    std::size_t n = (std::size_t)ch.N;
    long N = ch.N, h = ch.h;

    // f0 = X^{N-1} + X Y^2; deformation monomials sorted by coordinate degree
    ch.f0 = QPoly(2);
    ch.f0.add_term(Expo{(int)(N - 1), 0}, Rat(1));
    ch.f0.add_term(Expo{1, 2}, Rat(1));
    std::vector<std::pair<long, Expo>> monos;  // (coordinate degree, exponent)
    monos.push_back({2, Expo{0, 2}});          // Y^2
    for (long k = N - 3; k >= 1; --k) monos.push_back({h - 2 * k, Expo{(int)k, 0}});
    monos.push_back({(long)N, Expo{0, 1}});    // Y
    monos.push_back({h, Expo{0, 0}});          // 1
    std::stable_sort(monos.begin(), monos.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<long> qdeg;
    for (auto& [d, e] : monos) {
        qdeg.push_back(d);
        ch.deformation_monos.push_back(QPoly::monomial(2, e, Rat(1)));
    }
    if (qdeg != ch.degrees) throw InternalInconsistency("D-type coordinate degrees");

    // --- helper: quotient algebra at a q-point (using q-coordinates, gauge 1)
    auto algebra_at_q = [&](const Vec<Rat>& q) {
        PointAlgebra pa;
        pa.nx = 2;
        QPoly F = ch.f0;
        for (std::size_t k = 0; k < n; ++k)
            if (!is_zero(q[k])) F = F + q[k] * ch.deformation_monos[k];
        std::vector<QPoly> gens{F.derivative(0), F.derivative(1)};
        pa.gb = GBasis<Rat>::build(gens);
        pa.basis = pa.gb.standard_monomials(4 * h);
        if ((long)pa.basis.size() != N) throw std::runtime_error("D Milnor number mismatch at sample point");
        QPoly fxx = F.derivative(0).derivative(0), fyy = F.derivative(1).derivative(1), fxy = F.derivative(0).derivative(1);
        pa.hessian = fxx * fyy - fxy * fxy;
        pa.hess_mult = pa.mult_matrix_std(pa.hessian);
        pa.hess_mult_inv = inverse(pa.hess_mult);
        return pa;
    };

    // --- interpolate the metric in q-coordinates -------------------------
    Rng rng(0xD0000000 + (std::uint64_t)N);
    auto sample_points = [&](std::size_t count) {
        std::vector<Vec<Rat>> pts;
        while (pts.size() < count) {
            Vec<Rat> q(n);
            for (auto& v : q) v = rng.rat(5, 3);
            try {
                algebra_at_q(q);
                pts.push_back(q);
            } catch (const std::exception&) { /* degenerate sample, resample */
            }
        }
        return pts;
    };
    std::vector<std::vector<std::vector<Expo>>> cand(n, std::vector<std::vector<Expo>>(n));
    std::size_t max_cand = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cand[i][j] = detail::weighted_monomials(ch.degrees, h + 2 - ch.degrees[i] - ch.degrees[j]);
            max_cand = std::max(max_cand, cand[i][j].size());
        }
    auto pts = sample_points(max_cand + 3);
    std::vector<PointAlgebra> algs;
    for (auto& q : pts) algs.push_back(algebra_at_q(q));
    std::vector<std::vector<QPoly>> gq(n, std::vector<QPoly>(n, QPoly(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::vector<Rat> vals;
            for (std::size_t r = 0; r < pts.size(); ++r)
                vals.push_back(algs[r].residue(ch.deformation_monos[i] * ch.deformation_monos[j]));
            // solve with exactly as many rows as needed, verify on the rest
            std::vector<Vec<Rat>> use_pts(pts.begin(), pts.end());
            QPoly fit = detail::fit_polynomial(cand[i][j], use_pts, vals, n);
            gq[i][j] = fit;
            gq[j][i] = fit;
        }

    // --- flatness equations: det(g) d_i d_j tau = adj(g)_{km} Gamma_{ij,m} d_k tau
    std::vector<std::vector<QPoly>> gmat = gq;
    QPoly detg = mpoly_det(gmat);
    // adjugate via cofactors
    std::vector<std::vector<QPoly>> adj(n, std::vector<QPoly>(n, QPoly(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<QPoly>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<QPoly> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(gmat[r][c]);
                minor.push_back(row);
            }
            QPoly d = minor.empty() ? QPoly(n, Rat(1)) : mpoly_det(minor);
            adj[i][j] = (((i + j) % 2) ? -d : d);
        }
    // Gamma_{ij,m} = (d_i g_{jm} + d_j g_{im} - d_m g_{ij}) / 2
    auto Gamma = [&](std::size_t i, std::size_t j, std::size_t m) {
        return frac(1, 2) * (gq[j][m].derivative(i) + gq[i][m].derivative(j) - gq[i][j].derivative(m));
    };
    auto flats_of_degree = [&](long d) {
        auto candm = detail::weighted_monomials(ch.degrees, d);
        // unknown tau = sum_c x_c mono_c; impose all (i<=j) equations
        std::vector<QPoly> basis_eqs;
        std::size_t nc = candm.size();
        // build equation polynomials per candidate, then match coefficients
        std::vector<std::vector<QPoly>> eqs(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            QPoly tau = QPoly::monomial(n, candm[c], Rat(1));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    QPoly lhs = detg * tau.derivative(i).derivative(j);
                    QPoly rhs(n);
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t m = 0; m < n; ++m) {
                            QPoly gm = Gamma(i, j, m);
                            if (gm.zero() || adj[k][m].zero()) continue;
                            rhs = rhs + adj[k][m] * gm * tau.derivative(k);
                        }
                    eqs[c].push_back(lhs - rhs);
                }
        }
        // coefficient matching across all equations
        std::map<std::pair<std::size_t, Expo>, std::size_t> rows;
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t e = 0; e < eqs[c].size(); ++e)
                for (auto& [expv, v] : eqs[c][e].t) rows.insert({{e, expv}, rows.size()});
        Mat<Rat> A(rows.size(), nc);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t e = 0; e < eqs[c].size(); ++e)
                for (auto& [expv, v] : eqs[c][e].t) A(rows[{e, expv}], c) = v;
        auto ker = kernel(A);
        std::vector<QPoly> out;
        for (auto& kv : ker) {
            QPoly tau(n);
            for (std::size_t c = 0; c < nc; ++c)
                if (!is_zero(kv[c])) tau.add_term(candm[c], kv[c]);
            out.push_back(tau);
        }
        return out;
    };

    std::vector<QPoly> t_raw;
    for (std::size_t a = 0; a < n;) {
        long d = ch.degrees[a];
        std::size_t mult = 0;
        while (a + mult < n && ch.degrees[a + mult] == d) ++mult;
        auto sols = flats_of_degree(d);
        if (sols.size() != mult) throw std::runtime_error("flat solution space has unexpected dimension");
        for (auto& s : sols) t_raw.push_back(s);
        a += mult;
    }

    // normalize linear parts to the identity (flat differentials at 0 span,
    // so the linear-coefficient matrix is invertible)
    {
        Mat<Rat> L(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                Expo e(n, 0);
                e[k] = 1;
                auto it = t_raw[i].t.find(e);
                L(i, k) = (it == t_raw[i].t.end()) ? Rat(0) : it->second;
            }
        Mat<Rat> Linv = inverse(L);
        std::vector<QPoly> fixed(n, QPoly(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(Linv(i, k))) fixed[i] = fixed[i] + Linv(i, k) * t_raw[k];
        t_raw = fixed;
    }

    // raw flat pairing: evaluate by chain rule at sample points (constant)
    auto flat_pairing_at = [&](const std::vector<QPoly>& tf, const Vec<Rat>& qpt, const PointAlgebra& pa) {
        // v_i = sum_k (dq_k/dt_i) mono_k: need dq/dt = (dt/dq)^{-1} at the point
        Mat<Rat> J(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) J(i, k) = tf[i].derivative(k).eval<Rat>(qpt);
        Mat<Rat> Jinv = inverse(J);  // Jinv(k,i) = dq_k/dt_i
        Mat<Rat> G(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                QPoly vi(2), vj(2);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!is_zero(Jinv(k, i))) vi = vi + Jinv(k, i) * ch.deformation_monos[k];
                    if (!is_zero(Jinv(k, j))) vj = vj + Jinv(k, j) * ch.deformation_monos[k];
                }
                G(i, j) = pa.residue(vi * vj);
                G(j, i) = G(i, j);
            }
        return G;
    };
    Mat<Rat> g_raw = flat_pairing_at(t_raw, pts[0], algs[0]);
    if (std::getenv("ADETR_DEBUG_D")) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) fprintf(stderr, "%s ", g_raw(i, j).get_str().c_str());
            fprintf(stderr, "\n");
        }
    }
    {
        Mat<Rat> g2 = flat_pairing_at(t_raw, pts[1], algs[1]);
        if (!(g2 == g_raw)) throw std::runtime_error("flat pairing is not constant (D flattening failed)");
    }

    // antidiagonal structure: degree pairing forces g_raw(i,j)=0 unless d_i+d_j=h+2
    // double middle block for even N (two degree-N coordinates): make it hyperbolic
    if (N % 2 == 0) {
        std::size_t b0 = 0;
        while (ch.degrees[b0] != N) ++b0;
        Rat p = g_raw(b0, b0), qv = g_raw(b0, b0 + 1), r = g_raw(b0 + 1, b0 + 1);
        // find rational isotropic direction of [[p,q],[q,r]] if possible
        Rat disc = qv * qv - p * r;
        Int sf = squarefree_part(disc);
        if (sf == 1 || disc == 0) {
            Rat rootd;  // sqrt(disc)
            {
                Rat inner = disc / Rat(sf);  // = disc when sf==1
                Int sn, sd;
                mpz_sqrt(sn.get_mpz_t(), disc.get_num().get_mpz_t());
                mpz_sqrt(sd.get_mpz_t(), disc.get_den().get_mpz_t());
                rootd = frac(sn, sd);
                (void)inner;
            }
            // u1 = isotropic, u2 = complementary isotropic with B(u1,u2)=1
            Vec<Rat> u1(2), u2(2);
            if (!is_zero(p)) {
                u1 = {(-qv + rootd) / p, Rat(1)};
                u2 = {(-qv - rootd) / p, Rat(1)};
            } else {
                u1 = {Rat(1), Rat(0)};
                u2 = is_zero(r) ? Vec<Rat>{Rat(0), Rat(1)} : Vec<Rat>{Rat(1), -Rat(2) * qv / r};
            }
            auto bform = [&](const Vec<Rat>& x, const Vec<Rat>& y) {
                return p * x[0] * y[0] + qv * (x[0] * y[1] + x[1] * y[0]) + r * x[1] * y[1];
            };
            Rat cross = bform(u1, u2);
            if (is_zero(cross)) throw std::runtime_error("degenerate middle block");
            for (auto& v : u2) v = v / cross;
            QPoly nt0 = u1[0] * t_raw[b0] + u1[1] * t_raw[b0 + 1];
            QPoly nt1 = u2[0] * t_raw[b0] + u2[1] * t_raw[b0 + 1];
            t_raw[b0] = nt0;
            t_raw[b0 + 1] = nt1;
            g_raw(b0, b0) = Rat(0);
            g_raw(b0 + 1, b0 + 1) = Rat(0);
            g_raw(b0, b0 + 1) = g_raw(b0 + 1, b0) = Rat(1);
        } else {
            // keep the block; the Coxeter frame matches it over Q(eta)
        }
    }

    ch.normalize_gauge(rs, t_raw, g_raw);
    ch.finalize_from_flats(t_raw);  // fills t_of_q, q_of_t only (nvars_x == 2)

    // final pairing and structure constants in flat coordinates
    // sample points in t now
    Rng rng2(0xD1000000 + (std::uint64_t)N);
    // per (a,b,c) candidate sets depend on all three indices; collect samples once
    std::size_t npts = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                npts = std::max(npts, detail::weighted_monomials(ch.degrees, h - ch.degrees[a] - ch.degrees[b] + ch.degrees[c]).size());
    std::vector<Vec<Rat>> tpts;
    std::vector<PointAlgebra> talgs;
    while (tpts.size() < npts + 3) {
        Vec<Rat> t(n);
        for (auto& v : t) v = rng2.rat(5, 3);
        try {
            talgs.push_back(ch.point_algebra(t));
            tpts.push_back(t);
        } catch (const std::exception&) {
        }
    }
    ch.C.assign(n, std::vector<std::vector<QPoly>>(n, std::vector<QPoly>(n, QPoly(n))));
    ch.pairing = Mat<Rat>(n, n);
    // v_b in std coords per point available through from_flat
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            std::vector<Vec<Rat>> coords;  // per point: coefficients of v_a*v_b in v-basis
            for (std::size_t r = 0; r < tpts.size(); ++r) {
                auto& pa = talgs[r];
                Vec<Rat> prod = pa.nf_coords(ch.v_at(a, tpts[r]) * ch.v_at(b, tpts[r]));
                coords.push_back(pa.to_flat.apply(prod));
            }
            for (std::size_t c = 0; c < n; ++c) {
                auto candset = detail::weighted_monomials(ch.degrees, h - ch.degrees[a] - ch.degrees[b] + ch.degrees[c]);
                std::vector<Rat> vals;
                for (std::size_t r = 0; r < tpts.size(); ++r) vals.push_back(coords[r][c]);
                QPoly fit = detail::fit_polynomial(candset, tpts, vals, n);
                ch.C[a][c][b] = fit;
                ch.C[b][c][a] = fit;
            }
            // pairing
            Rat pv = ch.kappa * talgs[0].residue(ch.v_at(a, tpts[0]) * ch.v_at(b, tpts[0]));
            ch.pairing(a, b) = pv;
            ch.pairing(b, a) = pv;
        }
    ch.pairing_inv = inverse(ch.pairing);
    for (long a = 0; a < N; ++a) ch.theta.push_back(frac(ch.degrees[(std::size_t)a] - 1, h) - frac(1, 2));
    return ch;
}

}  // namespace adetr
