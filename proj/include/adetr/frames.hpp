// SPDX-License-Identifier: Apache-2.0
//
// Semisimple (canonical) frames at a point: critical values u_j, metric
// weights Delta_j, the orthonormal idempotent frame, and the rotation data
// needed by the R-matrix. All derivative-type quantities are obtained from
// homogeneity: the Euler-contracted frame connection equals the grading
// operator theta conjugated into the canonical frame, so no numerical
// differentiation is ever performed.
#pragma once

#include <algorithm>
#include <vector>

#include "frobenius.hpp"
#include "numeric.hpp"

namespace adetr {

using CMat = Mat<CNum>;
using CVec = Vec<CNum>;

inline bool is_zero(const CNum& z) { return z.re == 0 && z.im == 0; }

inline CMat to_cmat(const Mat<Rat>& m) {
    CMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = CNum(m.a[i]);
    return r;
}

/// numerically pivoted inverse
inline CMat cinverse(const CMat& m) {
    std::size_t n = m.rows;
    CMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = CNum(1L);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (abs2(aug(i, col)) > abs2(aug(p, col))) p = i;
        if (abs2(aug(p, col)) == 0) throw std::runtime_error("cinverse: singular");
        if (p != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(col, j), aug(p, j));
        CNum inv = CNum(1L) / aug(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || abs2(aug(i, col)) == 0) continue;
            CNum f = aug(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
        }
    }
    CMat r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

/// one kernel vector of an (approximately rank n-1) matrix
inline CVec ckernel_vector(CMat m) {
    std::size_t n = m.rows;
    std::vector<std::size_t> pivcol;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        for (std::size_t i = row + 1; i < n; ++i)
            if (abs2(m(i, col)) > abs2(m(p, col))) p = i;
        hpf scale(0);
        for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, abs(m(row > 0 ? row - 1 : 0, i)));
        if (abs(m(p, col)) < tol_eps(14) * (scale + 1)) continue;  // treat as zero column
        if (p != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(m(row, j), m(p, j));
        CNum inv = CNum(1L) / m(row, col);
        for (std::size_t j = 0; j < n; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row) continue;
            CNum f = m(i, col);
            if (abs2(f) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(row, j);
        }
        pivcol.push_back(col);
        ++row;
    }
    // free column = first non-pivot
    std::vector<bool> isp(n, false);
    for (auto c : pivcol) isp[c] = true;
    std::size_t free = 0;
    while (free < n && isp[free]) ++free;
    if (free == n) throw std::runtime_error("ckernel: matrix has trivial kernel");
    CVec v(n, CNum());
    v[free] = CNum(1L);
    for (std::size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = -m(r, free);
    return v;
}

struct SemisimpleFrame {
    Vec<Rat> s;                 // base point in flat coordinates
    long N = 0;
    std::vector<CNum> u;        // canonical values, deterministic order
    std::vector<CVec> du;       // du[j][a] = du_j/dt_a (covector components)
    std::vector<CNum> delta;    // Delta_j = (du_j, du_j)
    std::vector<CNum> sqrt_delta;
    CMat Psi;                   // flat coords -> e-frame coords, rows j
    CMat PsiInv;                // columns: e_j in flat coordinates
    CMat Gtheta;                // theta in the e-frame (= iota_E of the frame connection)

    /// rotation coefficient gamma_{ij} = Gtheta_{ij}/(u_i - u_j), i != j
    CNum gamma(std::size_t i, std::size_t j) const { return Gtheta(i, j) / (u[i] - u[j]); }

    /// d(log Delta_j) components in the du_k basis: d log Delta_j = sum_k (...) du_k
    /// from the Darboux-Egorov frame equations (eta_jj = 1/Delta_j).
    CNum dlog_delta(std::size_t j, std::size_t k) const {
        if (k != j) {
            // d_{u_k} eta_jj = 2 gamma_jk sqrt(eta_jj eta_kk)
            CNum e_jj = CNum(1L) / delta[j], rt = CNum(1L) / (sqrt_delta[j] * sqrt_delta[k]);
            CNum de = CNum(2L) * gamma(j, k) * rt;
            return -de / e_jj * CNum(1L);  // dlog Delta = -dlog eta
        }
        CNum sum;
        for (std::size_t m = 0; m < (std::size_t)N; ++m)
            if (m != j) sum += dlog_delta(j, m);
        return -sum;  // sum_k d_{u_k} eta_jj = 0
    }
};

/// build the canonical frame at a rational semisimple point
inline SemisimpleFrame canonical_frame(const FrobeniusChart& chart, const Vec<Rat>& s) {
    SemisimpleFrame fr;
    fr.s = s;
    fr.N = chart.N;
    std::size_t n = (std::size_t)chart.N;
    Mat<Rat> E = chart.euler_matrix(s);
    auto cp = charpoly(E);
    std::vector<CNum> cc;
    for (auto& v : cp) cc.push_back(CNum(v));
    auto roots = poly_roots(cc);
    std::sort(roots.begin(), roots.end(), [](const CNum& a, const CNum& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    // caustic detection: separation relative to scale
    hpf scale(0);
    for (auto& r : roots) scale = std::max(scale, abs(r));
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (abs(roots[i] - roots[j]) < tol_eps(16) * (scale + 1))
                throw CausticPoint("canonical values collide (point on the caustic)");
    fr.u = roots;

    CMat Ec = to_cmat(E);
    std::vector<CMat> Ma;
    for (std::size_t a = 0; a < n; ++a) Ma.push_back(to_cmat(chart.mult_matrix(a, s)));
    std::vector<CVec> w;
    for (std::size_t j = 0; j < n; ++j) {
        CMat m = Ec;
        for (std::size_t i = 0; i < n; ++i) m(i, i) -= fr.u[j];
        w.push_back(ckernel_vector(m));
    }
    // du_j/dt_a = eigenvalue of M_a on w_j (Rayleigh at the largest entry)
    fr.du.assign(n, CVec(n, CNum()));
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (abs2(w[j][i]) > abs2(w[j][k])) k = i;
        for (std::size_t a = 0; a < n; ++a) {
            CVec mv = Ma[a].apply(w[j]);
            fr.du[j][a] = mv[k] / w[j][k];
        }
    }
    // Delta_j = du_j^T g^{-1} du_j
    CMat ginv = to_cmat(chart.pairing_inv);
    fr.delta.resize(n);
    fr.sqrt_delta.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        CNum d;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d += fr.du[j][a] * ginv(a, b) * fr.du[j][b];
        fr.delta[j] = d;
        fr.sqrt_delta[j] = sqrt(d);
        if (abs(d) < tol_eps(16)) throw CausticPoint("vanishing metric weight Delta_j");
    }
    // Psi_{j,a} = (v_a, e_j) = du_j[a] / sqrt(Delta_j)
    fr.Psi = CMat(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a) fr.Psi(j, a) = fr.du[j][a] / fr.sqrt_delta[j];
    fr.PsiInv = cinverse(fr.Psi);
    // theta in the e-frame
    CMat th(n, n);
    for (std::size_t a = 0; a < n; ++a) th(a, a) = CNum(chart.theta[a]);
    fr.Gtheta = fr.Psi * th * fr.PsiInv;
    return fr;
}

}  // namespace adetr
