// SPDX-License-Identifier: Apache-2.0
//
// Frobenius structure of the miniversal deformation, in flat coordinates.
//
// A_N: one essential variable, F(q,X) = X^h + q_2 X^{h-2} + ... + q_h, flat
//      coordinates by the classical residue formulas
//          t_k = (h/m_k) [X^{-1}] F^{m_k/h},
//      which make the residue pairing the constant antidiagonal (1/h) J.
// D_N: two essential variables, F = X^{N-1} + X Y^2 + sum q_k v_k; the metric
//      is computed through the Grothendieck residue (trace form) and flat
//      coordinates are obtained by solving nabla dt = 0 degree by degree.
//
// The quadratic Table-1 variables are split off; their residue factors sit in
// the global pairing gauge kappa, which is fixed so that the flat Gram matrix
// matches the Gram matrix realizable by the Coxeter eigenbasis over Q(eta).
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "groebner.hpp"
#include "invariants.hpp"
#include "multipoly.hpp"
#include "rootsys.hpp"

namespace adetr {

struct CausticPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// invert a graded polynomial map t = T(q) (triangular by weighted degree,
/// invertible linear part); returns q_i as polynomials in t
inline std::vector<QPoly> invert_graded_map(const std::vector<QPoly>& T, const std::vector<long>& degrees) {
    std::size_t n = T.size();
    // iterate: q <- q - Jlin^{-1} (T(q) - t), starting from q = Jlin^{-1} t;
    // converges in weighted degree since corrections are higher order
    Mat<Rat> lin(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Expo e(n, 0);
            e[j] = 1;
            auto it = T[i].t.find(e);
            lin(i, j) = (it == T[i].t.end()) ? Rat(0) : it->second;
        }
    Mat<Rat> lin_inv = inverse(lin);
    std::vector<QPoly> q(n, QPoly(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(lin_inv(i, j)) != 0) q[i].add_term(Realization::unit_expo(n, j), lin_inv(i, j));
    long maxdeg = *std::max_element(degrees.begin(), degrees.end());
    for (long it = 0; it < maxdeg + 2; ++it) {
        // residual r = T(q(t)) - t
        bool clean = true;
        std::vector<QPoly> r(n, QPoly(n));
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = T[i].substitute(q) - QPoly::variable(n, i);
            if (!r[i].zero()) clean = false;
        }
        if (clean) return q;
        for (std::size_t i = 0; i < n; ++i) {
            QPoly corr(n);
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(lin_inv(i, j)) != 0) corr = corr + lin_inv(i, j) * r[j];
            q[i] = q[i] - corr;
        }
    }
    throw std::runtime_error("invert_graded_map: did not stabilize");
}

class FrobeniusChart {
  public:
    char type;
    long N, h;
    std::vector<long> degrees;           // d_1 <= ... <= d_N, d_N = h
    Mat<Rat> pairing, pairing_inv;       // constant flat Gram matrix
    Rat kappa = 1;                       // residue gauge
    std::vector<Rat> theta;              // theta_a = m_a/h - 1/2
    std::vector<std::vector<std::vector<QPoly>>> C;  // C[a][c][b]: v_a*v_b = sum_c C[a][c][b] v_c

    // unfolding bookkeeping (essential variables only)
    std::size_t nvars_x;                   // 1 for A, 2 for D
    std::vector<QPoly> deformation_monos;  // v_k(X[,Y]) as polynomials in the essential vars
    QPoly f0;                              // undeformed germ
    std::vector<QPoly> q_of_t;             // unfolding coefficients as polynomials in flat t
    std::vector<QPoly> t_of_q;             // flat coordinates in terms of unfolding coefficients

    Rat conformal_dimension() const { return Rat(1) - Rat(2, h); }
    Rat tweight(std::size_t a) const { return frac(degrees[a], h); }

    /// F(t, X[,Y]) with x-variables appended after the t-block is not needed;
    /// this returns F at a fixed rational point t as a polynomial in x
    QPoly F_at(const Vec<Rat>& t) const {
        QPoly F = f0;
        for (std::size_t k = 0; k < q_of_t.size(); ++k) {
            Rat qk = q_of_t[k].eval<Rat>(t);
            if (sgn(qk) != 0) F = F + qk * deformation_monos[k];
        }
        return F;
    }

    /// v_a at the point t, as a polynomial in the essential variables
    QPoly v_at(std::size_t a, const Vec<Rat>& t) const {
        QPoly v(nvars_x);
        for (std::size_t k = 0; k < q_of_t.size(); ++k) {
            Rat d = q_of_t[k].derivative(a).eval<Rat>(t);
            if (sgn(d) != 0) v = v + d * deformation_monos[k];
        }
        return v;
    }

    Mat<Rat> mult_matrix(std::size_t a, const Vec<Rat>& t) const {
        Mat<Rat> m((std::size_t)N, (std::size_t)N);
        for (std::size_t c = 0; c < (std::size_t)N; ++c)
            for (std::size_t b = 0; b < (std::size_t)N; ++b) m(c, b) = C[a][c][b].eval<Rat>(t);
        return m;
    }

    Vec<Rat> multiply(const Vec<Rat>& t, const Vec<Rat>& x, const Vec<Rat>& y) const {
        Vec<Rat> out((std::size_t)N, Rat(0));
        for (std::size_t a = 0; a < (std::size_t)N; ++a) {
            if (is_zero(x[a])) continue;
            for (std::size_t c = 0; c < (std::size_t)N; ++c)
                for (std::size_t b = 0; b < (std::size_t)N; ++b) {
                    if (is_zero(y[b]) || C[a][c][b].zero()) continue;
                    out[c] += x[a] * y[b] * C[a][c][b].eval<Rat>(t);
                }
        }
        return out;
    }

    /// E* multiplication matrix at t (eigenvalues are the canonical values)
    Mat<Rat> euler_matrix(const Vec<Rat>& t) const {
        Mat<Rat> m((std::size_t)N, (std::size_t)N);
        for (std::size_t a = 0; a < (std::size_t)N; ++a) {
            if (is_zero(t[a])) continue;
            Rat w = tweight(a) * t[a];
            Mat<Rat> ma = mult_matrix(a, t);
            for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] += w * ma.a[i];
        }
        return m;
    }

    /// grading residual of the structure constants (exactly zero)
    bool euler_grading_holds() const {
        for (std::size_t a = 0; a < (std::size_t)N; ++a)
            for (std::size_t c = 0; c < (std::size_t)N; ++c)
                for (std::size_t b = 0; b < (std::size_t)N; ++b) {
                    const QPoly& p = C[a][c][b];
                    if (p.zero()) continue;
                    Rat want = Rat(1) - Rat(degrees[a] + degrees[b] - degrees[c], h);
                    QPoly e((std::size_t)N);
                    for (std::size_t i = 0; i < (std::size_t)N; ++i) {
                        QPoly d = p.derivative(i);
                        if (!d.zero()) e = e + tweight(i) * (QPoly::variable((std::size_t)N, i) * d);
                    }
                    if (!(e == want * p)) return false;
                }
        return true;
    }

    static FrobeniusChart build(char type_letter, long rank);

  private:
    void normalize_gauge(const RootSystem& rs, std::vector<QPoly>& t_raw, const Mat<Rat>& g_raw);
    void finalize_from_flats(const std::vector<QPoly>& t_flat);
    static FrobeniusChart build_A(const RootSystem& rs);
    static FrobeniusChart build_D(const RootSystem& rs);

    // --- quotient-algebra helpers (essential variables, fixed t) ----------
  public:
    struct PointAlgebra {
        GBasis<Rat> gb;
        std::vector<Expo> basis;                 // standard monomials
        Mat<Rat> to_flat, from_flat;             // v-basis <-> standard-monomial coords
        QPoly hessian;                           // det Hess F
        Mat<Rat> hess_mult, hess_mult_inv;       // multiplication by hessian, std coords
        std::size_t nx;

        Vec<Rat> nf_coords(const QPoly& p) const {
            QPoly r = gb.normal_form(p);
            Vec<Rat> c(basis.size(), Rat(0));
            for (auto& [e, v] : r.t) {
                auto it = std::find(basis.begin(), basis.end(), e);
                if (it == basis.end()) throw std::runtime_error("PointAlgebra: normal form outside basis");
                c[(std::size_t)(it - basis.begin())] = v;
            }
            return c;
        }
        Mat<Rat> mult_matrix_std(const QPoly& g) const {
            Mat<Rat> m(basis.size(), basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                auto col = nf_coords(g * QPoly::monomial(nx, basis[j], Rat(1)));
                for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = col[i];
            }
            return m;
        }
        /// Grothendieck residue functional: lambda(g) = Tr(M_g M_J^{-1})
        Rat residue(const QPoly& g) const {
            Mat<Rat> m = mult_matrix_std(g) * hess_mult_inv;
            Rat tr(0);
            for (std::size_t i = 0; i < basis.size(); ++i) tr += m(i, i);
            return tr;
        }
    };

    PointAlgebra point_algebra(const Vec<Rat>& t) const {
        PointAlgebra pa;
        pa.nx = nvars_x;
        QPoly F = F_at(t);
        std::vector<QPoly> gens;
        for (std::size_t i = 0; i < nvars_x; ++i) gens.push_back(F.derivative(i));
        pa.gb = GBasis<Rat>::build(gens);
        pa.basis = pa.gb.standard_monomials(4 * h);
        if ((long)pa.basis.size() != N) throw std::runtime_error("Milnor number mismatch at point");
        // v-basis in std coords
        Mat<Rat> tf(pa.basis.size(), pa.basis.size());
        for (std::size_t b = 0; b < (std::size_t)N; ++b) {
            auto col = pa.nf_coords(v_at(b, t));
            for (std::size_t i = 0; i < pa.basis.size(); ++i) tf(i, b) = col[i];
        }
        pa.to_flat = inverse(tf);   // std -> v coords
        pa.from_flat = tf;          // v -> std coords
        if (nvars_x == 1) {
            pa.hessian = F.derivative(0).derivative(0);
        } else {
            QPoly fxx = F.derivative(0).derivative(0), fyy = F.derivative(1).derivative(1), fxy = F.derivative(0).derivative(1);
            pa.hessian = fxx * fyy - fxy * fxy;
        }
        pa.hess_mult = pa.mult_matrix_std(pa.hessian);
        pa.hess_mult_inv = inverse(pa.hess_mult);
        return pa;
    }

    /// residue pairing at a point (with the chart gauge)
    Rat pairing_at(const PointAlgebra& pa, const QPoly& a, const QPoly& b) const { return kappa * pa.residue(a * b); }
};

// --------------------------------------------------------------------------
// A-type construction
// --------------------------------------------------------------------------
inline FrobeniusChart FrobeniusChart::build_A(const RootSystem& rs) {
    FrobeniusChart ch;
    ch.type = 'A';
    ch.N = rs.N;
    ch.h = rs.h;
    for (long m : rs.exponents) ch.degrees.push_back(m + 1);
    ch.nvars_x = 1;
    std::size_t n = (std::size_t)ch.N;
    long h = ch.h;

    // deformation monomials: v_k corresponds to flat t_k; as X-polynomials the
    // q-coordinates use X^{h-j}, j=2..h; the k-th flat coordinate has degree
    // d_k = k+1, so the matching monomial is X^{h-j} with j = k+1 = X^{N-k}
    ch.f0 = QPoly(1);
    ch.f0.add_term(Expo{(int)h}, Rat(1));
    // the q_j coordinate multiplies X^{h-j}, j = 2..h; index k = j-2
    for (std::size_t k = 0; k < n; ++k) {
        QPoly v(1);
        v.add_term(Expo{(int)(h - (long)k - 2)}, Rat(1));
        ch.deformation_monos.push_back(v);
    }

    // flat coordinates in terms of q by the residue formula
    // F^{m/h} = X^m (1+u)^{m/h}, u = sum q_j X^{-j}; want [X^{-1}]
    std::vector<QPoly> t_raw;
    for (long k = 1; k <= ch.N; ++k) {
        long m = k;  // A-type exponents are 1..N
        // series in u up to the power that can reach X^{-m-1}
        long max_pow = (m + 1) / 2 + 1;
        // terms: map X-exponent -> QPoly in q
        std::map<long, QPoly> cur{{0, QPoly(n, Rat(1))}};  // (1+u)^{m/h} accumulator
        std::map<long, QPoly> upow{{0, QPoly(n, Rat(1))}};
        QPoly res(n);
        Rat binom(1);
        for (long p = 0; p <= max_pow; ++p) {
            if (p > 0) binom *= (frac(m, h) - Rat(p - 1)) / Rat(p);
            for (auto& [xe, coeff] : upow) {
                if (m + xe == -1) res = res + binom * coeff;
            }
            if (p == max_pow) break;
            // upow <- upow * u
            std::map<long, QPoly> nxt;
            for (auto& [xe, coeff] : upow)
                for (long j = 2; j <= h; ++j) {
                    QPoly qj = QPoly::variable(n, (std::size_t)(j - 2));
                    auto& slot = nxt[xe - j];
                    if (slot.n == 0) slot = QPoly(n);
                    slot = slot + coeff * qj;
                }
            // prune unreachable exponents
            for (auto it = nxt.begin(); it != nxt.end();) {
                if (m + it->first < -1 - 0)
                    it = nxt.erase(it);
                else
                    ++it;
            }
            upow = std::move(nxt);
        }
        t_raw.push_back(frac(h, m) * res);
    }

    // raw pairing is (1/h) antidiag (verified after construction); normalize
    Mat<Rat> g_raw(n, n);
    for (std::size_t i = 0; i < n; ++i) g_raw(i, n - 1 - i) = frac(1, h);
    ch.normalize_gauge(rs, t_raw, g_raw);
    ch.finalize_from_flats(t_raw);
    return ch;
}

// --------------------------------------------------------------------------
// gauge normalization shared by A and D:
//  * pairs (i, N+1-i): scale t_i so (v_i, v_{N+1-i}) = 1;
//  * a middle slot is matched to the square class realizable on the Cartan
//    side by the (-1)-eigenvector of the Coxeter element;
//  * kappa carries the global residue scale.
// --------------------------------------------------------------------------
inline void FrobeniusChart::normalize_gauge(const RootSystem& rs, std::vector<QPoly>& t_raw, const Mat<Rat>& g_raw) {
    std::size_t n = (std::size_t)N;
    std::vector<Rat> c(n, Rat(1));
    // locate a one-dimensional middle: i with i == N+1-i (1-based) and unique degree
    long mid = -1;
    for (long i = 1; i <= N; ++i)
        if (2 * i == N + 1) mid = i - 1;
    kappa = Rat(1);
    if (mid >= 0) {
        // pi_mid := (H|H) for the primitive rational (-1)-eigenvector of sigma
        WeylElement sigma = rs.identity_element();
        for (long i = 0; i < rs.N; ++i) sigma = rs.compose(sigma, rs.simple_reflection(i));
        IMat hs = sigma.hspace_matrix();
        Mat<Rat> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(hs[i][j]) + (i == j ? Rat(1) : Rat(0));
        auto ker = kernel(m);
        if (ker.size() != 1) throw std::runtime_error("middle eigenspace not one-dimensional");
        // clear denominators, make primitive
        Vec<Rat> H = ker[0];
        Int den = 1;
        for (auto& v : H) den = den * v.get_den() / gcd(Int(den), Int(v.get_den()));
        Int gc = 0;
        for (auto& v : H) {
            v *= den;
            gc = gcd(gc, v.get_num());
        }
        for (auto& v : H) v /= Rat(gc);
        Rat pi_mid = rs.pair_hspace(H, H);
        kappa = pi_mid / g_raw((std::size_t)mid, (std::size_t)mid);
    }
    for (long i = 1; 2 * i < N + 1; ++i) {
        // pair (i, N+1-i), scale the lower index; a vanishing cross entry means a
        // non-split middle block (D-even), which is left untouched
        Rat cross = g_raw((std::size_t)(i - 1), (std::size_t)(N - i));
        if (!is_zero(cross)) c[(std::size_t)(i - 1)] = kappa * cross;
    }
    // D-even double middle block handled by the caller (build_D)
    for (std::size_t i = 0; i < n; ++i)
        if (!(c[i] == Rat(1))) t_raw[i] = c[i] * t_raw[i];
}

inline void FrobeniusChart::finalize_from_flats(const std::vector<QPoly>& t_flat) {
    std::size_t n = (std::size_t)N;
    t_of_q = t_flat;
    std::vector<long> degs = degrees;
    q_of_t = invert_graded_map(t_flat, degs);

    // v_a(X;t) = sum_k dq_k/dt_a * mono_k as x-polynomials with t-coefficients:
    // build multiplication in the X-quotient with symbolic t via univariate
    // division (A) or via interpolation (D handles separately before calling).
    // Here: generic path valid when nvars_x == 1.
    if (nvars_x != 1) return;  // D fills C itself

    long hh = h;
    // F_X = h X^{N} + sum_j (h-j) q_j(t) X^{h-j-1}
    // representation: dense X-coefficient vectors with QPoly(t) entries
    std::size_t nn = n;
    auto q = q_of_t;
    std::vector<QPoly> FX((std::size_t)N + 1, QPoly(nn));
    FX[(std::size_t)N] = QPoly(nn, Rat(hh));
    for (long j = 2; j < hh; ++j) FX[(std::size_t)(hh - j - 1)] = Rat(hh - j) * q[(std::size_t)(j - 2)];
    // v_a: X-coeff vectors
    std::vector<std::vector<QPoly>> v(nn, std::vector<QPoly>((std::size_t)N, QPoly(nn)));
    for (std::size_t a = 0; a < nn; ++a)
        for (long j = 2; j <= hh; ++j) v[a][(std::size_t)(hh - j)] = q[(std::size_t)(j - 2)].derivative(a);
    auto mod_FX = [&](std::vector<QPoly> p) {
        while ((long)p.size() > N) {
            std::size_t d = p.size() - 1;
            QPoly lead = p.back();
            p.pop_back();
            if (lead.zero()) continue;
            // subtract lead/h * X^{d-N} * FX (FX lead coeff = h)
            for (std::size_t i = 0; i + 1 < (std::size_t)N + 1; ++i) {
                if (FX[i].zero()) continue;
                p[d - (std::size_t)N + i] = p[d - (std::size_t)N + i] - frac(1, hh) * (lead * FX[i]);
            }
        }
        p.resize((std::size_t)N, QPoly(nn));
        return p;
    };
    // triangular conversion X-coeffs -> v-basis coefficients
    // J[j][a] = dq_{j+2}/dt_a; v_a has X^{h-j} coefficient J[j-2][a]
    auto to_vbasis = [&](std::vector<QPoly> p) {
        // p: X-coeff vector of length N (degrees 0..N-1); X^{h-j} <-> index h-j
        std::vector<QPoly> w(nn, QPoly(nn));
        // solve sum_a w_a v_a = p, triangular in j (j = 2: highest X-degree N-1)
        for (long j = 2; j <= hh; ++j) {
            std::size_t xi = (std::size_t)(hh - j);
            QPoly cur = p[xi];
            for (std::size_t a = 0; a < nn; ++a) {
                if (w[a].zero()) continue;
                cur = cur - w[a] * v[a][xi];
            }
            // the diagonal entry dq_j/dt_{j-1} is a nonzero constant
            std::size_t a = (std::size_t)(j - 2);
            QPoly diag = q[a].derivative(a);
            Expo zero(nn, 0);
            auto it = diag.t.find(zero);
            Rat dct = (it == diag.t.end()) ? Rat(0) : it->second;
            QPoly rest = diag - QPoly(nn, dct);
            if (is_zero(dct)) throw std::runtime_error("flat-to-q Jacobian not triangular-constant");
            if (rest.zero()) {
                w[a] = w[a] + (Rat(1) / dct) * cur;
            } else {
                // divide cur by (dct + rest): series inversion in weighted degree
                // (rest is nilpotent in bounded degree)
                QPoly acc = cur, out(nn);
                for (int guard = 0; guard < 64 && !acc.zero(); ++guard) {
                    QPoly piece = (Rat(1) / dct) * acc;
                    // keep only the leading piece: subtract piece*(dct+rest)
                    out = out + piece;
                    acc = acc - (dct * piece + rest * piece);
                }
                if (!acc.zero()) throw std::runtime_error("v-basis conversion did not terminate");
                w[a] = w[a] + out;
            }
            // cancel the X^{h-j} coefficient contribution for lower rows:
            // handled by loop structure (w[a] now fixed)
        }
        return w;
    };

    // structure constants and pairing
    C.assign(nn, std::vector<std::vector<QPoly>>(nn, std::vector<QPoly>(nn, QPoly(nn))));
    pairing = Mat<Rat>(nn, nn);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = a; b < nn; ++b) {
            // product as X-polynomial
            std::vector<QPoly> prod(2 * (std::size_t)N - 1, QPoly(nn));
            for (std::size_t i = 0; i < (std::size_t)N; ++i) {
                if (v[a][i].zero()) continue;
                for (std::size_t j = 0; j < (std::size_t)N; ++j) {
                    if (v[b][j].zero()) continue;
                    prod[i + j] = prod[i + j] + v[a][i] * v[b][j];
                }
            }
            auto red = mod_FX(prod);
            // pairing: kappa/h * [X^{N-1}] coefficient
            QPoly pr = (kappa / Rat(hh)) * red[(std::size_t)(N - 1)];
            if (!pr.zero() && pr.total_degree() != 0) throw std::runtime_error("pairing not constant in flat coordinates");
            Expo zero(nn, 0);
            Rat pv = pr.zero() ? Rat(0) : pr.t.at(zero);
            pairing(a, b) = pv;
            pairing(b, a) = pv;
            auto w = to_vbasis(red);
            for (std::size_t cix = 0; cix < nn; ++cix) {
                C[a][cix][b] = w[cix];
                C[b][cix][a] = w[cix];
            }
        }
    pairing_inv = inverse(pairing);
    for (long a = 0; a < N; ++a) theta.push_back(frac(degrees[(std::size_t)a] - 1, h) - frac(1, 2));
}

inline FrobeniusChart FrobeniusChart::build(char type_letter, long rank) {
    RootSystem rs(type_letter, rank);
    if (type_letter == 'A') return build_A(rs);
    if (type_letter == 'D') return build_D(rs);
    throw UnsupportedType("E-type Frobenius backend not built");
}

}  // namespace adetr

#include "frobenius_d.hpp"
