// SPDX-License-Identifier: Apache-2.0
//
// Exact rationals (GMP) and arbitrary-precision complex floats (MPFR via
// Boost.Multiprecision). Everything downstream is built on these two scalar
// towers: Rat/Int for algebra, hpf/CNum for analysis.
#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

/// ADL hook: mpq_class lives in the global namespace.
inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }

namespace adetr {

namespace mp = boost::multiprecision;

using Int = mpz_class;
using Rat = mpq_class;

/// Arbitrary-precision real, precision set at runtime (decimal digits).
using hpf = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline void set_working_digits(unsigned digits) {
    hpf::default_precision(digits);
}
inline unsigned working_digits() { return hpf::default_precision(); }

inline hpf to_hpf(const Rat& q) {
    hpf x;
    mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return x;
}
inline hpf to_hpf(const Int& z) {
    hpf x;
    mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return x;
}
inline hpf to_hpf(long n) { return hpf(n); }

inline hpf hpf_pi() {
    hpf x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

/// canonicalized rational a/b (mpq_class(a,b) alone does NOT canonicalize)
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat frac(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), (e > 0 ? b : Rat(1) / b).get_num().get_mpz_t(), (unsigned long)(e > 0 ? e : -e));
    mpz_pow_ui(r.get_den().get_mpz_t(), (e > 0 ? b : Rat(1) / b).get_den().get_mpz_t(), (unsigned long)(e > 0 ? e : -e));
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Signed squarefree part: q = sf * (square), sf a squarefree integer (sign kept).
/// Used to compare square classes of rationals when fixing pairing gauges.
inline Int squarefree_part(const Rat& q) {
    if (sgn(q) == 0) return 0;
    Int n = q.get_num() * q.get_den();  // same square class as q
    Int sf = (sgn(n) < 0) ? Int(-1) : Int(1);
    n = abs(n);
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e & 1u) sf *= p;
    }
    return sf * n;  // leftover n is prime (or 1)
}

// ---------------------------------------------------------------------------
// Complex arithmetic over hpf. std::complex is not specified for user types,
// so a small dedicated type is used. Principal branches throughout, cut along
// the negative real axis.
// ---------------------------------------------------------------------------
struct CNum {
    hpf re, im;

    CNum() : re(0), im(0) {}
    CNum(long n) : re(n), im(0) {}
    CNum(const hpf& r) : re(r), im(0) {}
    CNum(const hpf& r, const hpf& i) : re(r), im(i) {}
    CNum(const Rat& q) : re(to_hpf(q)), im(0) {}

    CNum operator-() const { return {-re, -im}; }
    CNum& operator+=(const CNum& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CNum& operator-=(const CNum& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CNum& operator*=(const CNum& o) {
        hpf r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    CNum& operator/=(const CNum& o) {
        hpf d = o.re * o.re + o.im * o.im;
        hpf r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }
    friend CNum operator+(CNum a, const CNum& b) { return a += b; }
    friend CNum operator-(CNum a, const CNum& b) { return a -= b; }
    friend CNum operator*(CNum a, const CNum& b) { return a *= b; }
    friend CNum operator/(CNum a, const CNum& b) { return a /= b; }
    friend bool operator==(const CNum& a, const CNum& b) { return a.re == b.re && a.im == b.im; }
};

inline hpf abs2(const CNum& z) { return z.re * z.re + z.im * z.im; }
inline hpf abs(const CNum& z) { return sqrt(abs2(z)); }
inline CNum conj(const CNum& z) { return {z.re, -z.im}; }
inline hpf arg(const CNum& z) { return atan2(z.im, z.re); }

inline CNum sqrt(const CNum& z) {
    hpf r = abs(z);
    if (r == 0) return CNum();
    hpf u = sqrt((r + z.re) / 2);
    if (u == 0) return {hpf(0), sqrt(r)};  // purely negative real
    hpf v = z.im / (2 * u);
    return {u, v};
}

inline CNum exp(const CNum& z) {
    hpf m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline CNum log(const CNum& z) { return {log(abs(z)), arg(z)}; }

inline CNum pow(const CNum& z, const hpf& e) {
    if (abs2(z) == 0) return CNum();
    return exp(CNum(e) * log(z));
}
inline CNum pow(const CNum& z, const Rat& e) { return pow(z, to_hpf(e)); }
inline CNum pow(const CNum& z, long e) {
    CNum r(1L), b = z;
    unsigned long n = (unsigned long)(e < 0 ? -e : e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return e < 0 ? CNum(1L) / r : r;
}

inline CNum to_cnum(const Rat& q) { return CNum(q); }

/// e^{2 pi i k/n}
inline CNum unit_root(long k, long n) {
    hpf t = 2 * hpf_pi() * hpf(k) / hpf(n);
    return {cos(t), sin(t)};
}

inline hpf tol_eps(int guard_digits = 10) {
    return pow(hpf(10), -(int)working_digits() + guard_digits);
}

// ---------------------------------------------------------------------------
// Simultaneous (Aberth) root refinement for dense complex polynomials.
// Coefficients low-to-high; leading coefficient nonzero. Deterministic.
// ---------------------------------------------------------------------------
inline std::vector<CNum> poly_roots(const std::vector<CNum>& coeff) {
    int n = (int)coeff.size() - 1;
    while (n > 0 && abs2(coeff[(size_t)n]) == 0) --n;
    if (n <= 0) return {};
    std::vector<CNum> c(coeff.begin(), coeff.begin() + n + 1);
    // radius bound (Cauchy)
    hpf lead = abs(c[(size_t)n]), R(0);
    for (int i = 0; i < n; ++i) {
        hpf b = abs(c[(size_t)i]) / lead;
        if (b > R) R = b;
    }
    R += 1;
    std::vector<CNum> z((size_t)n);
    for (int i = 0; i < n; ++i)  // non-symmetric start angles avoid stalling on real polys
        z[(size_t)i] = CNum(R) * unit_root(4 * i + 1, 4 * n + 3);
    auto eval = [&](const CNum& x, CNum& p, CNum& dp) {
        p = c[(size_t)n];
        dp = CNum();
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + c[(size_t)i];
        }
    };
    hpf eps = tol_eps(8);
    for (int it = 0; it < 500; ++it) {
        hpf worst(0);
        for (int i = 0; i < n; ++i) {
            CNum p, dp;
            eval(z[(size_t)i], p, dp);
            CNum newton = (abs2(dp) == 0) ? CNum() : p / dp;
            CNum s;
            for (int j = 0; j < n; ++j)
                if (j != i) s += CNum(1L) / (z[(size_t)i] - z[(size_t)j]);
            CNum denom = CNum(1L) - newton * s;
            CNum step = (abs2(denom) == 0) ? newton : newton / denom;
            z[(size_t)i] -= step;
            hpf d = abs(step);
            if (d > worst) worst = d;
        }
        if (worst < eps) break;
    }
    return z;
}

}  // namespace adetr
