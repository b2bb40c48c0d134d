// SPDX-License-Identifier: Apache-2.0
//
// Working "at a symbolic root": the quotient ring A = F[u]/(q) for squarefree
// monic q, with traces down to F. Sums of residues over all roots of q become
// exact trace computations, which is how the recursion extracts residues at
// ramification points without leaving the base field.
#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "poly.hpp"

namespace adetr {

template <class F>
struct AlgCtx {
    UPoly<F> q;                 // monic, squarefree
    std::vector<F> power_sums;  // p_0 .. p_{2 deg} of the roots (Newton)

    explicit AlgCtx(UPoly<F> mod) : q(std::move(mod)) {
        if (q.zero() || !(q.lead() == F(1))) throw std::runtime_error("AlgCtx: modulus must be monic");
        long d = q.degree();
        long want = 2 * d + 2;
        power_sums.assign((std::size_t)want + 1, F(0));
        power_sums[0] = F((long)d);
        // Newton's identities: p_k = -k a_{d-k} - sum_{i=1}^{k-1} a_{d-i} p_{k-i}, a_j = coeff
        for (long k = 1; k <= want; ++k) {
            F s = F(0);
            if (k <= d) s = s + F(k) * q.coeff((std::size_t)(d - k));
            for (long i = 1; i < k && i <= d; ++i) s = s + q.coeff((std::size_t)(d - i)) * power_sums[(std::size_t)(k - i)];
            power_sums[(std::size_t)k] = -s;
        }
    }
};

template <class F>
using AlgCtxPtr = std::shared_ptr<const AlgCtx<F>>;

/// element of F[u]/(q)
template <class F>
struct AlgNum {
    AlgCtxPtr<F> ctx;  // null => plain base-field element stored in p
    UPoly<F> p;

    AlgNum() = default;
    AlgNum(long v) : p(F(v)) {}
    AlgNum(const F& v) : p(v) {}
    AlgNum(AlgCtxPtr<F> c, UPoly<F> val) : ctx(std::move(c)), p(std::move(val)) { reduce(); }

    static AlgNum root(const AlgCtxPtr<F>& c) { return AlgNum(c, UPoly<F>::var()); }

    void reduce() {
        if (ctx && p.degree() >= ctx->q.degree()) p = divmod(p, ctx->q).second;
    }
    bool zero() const { return p.zero(); }

    static void align(AlgNum& a, AlgNum& b) {
        if (!a.ctx && b.ctx) a.ctx = b.ctx;
        if (a.ctx && !b.ctx) b.ctx = a.ctx;
    }
    static AlgNum make(AlgCtxPtr<F> c, UPoly<F> val) {
        AlgNum r;
        r.ctx = std::move(c);
        r.p = std::move(val);
        r.reduce();
        return r;
    }
    friend AlgNum operator+(AlgNum a, AlgNum b) {
        align(a, b);
        return make(a.ctx, a.p + b.p);
    }
    friend AlgNum operator-(AlgNum a, AlgNum b) {
        align(a, b);
        return make(a.ctx, a.p - b.p);
    }
    friend AlgNum operator*(AlgNum a, AlgNum b) {
        align(a, b);
        return make(a.ctx, a.p * b.p);
    }
    friend AlgNum operator/(AlgNum a, AlgNum b) { return a * b.inv(); }
    AlgNum operator-() const {
        AlgNum r = *this;
        r.p = -r.p;
        return r;
    }
    friend bool operator==(const AlgNum& a, const AlgNum& b) { return (a - b).zero(); }

    AlgNum inv() const {
        if (p.zero()) throw std::runtime_error("AlgNum: division by zero");
        if (!ctx) {
            if (p.degree() != 0) throw std::runtime_error("AlgNum: loose polynomial");
            return AlgNum(F(1) / p.coeff(0));
        }
        UPoly<F> g, s, t;
        ext_gcd(p, ctx->q, g, s, t);
        if (g.degree() != 0) throw std::runtime_error("AlgNum: zero divisor (modulus shares a root)");
        return AlgNum(ctx, s);
    }

    /// trace over all roots of q: sum_i value(u_i)
    F trace() const {
        if (!ctx) {
            // treat as a single "root" context-free value
            return p.coeff(0);
        }
        F s(0);
        for (std::size_t i = 0; i < p.c.size(); ++i)
            if (!is_zero(p.c[i])) s = s + p.c[i] * ctx->power_sums[i];
        return s;
    }
};

template <class F>
bool is_zero(const AlgNum<F>& v) {
    return v.zero();
}

// ---------------------------------------------------------------------------
// Truncated Laurent series with coefficients in an arbitrary ring R
// (needs R(0), R(1), +, -, *, is_zero; division only via explicit inverse).
// ---------------------------------------------------------------------------
template <class R>
struct Laurent {
    long lo = 0;             // exponent of coeffs[0]
    std::vector<R> c;        // coefficients for lo, lo+1, ...

    Laurent() = default;
    Laurent(long low, std::vector<R> coeffs) : lo(low), c(std::move(coeffs)) {}
    static Laurent zero_to(long hi_inclusive, long low = 0) {
        Laurent s;
        s.lo = low;
        s.c.assign((std::size_t)(hi_inclusive - low + 1), R(0));
        return s;
    }

    long hi() const { return lo + (long)c.size() - 1; }
    R coeff(long k) const {
        if (k < lo || k > hi()) return R(0);
        return c[(std::size_t)(k - lo)];
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        long low = std::min(a.lo, b.lo), high = std::min(a.hi(), b.hi());
        // truncation order is the min of the two hi's when both nonempty
        if (a.c.empty()) return b;
        if (b.c.empty()) return a;
        Laurent r = zero_to(high, low);
        for (long k = low; k <= high; ++k) r.c[(std::size_t)(k - low)] = a.coeff(k) + b.coeff(k);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent nb = b;
        for (auto& v : nb.c) v = -v;
        return a + nb;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.c.empty() || b.c.empty()) return Laurent();
        long low = a.lo + b.lo;
        long high = std::min(a.hi() + b.lo, b.hi() + a.lo);
        Laurent r = zero_to(high, low);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                long k = a.lo + (long)i + b.lo + (long)j;
                if (k > high) break;
                r.c[(std::size_t)(k - low)] = r.c[(std::size_t)(k - low)] + a.c[i] * b.c[j];
            }
        }
        return r;
    }

    /// multiplicative inverse assuming the leading coefficient is invertible
    template <class InvFn>
    Laurent inverse(InvFn&& inv_leading, long order) const {
        // strip leading zeros to find the true valuation
        std::size_t k = 0;
        while (k < c.size() && is_zero(c[k])) ++k;
        if (k == c.size()) throw std::runtime_error("Laurent: inverting zero series");
        long val = lo + (long)k;
        R lead_inv = inv_leading(c[k]);
        Laurent r = zero_to(-val + order, -val);
        long L = order + 1;
        std::vector<R> t((std::size_t)L, R(0));
        for (long i = 0; i < L; ++i) {
            R v = (k + (std::size_t)i < c.size()) ? c[k + (std::size_t)i] : R(0);
            t[(std::size_t)i] = v * lead_inv;
        }
        std::vector<R> out((std::size_t)L, R(0));
        out[0] = R(1);
        for (long i = 1; i < L; ++i) {
            R s = R(0);
            for (long j = 1; j <= i; ++j) s = s + t[(std::size_t)j] * out[(std::size_t)(i - j)];
            out[(std::size_t)i] = -s;
        }
        for (long i = 0; i < L; ++i) r.c[(std::size_t)i] = out[(std::size_t)i] * lead_inv;
        return r;
    }
};

}  // namespace adetr
