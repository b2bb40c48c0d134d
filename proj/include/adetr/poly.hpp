// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over a field, plus reduced rational functions.
#pragma once

#include <array>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace adetr {

template <class F>
struct UPoly {
    std::vector<F> c;  // low-to-high, normalized (no trailing zeros)

    UPoly() = default;
    UPoly(const F& v) {
        if (!is_zero(v)) c = {v};
    }
    UPoly(long v) : UPoly(F(v)) {}
    explicit UPoly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }

    static UPoly monomial(const F& v, std::size_t deg) {
        UPoly p;
        if (is_zero(v)) return p;
        p.c.assign(deg + 1, F(0));
        p.c[deg] = v;
        return p;
    }
    static UPoly var() { return monomial(F(1), 1); }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    long degree() const { return (long)c.size() - 1; }  // -1 for zero poly
    const F& lead() const { return c.back(); }
    F coeff(std::size_t i) const { return i < c.size() ? c[i] : F(0); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F(0));
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.zero() || b.zero()) return UPoly();
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend UPoly operator*(const F& s, const UPoly& a) {
        UPoly r = a;
        for (auto& v : r.c) v = s * v;
        r.trim();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

    template <class T>
    T eval(const T& x) const {
        T r(0);
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + T(c[i]);
        return r;
    }
    F operator()(const F& x) const { return eval<F>(x); }

    UPoly derivative() const {
        UPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = F((long)i) * c[i];
        r.trim();
        return r;
    }

    /// p(x + a)
    UPoly shifted(const F& a) const {
        UPoly r, pw(F(1));
        UPoly lin;
        lin.c = {a, F(1)};
        for (std::size_t i = 0; i < c.size(); ++i) {
            r = r + coeff(i) * pw;
            pw = pw * lin;
        }
        return r;
    }

    /// composition p(q(x))
    UPoly compose(const UPoly& q) const {
        UPoly r;
        for (std::size_t i = c.size(); i-- > 0;) r = r * q + UPoly(c[i]);
        return r;
    }
};

template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
    if (b.zero()) throw std::runtime_error("divmod: division by zero polynomial");
    UPoly<F> q, r = a;
    if (r.degree() < b.degree()) return {q, r};
    q.c.assign((std::size_t)(r.degree() - b.degree() + 1), F(0));
    F invlead = F(1) / b.lead();
    while (!r.zero() && r.degree() >= b.degree()) {
        std::size_t d = (std::size_t)(r.degree() - b.degree());
        F f = r.lead() * invlead;
        q.c[d] = q.c[d] + f;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[d + i] = r.c[d + i] - f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.zero()) a = (F(1) / a.lead()) * a;  // monic
    return a;
}

/// extended euclid: g = u*a + v*b, g monic
template <class F>
void ext_gcd(const UPoly<F>& a, const UPoly<F>& b, UPoly<F>& g, UPoly<F>& u, UPoly<F>& v) {
    UPoly<F> r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
    while (!r1.zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = r1;
        r1 = r2;
        UPoly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (!r0.zero()) {
        F inv = F(1) / r0.lead();
        r0 = inv * r0;
        s0 = inv * s0;
        t0 = inv * t0;
    }
    g = r0;
    u = s0;
    v = t0;
}

/// Resultant via the Euclidean remainder sequence (field coefficients).
template <class F>
F resultant(UPoly<F> a, UPoly<F> b) {
    if (a.zero() || b.zero()) return F(0);
    F r(1);
    while (true) {
        if (b.degree() == 0) {
            F lb = b.lead(), p = F(1);
            for (long i = 0; i < a.degree(); ++i) p = p * lb;
            return r * p;
        }
        auto rem = divmod(a, b).second;
        if (rem.zero()) return F(0);
        long da = a.degree(), db = b.degree(), dr = rem.degree();
        // res(a,b) = (-1)^{da db} lead(b)^{da-dr} res(b,rem)
        if ((da & 1) && (db & 1)) r = -r;
        F lb = b.lead(), p = F(1);
        for (long i = 0; i < da - dr; ++i) p = p * lb;
        r = r * p;
        a = std::move(b);
        b = std::move(rem);
    }
}

// ---------------------------------------------------------------------------
// Reduced rational function num/den, den monic. Forms a field.
// ---------------------------------------------------------------------------
template <class F>
struct RatFun {
    UPoly<F> num, den;

    RatFun() : den(F(1)) {}
    RatFun(const F& v) : num(v), den(F(1)) {}
    RatFun(long v) : num(F(v)), den(F(1)) {}
    RatFun(UPoly<F> n, UPoly<F> d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    RatFun(const UPoly<F>& n) : num(n), den(F(1)) {}

    static RatFun var() { return RatFun(UPoly<F>::var()); }

    void reduce() {
        if (den.zero()) throw std::runtime_error("RatFun: zero denominator");
        if (num.zero()) {
            den = UPoly<F>(F(1));
            return;
        }
        auto g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        F inv = F(1) / den.lead();
        num = inv * num;
        den = inv * den;
    }
    bool zero() const { return num.zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) { return RatFun(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return RatFun(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num * b.num, a.den * b.den); }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.zero()) throw std::runtime_error("RatFun: division by zero");
        return RatFun(a.num * b.den, a.den * b.num);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num = -r.num;
        return r;
    }
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num == b.num && a.den == b.den; }

    RatFun derivative() const { return RatFun(num.derivative() * den - num * den.derivative(), den * den); }

    /// composition with another rational function (this ∘ g)
    RatFun compose(const RatFun& g) const {
        RatFun r(F(0)), pw(F(1));
        long dn = num.degree(), dd = den.degree();
        long d = std::max(dn, dd);
        // write num/den in homogeneous form to avoid g-denominator blowup
        std::vector<RatFun> gpow((std::size_t)d + 1);
        gpow[0] = RatFun(F(1));
        for (long i = 1; i <= d; ++i) gpow[(std::size_t)i] = gpow[(std::size_t)i - 1] * g;
        RatFun n(F(0)), dd2(F(0));
        for (long i = 0; i <= dn; ++i) n = n + RatFun(num.coeff((std::size_t)i)) * gpow[(std::size_t)i];
        for (long i = 0; i <= dd; ++i) dd2 = dd2 + RatFun(den.coeff((std::size_t)i)) * gpow[(std::size_t)i];
        return n / dd2;
    }

    template <class T>
    T eval(const T& x) const {
        return num.template eval<T>(x) / den.template eval<T>(x);
    }
    F operator()(const F& x) const { return num(x) / den(x); }
};

template <class F>
bool is_zero(const RatFun<F>& r) {
    return r.zero();
}

/// Möbius map (a z + b)/(c z + d), ad - bc != 0.
template <class F>
struct Mobius {
    F a{1}, b{0}, c{0}, d{1};

    static Mobius identity() { return {}; }
    Mobius compose(const Mobius& o) const {  // this ∘ o
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mobius inverse() const { return {d, -b, -c, a}; }
    F operator()(const F& z) const { return (a * z + b) / (c * z + d); }
    RatFun<F> as_ratfun() const {
        UPoly<F> n, m;
        n.c = {b, a};
        n.trim();
        m.c = {d, c};
        m.trim();
        return RatFun<F>(n, m);
    }
    /// normalized representative for equality testing
    void normalize() {
        const F* lead = nullptr;
        if (!is_zero(a))
            lead = &a;
        else if (!is_zero(b))
            lead = &b;
        else if (!is_zero(c))
            lead = &c;
        else
            lead = &d;
        F inv = F(1) / *lead;
        a = inv * a;
        b = inv * b;
        c = inv * c;
        d = inv * d;
    }
    friend bool operator==(Mobius x, Mobius y) {
        x.normalize();
        y.normalize();
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/// fit the unique Möbius map sending z_i -> w_i for three distinct points
template <class F>
Mobius<F> mobius_through(const std::array<F, 3>& z, const std::array<F, 3>& w) {
    // cross-ratio construction: M = T_w^{-1} ∘ T_z with T_p(x)=( (x-p0)(p1-p2) )/( (x-p2)(p1-p0) )
    auto T = [](const std::array<F, 3>& p) {
        Mobius<F> m;
        m.a = p[1] - p[2];
        m.b = -p[0] * (p[1] - p[2]);
        m.c = p[1] - p[0];
        m.d = -p[2] * (p[1] - p[0]);
        return m;
    };
    return T(w).inverse().compose(T(z));
}

}  // namespace adetr
