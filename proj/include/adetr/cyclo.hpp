// SPDX-License-Identifier: Apache-2.0
//
// The cyclotomic field Q(eta), eta a primitive h-th root of unity, as
// Q[x]/Phi_h(x). Elements carry a shared context; arithmetic is exact.
// Square roots of rationals are constructed through Gauss sums when the
// field contains them.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "poly.hpp"

namespace adetr {

struct CycloCtx {
    long h;                           // order of eta
    UPoly<Rat> phi;                   // cyclotomic polynomial Phi_h
    std::size_t deg;                  // = phi.degree()
    std::vector<std::vector<Rat>> red;  // x^k mod phi for k < 2*deg

    explicit CycloCtx(long order) : h(order) {
        phi = cyclotomic(order);
        deg = (std::size_t)phi.degree();
        std::size_t upto = std::max(2 * deg, (std::size_t)h + 1);  // eta powers reach h-1
        red.resize(upto);
        for (std::size_t k = 0; k < upto; ++k) {
            auto r = divmod(UPoly<Rat>::monomial(Rat(1), k), phi).second;
            red[k].assign(deg, Rat(0));
            for (std::size_t i = 0; i < r.c.size(); ++i) red[k][i] = r.c[i];
        }
    }

    static UPoly<Rat> cyclotomic(long n) {
        // x^n - 1 divided by all Phi_d, d | n, d < n
        std::vector<Rat> xn((std::size_t)n + 1, Rat(0));
        xn[0] = Rat(-1);
        xn[(std::size_t)n] = Rat(1);
        UPoly<Rat> p{std::vector<Rat>(xn)};
        for (long d = 1; d < n; ++d)
            if (n % d == 0) p = divmod(p, cyclotomic(d)).first;
        return p;
    }
};

using CycloCtxPtr = std::shared_ptr<const CycloCtx>;

inline CycloCtxPtr make_cyclo_ctx(long h) { return std::make_shared<CycloCtx>(h); }

class Cyc {
  public:
    CycloCtxPtr ctx;          // null for pure rationals (acts as any field's Q)
    std::vector<Rat> c;       // coefficients in 1, eta, ..., eta^{deg-1}

    Cyc() = default;
    Cyc(long v) { set_rat(Rat(v)); }
    Cyc(const Rat& v) { set_rat(v); }
    Cyc(CycloCtxPtr context, std::vector<Rat> coeffs) : ctx(std::move(context)), c(std::move(coeffs)) {
        c.resize(ctx->deg, Rat(0));
        normalize();
    }

    static Cyc eta(const CycloCtxPtr& ctx, long power = 1) {
        Cyc r;
        r.ctx = ctx;
        r.c.assign(ctx->deg, Rat(0));
        long k = ((power % ctx->h) + ctx->h) % ctx->h;
        if ((std::size_t)k < ctx->deg)
            r.c[(std::size_t)k] = 1;
        else
            for (std::size_t i = 0; i < ctx->deg; ++i) r.c[i] = ctx->red[(std::size_t)k][i];
        r.normalize();
        return r;
    }

    bool rational() const { return !ctx; }
    Rat rat_value() const {
        if (rational()) return c.empty() ? Rat(0) : c[0];
        for (std::size_t i = 1; i < c.size(); ++i)
            if (sgn(c[i]) != 0) throw std::runtime_error("Cyc: not rational");
        return c.empty() ? Rat(0) : c[0];
    }
    bool zero() const {
        for (auto& v : c)
            if (sgn(v) != 0) return false;
        return true;
    }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        auto [x, y] = align(a, b);
        for (std::size_t i = 0; i < y.c.size(); ++i) x.c[i] += y.c[i];
        return x;
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) {
        auto [x, y] = align(a, b);
        for (std::size_t i = 0; i < y.c.size(); ++i) x.c[i] -= y.c[i];
        return x;
    }
    Cyc operator-() const {
        Cyc r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        auto [x, y] = align(a, b);
        if (!x.ctx) {
            Cyc r;
            r.set_rat((x.c.empty() ? Rat(0) : x.c[0]) * (y.c.empty() ? Rat(0) : y.c[0]));
            return r;
        }
        std::size_t d = x.ctx->deg;
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(x.c[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (sgn(y.c[j]) != 0) prod[i + j] += x.c[i] * y.c[j];
        }
        Cyc r;
        r.ctx = x.ctx;
        r.c.assign(d, Rat(0));
        for (std::size_t k = 0; k < prod.size(); ++k) {
            if (sgn(prod[k]) == 0) continue;
            if (k < d)
                r.c[k] += prod[k];
            else
                for (std::size_t i = 0; i < d; ++i) r.c[i] += prod[k] * x.ctx->red[k][i];
        }
        return r;
    }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }
    friend bool operator==(const Cyc& a, const Cyc& b) { return (a - b).zero(); }

    Cyc inv() const {
        if (zero()) throw std::runtime_error("Cyc: division by zero");
        if (rational()) return Cyc(Rat(1) / c[0]);
        UPoly<Rat> p{std::vector<Rat>(c)}, g, u, v;
        ext_gcd(p, ctx->phi, g, u, v);
        if (g.degree() != 0) throw std::runtime_error("Cyc: non-invertible element");
        Cyc r;
        r.ctx = ctx;
        r.c.assign(ctx->deg, Rat(0));
        for (std::size_t i = 0; i < u.c.size() && i < ctx->deg; ++i) r.c[i] = u.c[i];
        return r;
    }

    CNum embed() const {
        if (rational()) return CNum(c.empty() ? Rat(0) : c[0]);
        CNum z, e = unit_root(1, ctx->h), pw(1L);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (sgn(c[i]) != 0) z += CNum(c[i]) * pw;
            pw *= e;
        }
        return z;
    }

    std::string str() const {
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < (rational() ? std::size_t(1) : c.size()); ++i) {
            Rat v = i < c.size() ? c[i] : Rat(0);
            if (sgn(v) == 0) continue;
            if (!first) s += " + ";
            s += v.get_str();
            if (i >= 1) s += "*e" + std::to_string(i > 1 ? i : 1) + (i > 1 ? "" : "");
            first = false;
        }
        return first ? "0" : s;
    }

  private:
    void set_rat(const Rat& v) {
        ctx = nullptr;
        c.assign(1, v);
    }
    void normalize() {}
    static std::pair<Cyc, Cyc> align(const Cyc& a, const Cyc& b) {
        Cyc x = a, y = b;
        if (!x.ctx && y.ctx) {
            Rat v = x.c.empty() ? Rat(0) : x.c[0];
            x.ctx = y.ctx;
            x.c.assign(y.ctx->deg, Rat(0));
            x.c[0] = v;
        } else if (x.ctx && !y.ctx) {
            Rat v = y.c.empty() ? Rat(0) : y.c[0];
            y.ctx = x.ctx;
            y.c.assign(x.ctx->deg, Rat(0));
            y.c[0] = v;
        } else if (x.ctx && y.ctx && x.ctx->h != y.ctx->h) {
            throw std::runtime_error("Cyc: mixed cyclotomic orders");
        } else if (!x.ctx && !y.ctx) {
            x.c.resize(1, Rat(0));
            y.c.resize(1, Rat(0));
        }
        return {x, y};
    }
};

inline bool is_zero(const Cyc& v) { return v.zero(); }

/// sqrt of a rational inside Q(eta_h), via Gauss sums; throws if absent.
/// Handles v = s * 2^a * p1 * p2 * ... with odd primes p_i | h, using
/// g_p^2 = (-1)^{(p-1)/2} p, sqrt(2) in Q(zeta_8), sqrt(-1) = zeta_4.
inline Cyc cyclo_sqrt_rational(const CycloCtxPtr& ctx, const Rat& v) {
    if (sgn(v) == 0) return Cyc(Rat(0));
    long h = ctx->h;
    Int sf = squarefree_part(v);
    // v = sf * r^2 with r rational
    Rat r2 = v / Rat(sf);
    Rat r;  // sqrt(r2), rational by construction
    {
        Int num = r2.get_num(), den = r2.get_den(), sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        if (sn * sn != num || sd * sd != den) throw std::runtime_error("cyclo_sqrt: internal square extraction");
        r = frac(sn, sd);
    }
    bool neg = sgn(sf) < 0;
    Int m = abs(sf);
    Cyc root(r);
    auto zeta = [&](long n) {  // zeta_n inside Q(eta_h) if n | h
        if (h % n != 0) throw std::runtime_error("cyclo_sqrt: sqrt not in field");
        return Cyc::eta(ctx, h / n);
    };
    // factor out 2
    if (mpz_divisible_ui_p(m.get_mpz_t(), 2)) {
        m /= 2;
        // sqrt(2) = zeta_8 + zeta_8^{-1}
        Cyc z8 = zeta(8);
        root = root * (z8 + z8.inv());
    }
    // odd primes
    for (Int p = 3; m > 1; p += 2) {
        if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
        m /= p;
        long pl = (long)p.get_si();
        (void)zeta(pl);  // field membership check
        Cyc g(Rat(0));   // Gauss sum
        for (long a = 1; a < pl; ++a) {
            long ls = 1;  // Legendre symbol a^{(p-1)/2} mod p
            {
                long e = (pl - 1) / 2, base = a % pl, res = 1;
                while (e) {
                    if (e & 1) res = res * base % pl;
                    base = base * base % pl;
                    e >>= 1;
                }
                ls = (res == 1) ? 1 : -1;
            }
            Cyc zpa = Cyc::eta(ctx, (h / pl) * a);
            g = (ls > 0) ? g + zpa : g - zpa;
        }
        root = root * g;
        if (pl % 4 == 3) neg = !neg;  // g^2 = -p for p = 3 mod 4
    }
    if (neg) root = root * zeta(4);
    // verify
    Cyc check = root * root;
    if (!(check == Cyc(v))) throw std::runtime_error("cyclo_sqrt: verification failed (sqrt not in field?)");
    return root;
}

}  // namespace adetr
