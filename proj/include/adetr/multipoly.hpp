// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomials over a field, exponent vectors as map keys.
#pragma once

#include <cassert>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"

namespace adetr {

using Expo = std::vector<int>;

template <class F>
struct MPoly {
    std::size_t n = 0;                // number of variables
    std::map<Expo, F> t;              // exponent vector -> coefficient, no zeros

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : n(nvars) {}
    MPoly(std::size_t nvars, const F& v) : n(nvars) {
        if (!is_zero(v)) t[Expo(nvars, 0)] = v;
    }

    static MPoly constant(std::size_t nvars, const F& v) { return MPoly(nvars, v); }
    static MPoly variable(std::size_t nvars, std::size_t i, const F& coeff = F(1)) {
        MPoly p(nvars);
        Expo e(nvars, 0);
        e[i] = 1;
        if (!is_zero(coeff)) p.t[e] = coeff;
        return p;
    }
    static MPoly monomial(std::size_t nvars, const Expo& e, const F& coeff) {
        MPoly p(nvars);
        if (!is_zero(coeff)) p.t[e] = coeff;
        return p;
    }

    bool zero() const { return t.empty(); }
    long total_degree() const {
        long d = -1;
        for (auto& [e, v] : t) {
            long s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }
    /// weighted degree with rational weights; requires homogeneity if strict
    bool weighted_homogeneous(const std::vector<Rat>& w, Rat& deg_out) const {
        bool first = true;
        for (auto& [e, v] : t) {
            Rat s(0);
            for (std::size_t i = 0; i < n; ++i) s += Rat(e[i]) * w[i];
            if (first) {
                deg_out = s;
                first = false;
            } else if (s != deg_out)
                return false;
        }
        return true;
    }

    void add_term(const Expo& e, const F& v) {
        if (is_zero(v)) return;
        auto it = t.find(e);
        if (it == t.end())
            t.emplace(e, v);
        else {
            it->second = it->second + v;
            if (is_zero(it->second)) t.erase(it);
        }
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        assert(a.n == b.n);
        MPoly r = a;
        for (auto& [e, v] : b.t) r.add_term(e, v);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        assert(a.n == b.n);
        MPoly r = a;
        for (auto& [e, v] : b.t) r.add_term(e, -v);
        return r;
    }
    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, v] : r.t) v = -v;
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        assert(a.n == b.n);
        MPoly r(a.n);
        Expo e(a.n);
        for (auto& [ea, va] : a.t)
            for (auto& [eb, vb] : b.t) {
                for (std::size_t i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, va * vb);
            }
        return r;
    }
    friend MPoly operator*(const F& s, const MPoly& a) {
        MPoly r(a.n);
        if (is_zero(s)) return r;
        r = a;
        for (auto& [e, v] : r.t) v = s * v;
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n == b.n && a.t == b.t; }

    MPoly derivative(std::size_t i) const {
        MPoly r(n);
        for (auto& [e, v] : t) {
            if (e[i] == 0) continue;
            Expo e2 = e;
            e2[i] -= 1;
            r.add_term(e2, F((long)e[i]) * v);
        }
        return r;
    }

    /// substitute each variable by a polynomial (possibly in another ring size)
    MPoly substitute(const std::vector<MPoly>& repl) const {
        assert(repl.size() == n);
        std::size_t m = repl.empty() ? 0 : repl[0].n;
        MPoly r(m);
        // Horner-free: cache powers per variable lazily
        std::vector<std::vector<MPoly>> pows(n);
        for (std::size_t i = 0; i < n; ++i) pows[i].push_back(MPoly(m, F(1)));
        auto power = [&](std::size_t i, int k) -> const MPoly& {
            while ((int)pows[i].size() <= k) pows[i].push_back(pows[i].back() * repl[i]);
            return pows[i][(std::size_t)k];
        };
        for (auto& [e, v] : t) {
            MPoly term(m, v);
            for (std::size_t i = 0; i < n; ++i)
                if (e[i]) term = term * power(i, e[i]);
            r = r + term;
        }
        return r;
    }

    /// substitute variables by linear forms given by matrix M: x_i -> sum_j M(i,j) x_j
    MPoly substitute_linear(const Mat<F>& M) const {
        std::vector<MPoly> repl(n);
        for (std::size_t i = 0; i < n; ++i) {
            MPoly li(M.cols);
            Expo e(M.cols, 0);
            for (std::size_t j = 0; j < M.cols; ++j) {
                if (is_zero(M(i, j))) continue;
                e[j] = 1;
                li.add_term(e, M(i, j));
                e[j] = 0;
            }
            repl[i] = li;
        }
        return substitute(repl);
    }

    template <class T>
    T eval(const std::vector<T>& x) const {
        T r(0);
        for (auto& [e, v] : t) {
            T term(v);
            for (std::size_t i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * x[i];
            r = r + term;
        }
        return r;
    }
    F operator()(const std::vector<F>& x) const { return eval<F>(x); }

    /// collect as dense univariate polynomial in variable i with MPoly coefficients
    std::vector<MPoly> collect(std::size_t i) const {
        long d = 0;
        for (auto& [e, v] : t) d = std::max(d, (long)e[i]);
        std::vector<MPoly> out((std::size_t)d + 1, MPoly(n));
        for (auto& [e, v] : t) {
            Expo e2 = e;
            int k = e2[i];
            e2[i] = 0;
            out[(std::size_t)k].add_term(e2, v);
        }
        return out;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (t.empty()) return "0";
        std::string s;
        for (auto& [e, v] : t) {
            if (!s.empty()) s += " + ";
            s += coeff_str(v);
            for (std::size_t i = 0; i < n; ++i)
                if (e[i]) {
                    s += "*" + names[i];
                    if (e[i] > 1) s += "^" + std::to_string(e[i]);
                }
        }
        return s;
    }

  private:
    static std::string coeff_str(const Rat& v) { return v.get_str(); }
    template <class G>
    static std::string coeff_str(const G& v) {
        return "(.)";
    }
};

/// determinant of a square MPoly matrix by column-subset dynamic programming
template <class F>
MPoly<F> mpoly_det(const std::vector<std::vector<MPoly<F>>>& m) {
    std::size_t n = m.size();
    if (n == 0) return MPoly<F>(0, F(1));
    std::size_t nv = m[0][0].n;
    // minors[S] = det of rows [0..|S|), columns in S
    std::map<unsigned, MPoly<F>> cur;
    for (std::size_t j = 0; j < n; ++j) cur[1u << j] = m[0][j];
    for (std::size_t row = 1; row < n; ++row) {
        std::map<unsigned, MPoly<F>> nxt;
        for (auto& [S, d] : cur) {
            if (d.zero()) continue;
            int sign = (row % 2 == 0) ? 1 : -1;
            for (std::size_t j = 0; j < n; ++j) {
                unsigned bit = 1u << j;
                if (S & bit) {
                    sign = -sign;
                    continue;
                }
                auto prod = (sign > 0) ? d * m[row][j] : -(d * m[row][j]);
                auto it = nxt.find(S | bit);
                if (it == nxt.end())
                    nxt.emplace(S | bit, prod);
                else
                    it->second = it->second + prod;
            }
        }
        cur = std::move(nxt);
    }
    unsigned full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    auto it = cur.find(full);
    return it == cur.end() ? MPoly<F>(nv) : it->second;
}

/// exact division a / b when b is a single term or division is known exact;
/// throws when not divisible (used for Jacobian-proportionality checks)
template <class F>
MPoly<F> mpoly_exact_div(MPoly<F> a, const MPoly<F>& b) {
    if (b.zero()) throw std::runtime_error("mpoly_exact_div: zero divisor");
    MPoly<F> q(a.n);
    // leading term of b in the map order (largest key)
    auto lead = std::prev(b.t.end());
    while (!a.zero()) {
        auto la = std::prev(a.t.end());
        Expo e(a.n);
        for (std::size_t i = 0; i < a.n; ++i) {
            e[i] = la->first[i] - lead->first[i];
            if (e[i] < 0) throw std::runtime_error("mpoly_exact_div: not divisible");
        }
        F cf = la->second / lead->second;
        MPoly<F> term = MPoly<F>::monomial(a.n, e, cf);
        q = q + term;
        a = a - term * b;
    }
    return q;
}

}  // namespace adetr
