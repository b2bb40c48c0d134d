// SPDX-License-Identifier: Apache-2.0
//
// Minimal Buchberger machinery over Q, grevlex order. Only used for small
// systems (two-variable Jacobi ideals, curve ideals in <= 4 variables).
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "multipoly.hpp"

namespace adetr {

inline bool grevlex_less(const Expo& a, const Expo& b) {
    long da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da < db;
    // grevlex: larger means smaller last nonzero difference... compare reversed
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

template <class F>
struct GBasis {
    std::vector<MPoly<F>> gens;  // reduced basis, leading coeff 1

    static std::pair<Expo, F> leading(const MPoly<F>& p) {
        auto it = p.t.begin();
        auto best = it;
        for (; it != p.t.end(); ++it)
            if (grevlex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    static bool divides(const Expo& a, const Expo& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    MPoly<F> normal_form(MPoly<F> p) const {
        MPoly<F> rem(p.n);
        while (!p.zero()) {
            auto [lp, cp] = leading(p);
            bool reduced = false;
            for (auto& g : gens) {
                auto [lg, cg] = leading(g);
                if (!divides(lg, lp)) continue;
                Expo e(p.n);
                for (std::size_t i = 0; i < p.n; ++i) e[i] = lp[i] - lg[i];
                p = p - MPoly<F>::monomial(p.n, e, cp / cg) * g;
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.add_term(lp, cp);
                MPoly<F> lead = MPoly<F>::monomial(p.n, lp, cp);
                p = p - lead;
            }
        }
        return rem;
    }

    static GBasis build(std::vector<MPoly<F>> input) {
        GBasis gb;
        for (auto& p : input)
            if (!p.zero()) gb.gens.push_back(p);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < gb.gens.size(); ++i)
            for (std::size_t j = i + 1; j < gb.gens.size(); ++j) pairs.push_back({i, j});
        while (!pairs.empty()) {
            auto [i, j] = pairs.back();
            pairs.pop_back();
            auto [li, ci] = leading(gb.gens[i]);
            auto [lj, cj] = leading(gb.gens[j]);
            Expo lcm(li.size());
            for (std::size_t k = 0; k < li.size(); ++k) lcm[k] = std::max(li[k], lj[k]);
            // Buchberger 1st criterion: coprime leads
            bool coprime = true;
            for (std::size_t k = 0; k < li.size(); ++k)
                if (li[k] > 0 && lj[k] > 0) coprime = false;
            if (coprime) continue;
            Expo ei(li.size()), ej(li.size());
            for (std::size_t k = 0; k < li.size(); ++k) {
                ei[k] = lcm[k] - li[k];
                ej[k] = lcm[k] - lj[k];
            }
            MPoly<F> s = MPoly<F>::monomial(li.size(), ei, F(1) / ci) * gb.gens[i] -
                         MPoly<F>::monomial(li.size(), ej, F(1) / cj) * gb.gens[j];
            MPoly<F> r = gb.normal_form(s);
            if (!r.zero()) {
                for (std::size_t k = 0; k < gb.gens.size(); ++k) pairs.push_back({k, gb.gens.size()});
                gb.gens.push_back(r);
            }
        }
        // reduce basis
        for (auto& g : gb.gens) {
            auto [lg, cg] = leading(g);
            g = (F(1) / cg) * g;
        }
        return gb;
    }

    /// monomials not divisible by any leading term, up to total degree bound;
    /// returns nullopt if the count keeps growing (non-finite quotient guard)
    std::vector<Expo> standard_monomials(long degree_bound) const {
        std::size_t n = gens.empty() ? 0 : gens[0].n;
        std::vector<Expo> leads;
        for (auto& g : gens) leads.push_back(leading(g).first);
        std::vector<Expo> out;
        Expo cur(n, 0);
        // iterate all exponent vectors with total degree <= bound
        while (true) {
            long tot = 0;
            for (int v : cur) tot += v;
            if (tot <= degree_bound) {
                bool stands = true;
                for (auto& l : leads)
                    if (divides(l, cur)) {
                        stands = false;
                        break;
                    }
                if (stands) out.push_back(cur);
            }
            // increment odometer with degree cap
            std::size_t i = 0;
            for (; i < n; ++i) {
                cur[i] += 1;
                long t = 0;
                for (int v : cur) t += v;
                if (t <= degree_bound) break;
                cur[i] = 0;
            }
            if (i == n) break;
        }
        std::sort(out.begin(), out.end(), grevlex_less);
        return out;
    }
};

}  // namespace adetr
