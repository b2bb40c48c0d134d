// SPDX-License-Identifier: Apache-2.0
//
// Exact ADE root systems and Weyl groups.
//
// Conventions used throughout:
//  * the dual Cartan space hstar carries the simple-root basis; roots and
//    cycles are integer vectors there, with (a|b) = a^T C b and (alpha|alpha)=2;
//  * the Cartan space hspace carries the fundamental-weight basis, so that
//    <alpha_i, x> = x_i; the natural pairing of a root-coordinate vector a
//    with a weight-coordinate vector x is the plain dot product;
//  * the bilinear form on hspace is x^T C^{-1} y (transport of (|) along the
//    root <-> coroot identification, valid in the simply-laced case);
//  * a Weyl element stores its integer matrix M on hstar (column-action,
//    alpha -> M alpha); the induced action on hspace is x -> (M^T)^{-1} x,
//    also integral.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "linalg.hpp"
#include "numeric.hpp"

namespace adetr {

struct InvalidType : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GroupTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;  // row-major rows

inline IVec imat_apply(const IMat& m, const IVec& v) {
    IVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}
inline IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t n = a.size();
    IMat r(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long v = a[i][k];
            if (!v) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += v * b[k][j];
        }
    return r;
}
inline IMat imat_identity(std::size_t n) {
    IMat r(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}
inline IMat imat_transpose(const IMat& a) {
    std::size_t n = a.size();
    IMat r(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
    return r;
}

struct WeylElement {
    IMat m;    // action on hstar in the simple-root basis
    int det;   // +-1

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m == b.m; }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.m < b.m; }

    /// action on hspace (fundamental-weight coordinates): (M^T)^{-1}, integral
    IMat hspace_matrix() const;
};

struct WeylHash {
    std::size_t operator()(const WeylElement& w) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto& row : w.m)
            for (long v : row) {
                h ^= (std::uint64_t)(v + 131);
                h *= 1099511628211ull;
            }
        return (std::size_t)h;
    }
};

class RootSystem {
  public:
    char type;   // 'A', 'D', 'E'
    long N;      // rank
    IMat cartan;
    Mat<Rat> cartan_inv;
    std::vector<IVec> positive_roots;  // root coordinates
    long h = 0;                        // Coxeter number
    std::vector<long> exponents;       // m_1 <= ... <= m_N
    std::vector<IMat> simple_refl;     // hstar matrices of s_1..s_N

    RootSystem(char type_letter, long rank) : type(type_letter), N(rank) {
        if (!((type == 'A' && N >= 1) || (type == 'D' && N >= 4) || (type == 'E' && N >= 6 && N <= 8)))
            throw InvalidType(std::string("not a valid ADE pair: ") + type + std::to_string(rank));
        build_cartan();
        cartan_inv = inverse(rat_cartan());
        build_simple_reflections();
        build_positive_roots();
        h = 2 * (long)positive_roots.size() / N;
        build_exponents();
    }

    Mat<Rat> rat_cartan() const {
        Mat<Rat> m((std::size_t)N, (std::size_t)N);
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) m((std::size_t)i, (std::size_t)j) = Rat(cartan[(std::size_t)i][(std::size_t)j]);
        return m;
    }

    /// pairing on hstar (root coordinates)
    long pair_roots(const IVec& a, const IVec& b) const {
        long s = 0;
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) s += a[(std::size_t)i] * cartan[(std::size_t)i][(std::size_t)j] * b[(std::size_t)j];
        return s;
    }
    /// natural pairing <alpha, x>, alpha in root coords, x in weight coords
    template <class F>
    F pair_nat(const IVec& a, const Vec<F>& x) const {
        F s(0);
        for (long i = 0; i < N; ++i) s = s + F(a[(std::size_t)i]) * x[(std::size_t)i];
        return s;
    }
    /// bilinear form on hspace (weight coordinates): x^T C^{-1} y
    template <class F>
    F pair_hspace(const Vec<F>& x, const Vec<F>& y) const {
        F s(0);
        for (long i = 0; i < N; ++i) {
            F row(0);
            for (long j = 0; j < N; ++j) {
                const Rat& cij = cartan_inv((std::size_t)i, (std::size_t)j);
                if (sgn(cij) != 0) row = row + F(cij) * y[(std::size_t)j];
            }
            s = s + x[(std::size_t)i] * row;
        }
        return s;
    }
    /// root -> hspace vector (weight coordinates of the corresponding coroot)
    IVec root_to_hspace(const IVec& a) const {
        IVec r((std::size_t)N, 0);
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) r[(std::size_t)i] += cartan[(std::size_t)i][(std::size_t)j] * a[(std::size_t)j];
        return r;
    }

    std::vector<IVec> all_roots() const {
        std::vector<IVec> r = positive_roots;
        for (auto& a : positive_roots) {
            IVec n = a;
            for (auto& v : n) v = -v;
            r.push_back(n);
        }
        return r;
    }

    WeylElement simple_reflection(long i) const { return WeylElement{simple_refl[(std::size_t)i], -1}; }
    WeylElement identity_element() const { return WeylElement{imat_identity((std::size_t)N), 1}; }

    WeylElement reflection(const IVec& root) const {
        // s_alpha(x) = x - (alpha|x) alpha
        IMat m = imat_identity((std::size_t)N);
        for (long j = 0; j < N; ++j) {
            // column j: image of alpha_j
            long coeff = 0;
            for (long k = 0; k < N; ++k) coeff += cartan[(std::size_t)j][(std::size_t)k] * root[(std::size_t)k];
            for (long i = 0; i < N; ++i) m[(std::size_t)i][(std::size_t)j] -= coeff * root[(std::size_t)i];
        }
        return WeylElement{m, -1};
    }

    WeylElement compose(const WeylElement& a, const WeylElement& b) const {
        return WeylElement{imat_mul(a.m, b.m), a.det * b.det};
    }

    Int group_order() const {  // prod d_i
        Int o = 1;
        for (long m : exponents) o *= (m + 1);
        return o;
    }

    /// full group by closure under simple reflections; GroupTooLarge beyond cap
    std::vector<WeylElement> enumerate_weyl(std::uint64_t cap = 1000000) const {
        if (group_order() > Int((unsigned long)cap)) throw GroupTooLarge("Weyl group order exceeds cap");
        std::unordered_set<WeylElement, WeylHash> seen;
        std::vector<WeylElement> out;
        out.push_back(identity_element());
        seen.insert(out[0]);
        for (std::size_t head = 0; head < out.size(); ++head) {
            WeylElement cur = out[head];
            for (long i = 0; i < N; ++i) {
                WeylElement nxt = compose(simple_reflection(i), cur);
                if (seen.insert(nxt).second) out.push_back(nxt);
            }
        }
        std::sort(out.begin(), out.end());
        if (Int((unsigned long)out.size()) != group_order()) throw std::runtime_error("Weyl closure size mismatch");
        return out;
    }

    bool is_root(const IVec& v) const {
        for (auto& r : positive_roots) {
            if (r == v) return true;
            bool neg = true;
            for (long i = 0; i < N && neg; ++i) neg = (r[(std::size_t)i] == -v[(std::size_t)i]);
            if (neg) return true;
        }
        return false;
    }

  private:
    void build_cartan() {
        cartan.assign((std::size_t)N, IVec((std::size_t)N, 0));
        for (long i = 0; i < N; ++i) cartan[(std::size_t)i][(std::size_t)i] = 2;
        auto link = [&](long i, long j) {
            cartan[(std::size_t)i][(std::size_t)j] = -1;
            cartan[(std::size_t)j][(std::size_t)i] = -1;
        };
        if (type == 'A') {
            for (long i = 0; i + 1 < N; ++i) link(i, i + 1);
        } else if (type == 'D') {
            for (long i = 0; i + 2 < N; ++i) link(i, i + 1);
            link(N - 3, N - 1);
        } else {  // E6..E8, Bourbaki: node 2 attached to node 4 of the A-chain 1-3-4-5-6(-7-8)
            std::vector<std::pair<long, long>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            for (long i = 5; i + 1 < N; ++i) edges.push_back({i, i + 1});
            for (auto [i, j] : edges) link(i, j);
        }
    }

    void build_simple_reflections() {
        simple_refl.clear();
        for (long i = 0; i < N; ++i) {
            IMat m = imat_identity((std::size_t)N);
            for (long j = 0; j < N; ++j) m[(std::size_t)i][(std::size_t)j] -= cartan[(std::size_t)i][(std::size_t)j];
            simple_refl.push_back(m);
        }
    }

    void build_positive_roots() {
        // closure: a positive root r with (r|alpha_i) < 0 yields the root r+alpha_i
        std::set<IVec> roots;
        std::vector<IVec> queue;
        for (long i = 0; i < N; ++i) {
            IVec e((std::size_t)N, 0);
            e[(std::size_t)i] = 1;
            roots.insert(e);
            queue.push_back(e);
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            IVec r = queue[head];
            for (long i = 0; i < N; ++i) {
                long p = 0;
                for (long j = 0; j < N; ++j) p += cartan[(std::size_t)i][(std::size_t)j] * r[(std::size_t)j];
                if (p < 0) {
                    IVec nr = r;
                    nr[(std::size_t)i] += 1;
                    if (roots.insert(nr).second) queue.push_back(nr);
                }
            }
        }
        positive_roots.assign(roots.begin(), roots.end());
    }

    void build_exponents() {
        // #{positive roots of height k} = #{i : m_i >= k}; invert the partition
        std::vector<long> counts((std::size_t)h + 1, 0);
        for (auto& r : positive_roots) {
            long ht = 0;
            for (long v : r) ht += v;
            counts[(std::size_t)ht]++;
        }
        exponents.clear();
        for (long i = 1; i <= counts[1]; ++i) {
            long m = 0;
            for (long k = 1; k <= h; ++k)
                if (counts[(std::size_t)k] >= i) m = k;
            exponents.push_back(m);
        }
        std::sort(exponents.begin(), exponents.end());
        if ((long)exponents.size() != N) throw std::runtime_error("exponent extraction failed");
    }
};

inline IMat WeylElement::hspace_matrix() const {
    // integer inverse-transpose via adjugate: det is +-1
    std::size_t n = m.size();
    Mat<Rat> q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = Rat(m[i][j]);
    Mat<Rat> it = inverse(q).transposed();
    IMat r(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = it(i, j);
            if (v.get_den() != 1) throw std::runtime_error("hspace matrix not integral");
            r[i][j] = (long)v.get_num().get_si();
        }
    return r;
}

/// conjugacy class of the Coxeter element (closure under generator conjugation)
inline std::vector<WeylElement> coxeter_class(const RootSystem& rs, const WeylElement& sigma, std::uint64_t cap = 1000000) {
    Int expected = rs.group_order() / rs.h;
    if (expected > Int((unsigned long)cap)) throw GroupTooLarge("Coxeter class exceeds cap");
    std::unordered_set<WeylElement, WeylHash> seen;
    std::vector<WeylElement> out{sigma};
    seen.insert(sigma);
    for (std::size_t head = 0; head < out.size(); ++head) {
        WeylElement cur = out[head];
        for (long i = 0; i < rs.N; ++i) {
            WeylElement s = rs.simple_reflection(i);
            WeylElement conj = rs.compose(rs.compose(s, cur), s);
            if (seen.insert(conj).second) out.push_back(conj);
        }
    }
    std::sort(out.begin(), out.end());
    if (Int((unsigned long)out.size()) != expected) throw std::runtime_error("Coxeter class size mismatch");
    return out;
}

}  // namespace adetr
