#pragma once

#include "modulilab/mpoly.hpp"
#include "modulilab/rational.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace modulilab::forms {

using algebra::Exponents;
using algebra::is_zero;
using algebra::MPoly;
using algebra::Rat;

// Multiplication by a rational scalar in whatever coefficient ring the
// invariant formulas run over.
inline Rat rat_scale(const Rat& q, const Rat& x) { return q * x; }
inline MPoly<Rat> rat_scale(const Rat& q, const MPoly<Rat>& p) {
    return MPoly<Rat>::constant(p.variables(), q) * p;
}

// (a, b, c, d) of the normal form; projective, not all zero.
using GQuad = std::array<Rat, 4>;

// Degree-(1,1,1,1) form by its 16 coefficients: a[m] multiplies
// x1^i y1^(1-i) x2^j y2^(1-j) x3^k y3^(1-k) x4^l y4^(1-l) with m = 8i+4j+2k+l.
template <class K>
struct Form1111 {
    std::array<K, 16> a;
};

template <class K>
struct InvariantSet {
    K H, L, M, D, R, S, T;
};

struct WeightedPoint {
    std::vector<int> weights;
    std::vector<Rat> coords;
};

template <class K>
Form1111<K> g_form(const std::array<K, 4>& g) {
    const K &a = g[0], &b = g[1], &c = g[2], &d = g[3];
    if (is_zero(a) && is_zero(b) && is_zero(c) && is_zero(d))
        throw std::invalid_argument("zero coefficient quadruple");
    const Rat half(1, 2);
    const K z = a - a;
    Form1111<K> f{{z, z, z, z, z, z, z, z, z, z, z, z, z, z, z, z}};
    f.a[0] = f.a[15] = rat_scale(half, a + d);
    f.a[3] = f.a[12] = rat_scale(half, a - d);
    f.a[5] = f.a[10] = rat_scale(half, b + c);
    f.a[6] = f.a[9] = rat_scale(half, b - c);
    return f;
}

template <class K>
InvariantSet<K> invariants(const Form1111<K>& f) {
    const auto& a = f.a;
    InvariantSet<K> r{a[0], a[0], a[0], a[0], a[0], a[0], a[0]};
    r.H = a[0] * a[15] - a[1] * a[14] - a[2] * a[13] + a[3] * a[12] - a[4] * a[11] +
          a[5] * a[10] + a[6] * a[9] - a[7] * a[8];
    r.L = algebra::ring_det<K>({{a[0], a[4], a[8], a[12]},
                                {a[1], a[5], a[9], a[13]},
                                {a[2], a[6], a[10], a[14]},
                                {a[3], a[7], a[11], a[15]}});
    r.M = algebra::ring_det<K>({{a[0], a[8], a[2], a[10]},
                                {a[1], a[9], a[3], a[11]},
                                {a[4], a[12], a[6], a[14]},
                                {a[5], a[13], a[7], a[15]}});
    r.D = algebra::ring_det<K>(
        {{a[0] * a[9] - a[1] * a[8],
          a[0] * a[11] + a[2] * a[9] - a[1] * a[10] - a[3] * a[8],
          a[2] * a[11] - a[3] * a[10]},
         {a[0] * a[13] + a[4] * a[9] - a[1] * a[12] - a[5] * a[8],
          a[0] * a[15] + a[2] * a[13] + a[4] * a[11] + a[6] * a[9] - a[1] * a[14] -
              a[3] * a[12] - a[5] * a[10] - a[7] * a[8],
          a[2] * a[15] + a[6] * a[11] - a[3] * a[14] - a[7] * a[10]},
         {a[4] * a[13] - a[5] * a[12],
          a[4] * a[15] + a[6] * a[13] - a[5] * a[14] - a[7] * a[12],
          a[6] * a[15] - a[7] * a[14]}});

    const K H2 = r.H * r.H, H3 = H2 * r.H, H4 = H2 * H2, H6 = H3 * H3;
    const K L2 = r.L * r.L, M2 = r.M * r.M, LM = r.L * r.M;
    r.R = r.H * (r.L - r.M) + rat_scale(Rat(3), r.D);
    r.S = rat_scale(Rat(1, 12), H4) - rat_scale(Rat(2, 3), H2 * r.L) +
          rat_scale(Rat(2, 3), H2 * r.M) - rat_scale(Rat(2), r.H * r.D) +
          rat_scale(Rat(4, 3), L2 + LM + M2);
    r.T = rat_scale(Rat(1, 216), H6) - rat_scale(Rat(1, 18), H4 * (r.L - r.M)) -
          rat_scale(Rat(1, 6), H3 * r.D) +
          rat_scale(Rat(1, 9), H2 * (rat_scale(Rat(2), L2) - LM + rat_scale(Rat(2), M2))) +
          rat_scale(Rat(2, 3), r.H * (r.L - r.M) * r.D) -
          rat_scale(Rat(8, 27), L2 * r.L - M2 * r.M) -
          rat_scale(Rat(4, 9), LM * (r.L - r.M)) + r.D * r.D;
    return r;
}

// The two-quadrics chain P^3 -> P^3 -> P(1,2,3,4) -> P(1,3,4,6).
template <class K>
std::array<K, 4> phi1_map(const std::array<K, 4>& g) {
    return {g[0] * g[0], g[1] * g[1], g[2] * g[2], g[3] * g[3]};
}

template <class K>
std::array<K, 4> phi2_map(const std::array<K, 4>& p) {
    return {p[0] + p[1] + p[2] + p[3],
            p[0] * p[1] + p[0] * p[2] + p[0] * p[3] + p[1] * p[2] + p[1] * p[3] + p[2] * p[3],
            p[0] * p[1] * p[2] + p[0] * p[1] * p[3] + p[0] * p[2] * p[3] + p[1] * p[2] * p[3],
            p[0] * p[1] * p[2] * p[3]};
}

template <class K>
std::array<K, 4> phi3_map(const std::array<K, 4>& s) {
    const K &s1 = s[0], &s2 = s[1], &s3 = s[2], &s4 = s[3];
    const K s1sq = s1 * s1;
    return {rat_scale(Rat(1, 2), s1),
            rat_scale(Rat(1, 32),
                      s1sq * s1 - rat_scale(Rat(4), s1 * s2) + rat_scale(Rat(24), s3)),
            rat_scale(Rat(1, 12),
                      rat_scale(Rat(12), s4) + s2 * s2 - rat_scale(Rat(3), s1 * s3)),
            rat_scale(Rat(1, 432),
                      rat_scale(Rat(27), s1sq * s4) - rat_scale(Rat(72), s2 * s4) +
                          rat_scale(Rat(2), s2 * s2 * s2) -
                          rat_scale(Rat(9), s1 * s2 * s3) + rat_scale(Rat(27), s3 * s3))};
}

template <class K>
std::array<K, 4> phi_chain_map(const std::array<K, 4>& g) {
    return phi3_map(phi2_map(phi1_map(g)));
}

// All exponent vectors of the given weighted degree; deterministic order.
std::vector<Exponents> weighted_monomials(const std::vector<int>& weights, int degree);

// Equality in the weighted projective space over the algebraic closure:
// the full vectors of weighted-degree-lcm monomials must be proportional.
template <class K>
bool wp_equal_vectors(const std::vector<int>& weights, const std::vector<K>& P,
                      const std::vector<K>& Q) {
    if (P.size() != weights.size() || Q.size() != weights.size())
        throw std::invalid_argument("coordinate/weight arity mismatch");
    int l = 1;
    for (int w : weights) {
        if (w <= 0) throw std::invalid_argument("weights must be positive");
        l = std::lcm(l, w);
    }
    const auto mons = weighted_monomials(weights, l);
    std::vector<K> vp, vq;
    vp.reserve(mons.size());
    vq.reserve(mons.size());
    for (const auto& e : mons) {
        K tp = P[0] - P[0], tq = tp;
        bool first = true;
        for (size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                tp = first ? P[i] : tp * P[i];
                tq = first ? Q[i] : tq * Q[i];
                first = false;
            }
        }
        vp.push_back(tp);
        vq.push_back(tq);
    }
    bool p_zero = true, q_zero = true;
    for (size_t i = 0; i < mons.size(); ++i) {
        p_zero = p_zero && is_zero(vp[i]);
        q_zero = q_zero && is_zero(vq[i]);
    }
    if (p_zero || q_zero)
        throw std::invalid_argument("zero vector is not a weighted projective point");
    size_t pivot = 0;
    while (is_zero(vp[pivot]) && is_zero(vq[pivot])) ++pivot;
    if (is_zero(vp[pivot]) || is_zero(vq[pivot])) return false;
    for (size_t i = 0; i < mons.size(); ++i)
        if (!(vp[i] * vq[pivot] == vq[i] * vp[pivot])) return false;
    return true;
}

bool wp_equal(const WeightedPoint& P, const WeightedPoint& Q);

// (H : R : S : T) on g_form(g), raw values, weights (1,3,4,6).
WeightedPoint quotient_point(const GQuad& g);
// phi3(phi2(phi1(g))), same target space.
WeightedPoint phi_chain(const GQuad& g);

// Exponent vector of the basis monomial a[m] multiplies, over the variable
// order (x1, y1, x2, y2, x3, y3, x4, y4).
Exponents basis_exponents(int m);

MPoly<Rat> form_polynomial(const Form1111<Rat>& f, const std::vector<std::string>& xyvars);
// Coefficients already living in a larger polynomial ring whose variable
// list contains the eight (P^1)^4 coordinates named here.
MPoly<Rat> form_polynomial(const std::array<MPoly<Rat>, 16>& coeffs,
                           const std::array<std::string, 8>& xyvars);

bool molien_check(unsigned order);

}  // namespace modulilab::forms
