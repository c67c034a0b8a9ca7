#pragma once

#include "modulilab/forms.hpp"
#include "modulilab/fp.hpp"
#include "modulilab/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modulilab::strata {

using algebra::FpElem;
using algebra::Rat;
using forms::Form1111;
using forms::GQuad;

// Strata of P^3_{a,b,c,d}; mutually exclusive, resolved in the precedence
// order Red > Curv > SixA1 > FourA1 > TwoA1 > Smooth (deeper strata win
// because the algebraic conditions below are closure conditions).
enum class StratumP3 { Smooth, Red, Curv, SixA1, FourA1, TwoA1 };

// Strata of the exceptional P^2_{a,b,c}; Base means the singular locus is
// exactly the two tautological curves C1 u C2 of the limit 3-fold.
enum class StratumE { Base, CurvPlus, FourA1Plus, TwoA1Plus };

std::string to_string(StratumP3 s);
std::string to_string(StratumE s);

// (a : b : c) on the exceptional P^2; projective, not all zero.
struct ECoeffs {
    Rat a, b, c;
};

// Gaussian rational a + bi; some catalogued singular points live over Q(i).
struct QI {
    Rat re, im;

    QI() : re(0), im(0) {}
    QI(int n) : re(n), im(0) {}
    QI(const Rat& r) : re(r), im(0) {}
    QI(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static QI unit_i() { return QI(Rat(0), Rat(1)); }

    friend QI operator+(const QI& a, const QI& b) { return QI(a.re + b.re, a.im + b.im); }
    friend QI operator-(const QI& a, const QI& b) { return QI(a.re - b.re, a.im - b.im); }
    friend QI operator*(const QI& a, const QI& b) {
        return QI(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    QI operator-() const { return QI(-re, -im); }
    friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const QI& a, const QI& b) { return !(a == b); }
};

inline bool is_zero(const QI& z) { return z.re.is_zero() && z.im.is_zero(); }
inline QI zero_like(const QI&) { return QI(); }
inline QI one_like(const QI&) { return QI(1); }

// Point of P^1 over Q.
struct P1Point {
    Rat x, y;
};

// Point of (P^1)^4.
using P14Point = std::array<P1Point, 4>;

// Point of P(1_s, 1_t, 2_w), coordinates over Q(i).
struct P112Point {
    QI s, t, w;
};

// Point of P(1,1,2) x P(1,1,2).
using EPoint = std::pair<P112Point, P112Point>;

// Theorem-level classification of (a : b : c : d). Quantifies over all
// coordinate permutations; throws on the zero quadruple.
StratumP3 classify_p3(const GQuad& g);

// Classification of (a : b : c) on the exceptional P^2; throws on zero.
StratumE classify_e(const ECoeffs& e);

// The literal singular-point catalogues. Only the finitely many normal
// forms listed in the source of truth are honoured:
//   (0:0:1:1)                 -> 6 points,
//   (0:0:1:d), d != 0, +-1    -> 4 points,
//   (a:-a:c:d) with TwoA1 tag -> 2 points,
// all inside the plane a + b = 0. Anything else (off the plane, reducible,
// curve strata, SixA1 forms other than (0:0:1:1)) throws a "no catalogued
// list" error rather than guessing.
std::vector<P14Point> expected_singular_points(const GQuad& g);

// E-side catalogues: the three FourA1Plus coordinate points (4 points each)
// and the six TwoA1Plus subcases (2 points each, keyed by which factor of
// (a^2-b^2)(a^2-c^2)(b^2-c^2) vanishes). Base returns the empty list (no
// singular points beyond C1 u C2); CurvPlus throws, its extra singular locus
// is a curve, not a point list.
std::vector<EPoint> expected_singular_points(const ECoeffs& e);

// Brute-force singular F_p-point count. Charts identify where each point
// was found: for (P^1)^4 a 4-character mask, character f is '1' when factor
// f sits at (0:1), '0' when it is (1:t); for the P^3 x P^3 model the key is
// "u<i>v<j>" with i, j the 1-based leading coordinates. Points are counted
// once (canonical representatives), so the chart counts sum to `count`.
struct SingReport {
    std::uint64_t prime = 0;
    long long count = 0;
    std::map<std::string, long long> per_chart;
};

// Enumerates all (p+1)^4 points of (P^1(F_p))^4; a point counts when the
// reduced form and its four chart-local partial derivatives vanish there.
// Throws when p divides a coefficient denominator.
SingReport oracle_count_1111(const GQuad& g, std::uint64_t p);

// Enumerates the F_p-points of {u2u3 = u4^2} x {v2v3 = v4^2} in P^3 x P^3,
// keeps those on the (1,1)-divisor of the limit model, and counts the ones
// where the 3 x 8 Jacobian drops below rank 3.
SingReport oracle_count_22(const ECoeffs& e, std::uint64_t p);

// Value of a (1,1,1,1) form at a point of (P^1)^4 with coordinates in K.
template <class K>
K form_value(const Form1111<K>& f, const std::array<std::array<K, 2>, 4>& pt) {
    K total = pt[0][0] - pt[0][0];
    for (int m = 0; m < 16; ++m) {
        K term = f.a[m];
        for (int factor = 0; factor < 4; ++factor) {
            const int bit = (m >> (3 - factor)) & 1;
            term = term * pt[factor][bit == 1 ? 0 : 1];
        }
        total = total + term;
    }
    return total;
}

// Partial derivative with respect to x_factor (wrt_x) or y_factor.
template <class K>
K form_partial(const Form1111<K>& f, const std::array<std::array<K, 2>, 4>& pt, int factor,
               bool wrt_x) {
    K total = pt[0][0] - pt[0][0];
    for (int m = 0; m < 16; ++m) {
        const int bit = (m >> (3 - factor)) & 1;
        if ((bit == 1) != wrt_x) continue;
        K term = f.a[m];
        for (int other = 0; other < 4; ++other) {
            if (other == factor) continue;
            const int b2 = (m >> (3 - other)) & 1;
            term = term * pt[other][b2 == 1 ? 0 : 1];
        }
        total = total + term;
    }
    return total;
}

// The three equations of the limit complete-intersection model with the
// coefficient slots (a, b/4, c/4) already lifted into K.
template <class K>
std::array<K, 3> ci_equations(const K& coef_a, const K& coef_b4, const K& coef_c4,
                              const std::array<K, 4>& u, const std::array<K, 4>& v) {
    return {u[1] * u[2] - u[3] * u[3], v[1] * v[2] - v[3] * v[3],
            u[0] * v[0] - coef_b4 * (u[1] + u[2]) * (v[1] + v[2]) -
                coef_c4 * (u[1] - u[2]) * (v[1] - v[2]) - coef_a * u[3] * v[3]};
}

// 3 x 8 Jacobian of ci_equations in the coordinate order (u1..u4, v1..v4).
template <class K>
std::array<std::array<K, 8>, 3> ci_jacobian(const K& coef_a, const K& coef_b4, const K& coef_c4,
                                            const std::array<K, 4>& u, const std::array<K, 4>& v) {
    const K zero = u[0] - u[0];
    const K two = one_like(zero) + one_like(zero);
    std::array<std::array<K, 8>, 3> j{{{zero, u[2], u[1], -(two * u[3]), zero, zero, zero, zero},
                                       {zero, zero, zero, zero, zero, v[2], v[1], -(two * v[3])},
                                       {v[0], -(coef_b4 * (v[1] + v[2])) - coef_c4 * (v[1] - v[2]),
                                        -(coef_b4 * (v[1] + v[2])) + coef_c4 * (v[1] - v[2]),
                                        -(coef_a * v[3]), u[0],
                                        -(coef_b4 * (u[1] + u[2])) - coef_c4 * (u[1] - u[2]),
                                        -(coef_b4 * (u[1] + u[2])) + coef_c4 * (u[1] - u[2]),
                                        -(coef_a * u[3])}}};
    return j;
}

// Rank by fraction-free elimination; needs only ring operations, so it runs
// unchanged over Rat, Q(i), and F_p.
template <class K>
int matrix_rank(std::vector<std::vector<K>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && is_zero(m[pivot][c])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            const K factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = m[r][c] * m[i][j] - factor * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Exact confirmation that a catalogued point is singular: the form and all
// eight partial derivatives vanish at pt over Q.
bool is_singular_point_1111(const GQuad& g, const P14Point& pt);

// Exact confirmation over Q(i): the image of pt in P^3 x P^3 satisfies the
// three limit-model equations and the Jacobian has rank < 3 there.
bool is_singular_point_22(const ECoeffs& e, const EPoint& pt);

}  // namespace modulilab::strata
