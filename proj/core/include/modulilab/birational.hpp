#pragma once

#include "modulilab/forms.hpp"
#include "modulilab/mpoly.hpp"
#include "modulilab/rational.hpp"
#include "modulilab/strata.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace modulilab::birational {

using algebra::MPoly;
using algebra::Rat;
using forms::GQuad;
using strata::ECoeffs;

// (c0 : c1 : c2 : c3), homogeneous rational representative.
using CPoint = std::array<Rat, 4>;

// The line {f = g = 0}; f and g are linear in z0..z3.
struct LinePair {
    MPoly<Rat> f, g;
};

struct Discriminants {
    // D12 D13 D14 != 0 iff the four lines are disjoint.
    Rat d12, d13, d14;
    // (c0^2+c1^2-c2^2-c3^2)(c0^2-c1^2-c2^2+c3^2)(c0c1-c2c3)(c0c3-c1c2);
    // its vanishing puts the four lines on a common quadric.
    Rat quadric_product;
};

// Three equations in P^3_u x P^3_v over the variables uv_vars(): two
// quadric cones and one (1,1)-form.
struct CIModel {
    std::array<MPoly<Rat>, 3> equations;
};

std::vector<std::string> z_vars();   // z0..z3
std::vector<std::string> zc_vars();  // z0..z3, c0..c3
std::vector<std::string> uv_vars();  // u1..u4, v1..v4

// The four lines L1..L4, with L2 = tau1(L1), L3 = tau2(L2), L4 = tau2(L1)
// for tau1: (z0:z1:z2:z3) -> (z1:z0:z3:z2), tau2: (z0:z1:z2:z3) ->
// (z0:-z1:z2:-z3). Requires c0^2 != c2^2, else the forms degenerate.
std::array<LinePair, 4> lines_from_c(const CPoint& c);
// Same eight forms with c0..c3 kept symbolic, over zc_vars().
std::array<LinePair, 4> lines_symbolic();

Discriminants discriminants(const CPoint& c);

// Coefficients of the quadrilinear equation cut out by the line
// configuration, read off against the (a, b, c, d) monomial grouping;
// satisfies a + b = 0 identically. Throws when all four vanish (the
// indeterminacy locus of the construction, e.g. (1:1:1:1)).
GQuad abcd_from_c(const CPoint& c);
// The same four coefficients as polynomials in c0..c3; `vars` must
// contain the names c0..c3.
std::array<MPoly<Rat>, 4> abcd_symbolic(const std::vector<std::string>& vars);

// Substitutes (x_i : y_i) = (f_i : g_i) into the quadrilinear form with
// coefficients abcd_from_c(c). Symbolic mode checks that the result is the
// identically zero polynomial in z0..z3, c0..c3; fast mode checks
// vanishing at `samples` random rational points.
bool verify_chi_vanishing(bool symbolic, std::uint64_t seed = 20240901, int samples = 200);

// (i) the image of rho lies on the quadric Q = {x^2-y^2-z^2+t^2 = 0},
// (ii) (a+b) pulled back along sigma equals the Q equation,
// (iii) the ((s1:t1),(s2:t2)) parametrization satisfies the Q equation;
// all three as zero-polynomial identities.
bool rho_sigma_identities();

// {u1^2+u2u3-u4^2, v1^2+v2v3-v4^2,
//  d u1v1 - (b/4)(u2+u3)(v2+v3) - (c/4)(u2-u3)(v2-v3) - a u4v4}.
CIModel ci_model(const GQuad& g);
// {s^2 u1^2+u2u3-u4^2, s^2 v1^2+v2v3-v4^2,
//  u1v1 - (b/4)(u2+u3)(v2+v3) - (c/4)(u2-u3)(v2-v3) - a u4v4}.
CIModel family_member(const ECoeffs& e, const Rat& s);

// With a, b, c, s symbolic: the family at s = 0 equals the limit system
// {u2u3-u4^2, v2v3-v4^2, third equation} term-for-term, and substituting
// u1 -> s u1, v1 -> s v1 into the s^2-reparametrized system returns
// (eq1, eq2, s^2 eq3) of the family.
bool limit_check();

// u1^2+u2u3-u4^2 vanishes under (x1x2-y1y2, 2x1y2, 2x2y1, x1x2+y1y2) and
// u2u3-u4^2 vanishes under (w, s^2, t^2, st), identically.
bool segre_identities();

// Pulling the third ci_model equation back along the P^1 x P^1 embeddings
// of both factors gives -2 G_{a,b,c,-d}, with a, b, c, d symbolic.
bool segre_pullback_identity();

}  // namespace modulilab::birational
