#pragma once

#include "modulilab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace modulilab::stability {

using algebra::Rat;

// Univariate polynomial in u, ascending coefficients: c[0] + c[1] u + ...
using UPoly = std::vector<Rat>;

struct Piece {
    Rat lo, hi;
    UPoly poly;
};

// Volume profile vol(-K - uF) as a function of u: contiguous,
// non-overlapping pieces with lo < hi.
struct PiecewisePoly {
    std::vector<Piece> pieces;
};

UPoly upoly_antiderivative(const UPoly& p);
Rat upoly_eval(const UPoly& p, const Rat& u);

// Exact integral over the union of pieces, via antiderivatives. Throws on
// an empty interval, overlapping pieces, or a gap between pieces.
Rat integrate_piecewise(const PiecewisePoly& v);

// Same integral, summed monomial by monomial; an independent cross-check.
Rat integrate_piecewise_monomial(const PiecewisePoly& v);

// S(F) = (1 / (-K)^3) * integral of the volume profile; the anticanonical
// degree is 24 for this family. Throws on nonpositive volume.
Rat s_value(const PiecewisePoly& v, const Rat& anticanonical_volume = Rat(24));

// beta(F) = A(F) - S(F).
Rat beta_value(const Rat& a, const Rat& s);

struct StabilityReport {
    Rat s_value, a_value, beta;
};

// The fibration lower bound for the local delta invariant at the point P:
// factor = 3/4 + (3/4) * integral_1^2 (2-u)^3 du = 15/16, delta_bound = its
// reciprocal 16/15, and the cruder direct bound
// ((-K_X)^3 / 3) * delta(S) / (2 (-K_S)^2) = 2/3.
struct NemuroBound {
    Rat factor, delta_bound, crude_bound;
};

NemuroBound nemuro_bound();

// Named volume profiles and constants:
//   "divisor-F-corrected"  pieces 24 - 24u^2 + 8u^3 on [0,1], 8(2-u)^3 on
//                          [1,2]; A = 1; S = 5/6
//   "divisor-F-literal"    second piece 8(2-u)^3 u exactly as printed in the
//                          source computation; S = 17/20, documenting the
//                          discrepancy with the stated 5/6
//   "divisor-Eprime"       same profile as divisor-F-corrected; A = 1
//   "divisor-E"            pieces 8(3 - 3u^2 + u^3) on [0,1], 8(2-u)^3 on
//                          [1,2]; A = 2
//   "fiber-S"              S constant 11/16 (profile not displayed); A = 1
//   "delta-sextic-dP"      delta(S) = 1 for the sextic del Pezzo surface
enum class PresetKind { Profile, SConstant, DeltaConstant };

struct Preset {
    PresetKind kind = PresetKind::Profile;
    PiecewisePoly profile;
    Rat value;
    Rat a_value;
};

const std::map<std::string, Preset>& presets();

// S-value of a named preset (integral / 24 for profiles, the stored value
// for S constants). Throws on unknown names and on delta constants.
Rat preset_s_value(const std::string& name);

// Full report {S, A, beta = A - S} for a named preset.
StabilityReport stability_report(const std::string& name);

}  // namespace modulilab::stability
