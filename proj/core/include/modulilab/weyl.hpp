#pragma once

#include "modulilab/forms.hpp"
#include "modulilab/rational.hpp"

#include <array>
#include <vector>

namespace modulilab::weyl {

using algebra::Rat;
using forms::GQuad;

// Substitution matrix on the basis (u1, u2, u3, u4): row j holds the image
// of u_j. The induced action on the coefficient vector (a, d, b, c) is by
// the transpose.
using Mat4 = std::array<std::array<Rat, 4>, 4>;
using Vec4 = std::array<Rat, 4>;

Mat4 mat_identity();
Mat4 mat_mul(const Mat4& a, const Mat4& b);
Rat mat_det(const Mat4& m);

struct MatrixGroup {
    std::vector<Mat4> elements;
    std::vector<Mat4> generators;
    // When set, elements are sign-canonical representatives of {M, -M} and
    // products are reduced accordingly.
    bool projective = false;
};

// The three substitutions generating the smaller group, then those plus the
// u4-negation and the Hadamard-type transformation for the full group.
std::vector<Mat4> gamma0_generators();
std::vector<Mat4> gamma_generators();

// Closure under multiplication; throws past the safety bound of 1e5
// elements or on a non-invertible generator.
MatrixGroup generate(const std::vector<Mat4>& gens);

// One representative per {M, -M}; requires -identity in the group.
MatrixGroup project_mod_center(const MatrixGroup& g);

// Action on (a:b:c:d) through the (a,d,b,c) slot dictionary.
GQuad act(const Mat4& m, const GQuad& x);
// Same action on symbolic coordinates, for invariance checks.
std::array<forms::MPoly<Rat>, 4> act_symbolic(const Mat4& m,
                                              const std::array<forms::MPoly<Rat>, 4>& x);

// Scale so the first nonzero coordinate is 1.
GQuad normalize_point(const GQuad& x);

std::vector<GQuad> orbit(const MatrixGroup& g, const GQuad& x);
MatrixGroup stabilizer(const MatrixGroup& g, const GQuad& x);

}  // namespace modulilab::weyl
