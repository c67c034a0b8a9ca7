#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace modulilab::toric {

using Ray = std::array<long long, 3>;

// Indices into Fan::rays; cones are simplicial throughout.
using ConeIdx = std::array<int, 3>;

struct Fan {
    std::vector<Ray> rays;
    std::vector<ConeIdx> maximal_cones;
};

// The fan of the K-moduli component: rays v0 = (1,2,3), v1 = (1,0,0),
// v2 = (0,1,0), v3 = (0,0,1), v4 = (-3,-4,-6); maximal cones
// (v0 v1 v2), (v0 v1 v3), (v0 v2 v3), (v4 v1 v2), (v4 v1 v3), (v4 v2 v3).
Fan moduli_fan();

// The fan of P(1,3,4,6): rays v1..v4 as above with the four
// coordinate-omission cones; v4 + 3 v1 + 4 v2 + 6 v3 = 0.
Fan p1346_fan();

// |det| of the cone's three rays; the cone must be one of the fan's maximal
// cones (up to reordering of its indices).
long long cone_multiplicity(const Fan& f, const ConeIdx& cone);

// Wall test (every 2-face of a maximal cone shared by exactly two of them)
// plus coverage by `samples` seeded random integer points. Throws on a
// degenerate (zero-determinant) maximal cone.
bool fan_is_complete(const Fan& f, std::uint64_t seed = 20240901, int samples = 1000);

// Membership of a lattice point in a simplicial cone, by Cramer signs.
bool cone_contains(const Ray& a, const Ray& b, const Ray& c, const Ray& point);

// Replaces `cone` by the three cones pairing `ray` with each of its 2-faces.
// Throws when `cone` is not a maximal cone of f.
Fan star_subdivide(const Fan& f, const Ray& ray, const ConeIdx& cone);

// Equality as unordered ray sets and unordered cone sets (cones compared by
// their ray vectors, so ray numbering does not matter).
bool fans_equal(const Fan& a, const Fan& b);

// True iff the star subdivision of cone(v1, v2, v3) in the P(1,3,4,6) fan at
// the ray v1 + 2 v2 + 3 v3 = (1,2,3) reproduces moduli_fan().
bool star_subdivision_check();

// Exponent triples in (r, s, t) of the blow-up ideal generators:
// r^6, r^4 s, r^3 t, r^2 s^2, r s t, s^3, t^2.
struct IdealGenerators {
    std::vector<std::array<int, 3>> exponents;
};

IdealGenerators moduli_ideal();

// Weighted degree of each generator of moduli_ideal() under the given
// weights for (r, s, t).
std::vector<int> ideal_weighted_orders(const std::array<int, 3>& weights);

}  // namespace modulilab::toric
