#include "modulilab/toric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace modulilab::toric {

namespace {

// det of the matrix with columns a, b, c; entries stay far below overflow
// (rays and sample points are two-digit integers).
long long det_cols(const Ray& a, const Ray& b, const Ray& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
           c[0] * (a[1] * b[2] - a[2] * b[1]);
}

ConeIdx sorted(ConeIdx cone) {
    std::sort(cone.begin(), cone.end());
    return cone;
}

// Position of `cone` among the fan's maximal cones, order-insensitive.
std::size_t find_cone(const Fan& f, const ConeIdx& cone) {
    const ConeIdx key = sorted(cone);
    for (std::size_t i = 0; i < f.maximal_cones.size(); ++i)
        if (sorted(f.maximal_cones[i]) == key) return i;
    throw std::domain_error("cone is not a maximal cone of the fan");
}

std::array<Ray, 3> cone_rays(const Fan& f, const ConeIdx& cone) {
    for (int i : cone)
        if (i < 0 || static_cast<std::size_t>(i) >= f.rays.size())
            throw std::domain_error("cone index out of range");
    return {f.rays[cone[0]], f.rays[cone[1]], f.rays[cone[2]]};
}

}  // namespace

Fan moduli_fan() {
    Fan f;
    f.rays = {{1, 2, 3}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-3, -4, -6}};
    f.maximal_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {4, 1, 2}, {4, 1, 3}, {4, 2, 3}};
    return f;
}

Fan p1346_fan() {
    Fan f;
    f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-3, -4, -6}};
    f.maximal_cones = {{0, 1, 2}, {3, 1, 2}, {3, 0, 2}, {3, 0, 1}};
    return f;
}

long long cone_multiplicity(const Fan& f, const ConeIdx& cone) {
    find_cone(f, cone);
    const auto r = cone_rays(f, cone);
    const long long d = det_cols(r[0], r[1], r[2]);
    return d < 0 ? -d : d;
}

bool cone_contains(const Ray& a, const Ray& b, const Ray& c, const Ray& point) {
    const long long d = det_cols(a, b, c);
    const long long la = det_cols(point, b, c);
    const long long lb = det_cols(a, point, c);
    const long long lc = det_cols(a, b, point);
    return d * la >= 0 && d * lb >= 0 && d * lc >= 0;
}

bool fan_is_complete(const Fan& f, std::uint64_t seed, int samples) {
    std::vector<std::array<Ray, 3>> cones;
    cones.reserve(f.maximal_cones.size());
    for (const ConeIdx& cone : f.maximal_cones) {
        const auto r = cone_rays(f, cone);
        if (det_cols(r[0], r[1], r[2]) == 0)
            throw std::domain_error("degenerate maximal cone (zero determinant)");
        cones.push_back(r);
    }

    // Every wall (2-face) must be shared by exactly two maximal cones.
    std::map<std::pair<int, int>, int> wall_count;
    for (const ConeIdx& cone : f.maximal_cones) {
        const ConeIdx k = sorted(cone);
        ++wall_count[{k[0], k[1]}];
        ++wall_count[{k[0], k[2]}];
        ++wall_count[{k[1], k[2]}];
    }
    for (const auto& [wall, count] : wall_count)
        if (count != 2) return false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-50, 50);
    for (int i = 0; i < samples; ++i) {
        const Ray point{coord(rng), coord(rng), coord(rng)};
        bool covered = false;
        for (const auto& r : cones)
            if (cone_contains(r[0], r[1], r[2], point)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

Fan star_subdivide(const Fan& f, const Ray& ray, const ConeIdx& cone) {
    const std::size_t position = find_cone(f, cone);
    Fan out;
    out.rays = f.rays;
    out.rays.push_back(ray);
    const int new_index = static_cast<int>(out.rays.size()) - 1;
    const ConeIdx target = f.maximal_cones[position];
    for (std::size_t i = 0; i < f.maximal_cones.size(); ++i)
        if (i != position) out.maximal_cones.push_back(f.maximal_cones[i]);
    out.maximal_cones.push_back({new_index, target[0], target[1]});
    out.maximal_cones.push_back({new_index, target[0], target[2]});
    out.maximal_cones.push_back({new_index, target[1], target[2]});
    return out;
}

bool fans_equal(const Fan& a, const Fan& b) {
    std::vector<Ray> ra = a.rays, rb = b.rays;
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return false;

    const auto cone_key = [](const Fan& f, const ConeIdx& cone) {
        std::array<Ray, 3> r{f.rays[cone[0]], f.rays[cone[1]], f.rays[cone[2]]};
        std::sort(r.begin(), r.end());
        return r;
    };
    std::vector<std::array<Ray, 3>> ca, cb;
    for (const ConeIdx& cone : a.maximal_cones) ca.push_back(cone_key(a, cone));
    for (const ConeIdx& cone : b.maximal_cones) cb.push_back(cone_key(b, cone));
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

bool star_subdivision_check() {
    const Fan base = p1346_fan();
    const Fan subdivided = star_subdivide(base, Ray{1, 2, 3}, ConeIdx{0, 1, 2});
    return fans_equal(subdivided, moduli_fan());
}

IdealGenerators moduli_ideal() {
    return {{{6, 0, 0}, {4, 1, 0}, {3, 0, 1}, {2, 2, 0}, {1, 1, 1}, {0, 3, 0}, {0, 0, 2}}};
}

std::vector<int> ideal_weighted_orders(const std::array<int, 3>& weights) {
    std::vector<int> orders;
    for (const auto& e : moduli_ideal().exponents)
        orders.push_back(e[0] * weights[0] + e[1] * weights[1] + e[2] * weights[2]);
    return orders;
}

}  // namespace modulilab::toric
