#include "modulilab/weyl.hpp"

#include "modulilab/mpoly.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace modulilab::weyl {

namespace {

constexpr size_t kGenerationBound = 100000;

std::string mat_key(const Mat4& m) {
    std::string k;
    for (const auto& row : m)
        for (const auto& x : row) {
            k += algebra::rat_to_string(x);
            k += ',';
        }
    return k;
}

Mat4 canon_sign(const Mat4& m) {
    for (const auto& row : m)
        for (const auto& x : row) {
            if (x == 0) continue;
            if (x > 0) return m;
            Mat4 n = m;
            for (auto& r : n)
                for (auto& y : r) y = -y;
            return n;
        }
    return m;
}

MatrixGroup close_under_product(const std::vector<Mat4>& gens, bool projective) {
    for (const auto& g : gens)
        if (mat_det(g) == 0) throw std::invalid_argument("non-invertible generator");
    auto reduce = [&](const Mat4& m) { return projective ? canon_sign(m) : m; };
    MatrixGroup out;
    out.generators = gens;
    out.projective = projective;
    std::map<std::string, size_t> seen;
    std::deque<Mat4> work;
    const Mat4 id = reduce(mat_identity());
    seen.emplace(mat_key(id), 0);
    out.elements.push_back(id);
    work.push_back(id);
    while (!work.empty()) {
        const Mat4 cur = work.front();
        work.pop_front();
        for (const auto& g : gens) {
            const Mat4 next = reduce(mat_mul(cur, g));
            const std::string key = mat_key(next);
            if (seen.count(key)) continue;
            if (out.elements.size() >= kGenerationBound)
                throw std::runtime_error("group closure exceeded the safety bound");
            seen.emplace(key, out.elements.size());
            out.elements.push_back(next);
            work.push_back(next);
        }
    }
    return out;
}

}  // namespace

Mat4 mat_identity() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rat(i == j ? 1 : 0);
    return m;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat acc(0);
            for (int k = 0; k < 4; ++k) acc += a[i][k] * b[k][j];
            r[i][j] = acc;
        }
    return r;
}

Rat mat_det(const Mat4& m) {
    std::vector<std::vector<Rat>> v(4, std::vector<Rat>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[i][j] = m[i][j];
    return algebra::ring_det(v);
}

std::vector<Mat4> gamma0_generators() {
    const Rat o(1), z(0);
    Mat4 sign{{{-o, z, z, z}, {z, -o, z, z}, {z, z, o, z}, {z, z, z, o}}};
    Mat4 swap12{{{z, o, z, z}, {o, z, z, z}, {z, z, o, z}, {z, z, z, o}}};
    Mat4 cycle{{{z, o, z, z}, {z, z, o, z}, {z, z, z, o}, {o, z, z, z}}};
    return {sign, swap12, cycle};
}

std::vector<Mat4> gamma_generators() {
    auto gens = gamma0_generators();
    const Rat o(1), z(0), h(1, 2);
    Mat4 negu4{{{o, z, z, z}, {z, o, z, z}, {z, z, o, z}, {z, z, z, -o}}};
    Mat4 hadamard{{{h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}}};
    gens.push_back(negu4);
    gens.push_back(hadamard);
    return gens;
}

MatrixGroup generate(const std::vector<Mat4>& gens) { return close_under_product(gens, false); }

MatrixGroup project_mod_center(const MatrixGroup& g) {
    Mat4 minus_id = mat_identity();
    for (int i = 0; i < 4; ++i) minus_id[i][i] = Rat(-1);
    const std::string want = mat_key(minus_id);
    const bool has_center =
        std::any_of(g.elements.begin(), g.elements.end(),
                    [&](const Mat4& m) { return mat_key(m) == want; });
    if (!has_center) throw std::invalid_argument("center element -1 absent from group");
    return close_under_product(g.generators, true);
}

GQuad act(const Mat4& m, const GQuad& x) {
    if (x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0)
        throw std::invalid_argument("zero vector");
    const Vec4 w{x[0], x[3], x[1], x[2]};
    Vec4 wp{};
    for (int k = 0; k < 4; ++k) {
        Rat acc(0);
        for (int j = 0; j < 4; ++j) acc += m[j][k] * w[j];
        wp[k] = acc;
    }
    return {wp[0], wp[2], wp[3], wp[1]};
}

std::array<forms::MPoly<Rat>, 4> act_symbolic(const Mat4& m,
                                              const std::array<forms::MPoly<Rat>, 4>& x) {
    const std::array<forms::MPoly<Rat>, 4> w{x[0], x[3], x[1], x[2]};
    std::array<forms::MPoly<Rat>, 4> wp{w[0], w[0], w[0], w[0]};
    for (int k = 0; k < 4; ++k) {
        forms::MPoly<Rat> acc(w[0].variables());
        for (int j = 0; j < 4; ++j) acc = acc + forms::rat_scale(m[j][k], w[j]);
        wp[k] = acc;
    }
    return {wp[0], wp[2], wp[3], wp[1]};
}

GQuad normalize_point(const GQuad& x) {
    for (const auto& c : x) {
        if (c == 0) continue;
        return {x[0] / c, x[1] / c, x[2] / c, x[3] / c};
    }
    throw std::invalid_argument("zero vector");
}

std::vector<GQuad> orbit(const MatrixGroup& g, const GQuad& x) {
    std::map<std::string, GQuad> pts;
    for (const auto& m : g.elements) {
        const GQuad y = normalize_point(act(m, x));
        std::string key;
        for (const auto& c : y) {
            key += algebra::rat_to_string(c);
            key += ',';
        }
        pts.emplace(std::move(key), y);
    }
    std::vector<GQuad> out;
    out.reserve(pts.size());
    for (auto& [k, v] : pts) out.push_back(v);
    return out;
}

MatrixGroup stabilizer(const MatrixGroup& g, const GQuad& x) {
    const GQuad base = normalize_point(x);
    MatrixGroup out;
    out.projective = g.projective;
    for (const auto& m : g.elements)
        if (normalize_point(act(m, x)) == base) out.elements.push_back(m);
    return out;
}

}  // namespace modulilab::weyl
