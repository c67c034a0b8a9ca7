#include "modulilab/birational.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace modulilab::birational {

namespace {

MPoly<Rat> var(const std::vector<std::string>& vars, const std::string& name) {
    return MPoly<Rat>::variable(vars, name, Rat(1));
}

MPoly<Rat> lit(const std::vector<std::string>& vars, const Rat& c) {
    return MPoly<Rat>::constant(vars, c);
}

// The eight line forms from the ingredients p = c2c3-c0c1, q = c0^2-c2^2,
// r = c1c2-c0c3, which may be rational constants or polynomials in c.
std::array<LinePair, 4> build_lines(const std::vector<std::string>& vars, const MPoly<Rat>& p,
                                    const MPoly<Rat>& q, const MPoly<Rat>& r) {
    const MPoly<Rat> z0 = var(vars, "z0"), z1 = var(vars, "z1"), z2 = var(vars, "z2"),
                     z3 = var(vars, "z3");
    return {LinePair{p * z0 + q * z1 + r * z2, r * z0 + p * z2 + q * z3},
            LinePair{q * z0 + p * z1 + r * z3, r * z1 + q * z2 + p * z3},
            LinePair{q * z0 - p * z1 - r * z3, q * z2 - r * z1 - p * z3},
            LinePair{p * z0 - q * z1 + r * z2, r * z0 + p * z2 - q * z3}};
}

struct CIngredients {
    Rat p, q, r;          // c2c3-c0c1, c0^2-c2^2, c1c2-c0c3
    Rat big_p, big_q;     // c0c3-c1c2, c0c1-c2c3
    Rat alpha, beta;      // c0^2-c1^2-c2^2+c3^2, c0^2+c1^2-c2^2-c3^2
};

CIngredients ingredients(const CPoint& c) {
    CIngredients w;
    w.p = c[2] * c[3] - c[0] * c[1];
    w.q = c[0] * c[0] - c[2] * c[2];
    w.r = c[1] * c[2] - c[0] * c[3];
    w.big_p = -w.r;
    w.big_q = -w.p;
    w.alpha = c[0] * c[0] - c[1] * c[1] - c[2] * c[2] + c[3] * c[3];
    w.beta = c[0] * c[0] + c[1] * c[1] - c[2] * c[2] - c[3] * c[3];
    return w;
}

GQuad abcd_raw(const CPoint& c) {
    const CIngredients w = ingredients(c);
    const Rat p2 = w.big_p * w.big_p, q2 = w.big_q * w.big_q;
    const Rat a2 = w.alpha * w.alpha, b2 = w.beta * w.beta;
    return {4 * p2 - a2, b2 - 4 * q2, b2 + 4 * q2, 4 * p2 + a2};
}

// The quadric pair {lhs of Q} used by all three rho/sigma identities.
MPoly<Rat> quadric_q(const std::vector<std::string>& vars, const MPoly<Rat>& x,
                     const MPoly<Rat>& y, const MPoly<Rat>& z, const MPoly<Rat>& t) {
    (void)vars;
    return x * x - y * y - z * z + t * t;
}

Rat random_rat(std::mt19937_64& gen) {
    const long long num = static_cast<long long>(gen() % 61) - 30;
    const long long den = static_cast<long long>(gen() % 7) + 1;
    return Rat(num, den);
}

// (u2+u3)(v2+v3), (u2-u3)(v2-v3), u4v4 for any representation of the
// eight coordinates.
struct BilinearBlocks {
    MPoly<Rat> plus, minus, corner;
};

BilinearBlocks blocks(const std::array<MPoly<Rat>, 4>& u, const std::array<MPoly<Rat>, 4>& v) {
    return {(u[1] + u[2]) * (v[1] + v[2]), (u[1] - u[2]) * (v[1] - v[2]), u[3] * v[3]};
}

std::array<MPoly<Rat>, 4> uv_coords(const std::vector<std::string>& vars, char letter) {
    return {var(vars, std::string(1, letter) + "1"), var(vars, std::string(1, letter) + "2"),
            var(vars, std::string(1, letter) + "3"), var(vars, std::string(1, letter) + "4")};
}

// Segre-type embedding of one P^1 x P^1 factor pair into P^3.
std::array<MPoly<Rat>, 4> segre_embed(const std::vector<std::string>& vars,
                                      const std::string& x1, const std::string& y1,
                                      const std::string& x2, const std::string& y2) {
    const MPoly<Rat> a = var(vars, x1), b = var(vars, y1), c = var(vars, x2), d = var(vars, y2);
    const MPoly<Rat> two = lit(vars, Rat(2));
    return {a * c - b * d, two * a * d, two * c * b, a * c + b * d};
}

}  // namespace

std::vector<std::string> z_vars() { return {"z0", "z1", "z2", "z3"}; }

std::vector<std::string> zc_vars() {
    return {"z0", "z1", "z2", "z3", "c0", "c1", "c2", "c3"};
}

std::vector<std::string> uv_vars() {
    return {"u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"};
}

std::array<LinePair, 4> lines_from_c(const CPoint& c) {
    const CIngredients w = ingredients(c);
    if (w.q.is_zero())
        throw std::invalid_argument("degenerate configuration: c0^2 = c2^2");
    const auto vars = z_vars();
    return build_lines(vars, lit(vars, w.p), lit(vars, w.q), lit(vars, w.r));
}

std::array<LinePair, 4> lines_symbolic() {
    const auto vars = zc_vars();
    const MPoly<Rat> c0 = var(vars, "c0"), c1 = var(vars, "c1"), c2 = var(vars, "c2"),
                     c3 = var(vars, "c3");
    return build_lines(vars, c2 * c3 - c0 * c1, c0 * c0 - c2 * c2, c1 * c2 - c0 * c3);
}

Discriminants discriminants(const CPoint& c) {
    const Rat sp = c[0] + c[1], sm = c[0] - c[1], tp = c[2] + c[3], tm = c[2] - c[3];
    const CIngredients w = ingredients(c);
    Discriminants d;
    d.d12 = (sp * sp - tp * tp) * (sm * sm - tm * tm);
    const Rat e02m = c[0] - c[2], e02p = c[0] + c[2], e13m = c[1] - c[3], e13p = c[1] + c[3];
    d.d13 = (e02m * e02m + e13m * e13m) * (e02p * e02p + e13p * e13p);
    d.d14 = (c[0] * c[0] - c[2] * c[2]) * (c[1] * c[1] - c[3] * c[3]);
    d.quadric_product = w.beta * w.alpha * w.big_q * w.big_p;
    return d;
}

GQuad abcd_from_c(const CPoint& c) {
    const GQuad g = abcd_raw(c);
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero() && g[3].is_zero())
        throw std::domain_error(
            "all four coefficients vanish: indeterminacy point of the parametrization");
    return g;
}

std::array<MPoly<Rat>, 4> abcd_symbolic(const std::vector<std::string>& vars) {
    const MPoly<Rat> c0 = var(vars, "c0"), c1 = var(vars, "c1"), c2 = var(vars, "c2"),
                     c3 = var(vars, "c3");
    const MPoly<Rat> big_p = c0 * c3 - c1 * c2, big_q = c0 * c1 - c2 * c3;
    const MPoly<Rat> alpha = c0 * c0 - c1 * c1 - c2 * c2 + c3 * c3;
    const MPoly<Rat> beta = c0 * c0 + c1 * c1 - c2 * c2 - c3 * c3;
    const MPoly<Rat> four = lit(vars, Rat(4));
    const MPoly<Rat> p2 = four * big_p * big_p, q2 = four * big_q * big_q;
    const MPoly<Rat> a2 = alpha * alpha, b2 = beta * beta;
    return {p2 - a2, b2 - q2, b2 + q2, p2 + a2};
}

bool verify_chi_vanishing(bool symbolic, std::uint64_t seed, int samples) {
    if (symbolic) {
        const auto vars = zc_vars();
        const auto lines = lines_symbolic();
        const auto coeffs = abcd_symbolic(vars);
        const auto form = forms::g_form<MPoly<Rat>>(coeffs);
        MPoly<Rat> pullback(vars);
        for (int m = 0; m < 16; ++m) {
            const auto& cm = form.a[static_cast<size_t>(m)];
            if (cm.is_zero_poly()) continue;
            MPoly<Rat> term = cm;
            for (int f = 0; f < 4; ++f) {
                const bool pick_x = ((static_cast<unsigned>(m) >> (3 - f)) & 1u) == 1u;
                const auto& lp = lines[static_cast<size_t>(f)];
                term = term * (pick_x ? lp.f : lp.g);
            }
            pullback = pullback + term;
        }
        return pullback.is_zero_poly();
    }

    std::mt19937_64 gen(seed);
    int done = 0;
    while (done < samples) {
        const CPoint c = {random_rat(gen), random_rat(gen), random_rat(gen), random_rat(gen)};
        if (c[0] * c[0] - c[2] * c[2] == 0) continue;
        const GQuad g = abcd_raw(c);
        if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero() && g[3].is_zero()) continue;
        const auto lines = lines_from_c(c);
        const std::vector<Rat> z = {random_rat(gen), random_rat(gen), random_rat(gen),
                                    random_rat(gen)};
        const auto at = [&](const MPoly<Rat>& p) {
            return p.eval<Rat>(z, [](const Rat& q) { return q; });
        };
        std::array<std::array<Rat, 2>, 4> pt;
        for (int f = 0; f < 4; ++f)
            pt[static_cast<size_t>(f)] = {at(lines[static_cast<size_t>(f)].f),
                                          at(lines[static_cast<size_t>(f)].g)};
        if (!strata::form_value(forms::g_form(g), pt).is_zero()) return false;
        ++done;
    }
    return true;
}

bool rho_sigma_identities() {
    {
        const auto vars = z_vars();
        const MPoly<Rat> z0 = var(vars, "z0"), z1 = var(vars, "z1"), z2 = var(vars, "z2"),
                         z3 = var(vars, "z3");
        const MPoly<Rat> two = lit(vars, Rat(2));
        const MPoly<Rat> x = two * (z0 * z3 - z1 * z2);
        const MPoly<Rat> y = z0 * z0 - z1 * z1 - z2 * z2 + z3 * z3;
        const MPoly<Rat> z = two * (z0 * z1 - z2 * z3);
        const MPoly<Rat> t = z0 * z0 + z1 * z1 - z2 * z2 - z3 * z3;
        if (!quadric_q(vars, x, y, z, t).is_zero_poly()) return false;
    }
    {
        const std::vector<std::string> vars = {"x", "y", "z", "t"};
        const MPoly<Rat> x = var(vars, "x"), y = var(vars, "y"), z = var(vars, "z"),
                         t = var(vars, "t");
        const MPoly<Rat> a = x * x - y * y;
        const MPoly<Rat> b = t * t - z * z;
        if (a + b != quadric_q(vars, x, y, z, t)) return false;
    }
    {
        const std::vector<std::string> vars = {"s1", "t1", "s2", "t2"};
        const MPoly<Rat> s1 = var(vars, "s1"), t1 = var(vars, "t1"), s2 = var(vars, "s2"),
                         t2 = var(vars, "t2");
        const MPoly<Rat> x = s1 * s2 + t1 * t2;
        const MPoly<Rat> y = s1 * t2 + s2 * t1;
        const MPoly<Rat> z = s1 * s2 - t1 * t2;
        const MPoly<Rat> t = s1 * t2 - s2 * t1;
        if (!quadric_q(vars, x, y, z, t).is_zero_poly()) return false;
    }
    return true;
}

CIModel ci_model(const GQuad& g) {
    if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero() && g[3].is_zero())
        throw std::invalid_argument("zero coefficient quadruple");
    const auto vars = uv_vars();
    const auto u = uv_coords(vars, 'u'), v = uv_coords(vars, 'v');
    const BilinearBlocks bl = blocks(u, v);
    CIModel m{{u[0] * u[0] + u[1] * u[2] - u[3] * u[3],
               v[0] * v[0] + v[1] * v[2] - v[3] * v[3],
               lit(vars, g[3]) * u[0] * v[0] - lit(vars, g[1] / 4) * bl.plus -
                   lit(vars, g[2] / 4) * bl.minus - lit(vars, g[0]) * bl.corner}};
    return m;
}

CIModel family_member(const ECoeffs& e, const Rat& s) {
    if (e.a.is_zero() && e.b.is_zero() && e.c.is_zero())
        throw std::invalid_argument("zero coefficient triple");
    const auto vars = uv_vars();
    const auto u = uv_coords(vars, 'u'), v = uv_coords(vars, 'v');
    const BilinearBlocks bl = blocks(u, v);
    const MPoly<Rat> s2 = lit(vars, s * s);
    CIModel m{{s2 * u[0] * u[0] + u[1] * u[2] - u[3] * u[3],
               s2 * v[0] * v[0] + v[1] * v[2] - v[3] * v[3],
               u[0] * v[0] - lit(vars, e.b / 4) * bl.plus - lit(vars, e.c / 4) * bl.minus -
                   lit(vars, e.a) * bl.corner}};
    return m;
}

bool limit_check() {
    const std::vector<std::string> vars = {"u1", "u2", "u3", "u4", "v1", "v2",
                                           "v3", "v4", "a",  "b",  "c",  "s"};
    const auto u = uv_coords(vars, 'u'), v = uv_coords(vars, 'v');
    const MPoly<Rat> a = var(vars, "a"), b = var(vars, "b"), c = var(vars, "c"),
                     s = var(vars, "s");
    const MPoly<Rat> quarter = lit(vars, Rat(1, 4));
    const BilinearBlocks bl = blocks(u, v);
    const MPoly<Rat> third =
        u[0] * v[0] - quarter * b * bl.plus - quarter * c * bl.minus - a * bl.corner;

    const std::array<MPoly<Rat>, 3> family = {s * s * u[0] * u[0] + u[1] * u[2] - u[3] * u[3],
                                              s * s * v[0] * v[0] + v[1] * v[2] - v[3] * v[3],
                                              third};
    const std::array<MPoly<Rat>, 3> limit = {u[1] * u[2] - u[3] * u[3],
                                             v[1] * v[2] - v[3] * v[3], third};

    std::map<std::string, MPoly<Rat>> at_zero, rescale;
    for (const auto& name : vars) {
        at_zero.emplace(name, var(vars, name));
        rescale.emplace(name, var(vars, name));
    }
    at_zero.at("s") = MPoly<Rat>(vars);
    rescale.at("u1") = s * u[0];
    rescale.at("v1") = s * v[0];

    for (int i = 0; i < 3; ++i)
        if (family[static_cast<size_t>(i)].substitute(at_zero) != limit[static_cast<size_t>(i)])
            return false;

    // Start from the original system with third-equation parameter s^2 and
    // rescale u1, v1; this must land exactly on the family, with the third
    // equation picking up the factor s^2.
    const std::array<MPoly<Rat>, 3> start = {
        u[0] * u[0] + u[1] * u[2] - u[3] * u[3], v[0] * v[0] + v[1] * v[2] - v[3] * v[3],
        u[0] * v[0] -
            s * s * (quarter * b * bl.plus + quarter * c * bl.minus + a * bl.corner)};
    if (start[0].substitute(rescale) != family[0]) return false;
    if (start[1].substitute(rescale) != family[1]) return false;
    return start[2].substitute(rescale) == s * s * family[2];
}

bool segre_identities() {
    {
        const std::vector<std::string> vars = {"x1", "y1", "x2", "y2"};
        const auto u = segre_embed(vars, "x1", "y1", "x2", "y2");
        if (!(u[0] * u[0] + u[1] * u[2] - u[3] * u[3]).is_zero_poly()) return false;
    }
    {
        const std::vector<std::string> vars = {"s", "t", "w"};
        const MPoly<Rat> s = var(vars, "s"), t = var(vars, "t");
        const MPoly<Rat> u2 = s * s, u3 = t * t, u4 = s * t;
        if (!(u2 * u3 - u4 * u4).is_zero_poly()) return false;
    }
    return true;
}

bool segre_pullback_identity() {
    const std::vector<std::string> vars = {"x1", "y1", "x2", "y2", "x3", "y3",
                                           "x4", "y4", "a",  "b",  "c",  "d"};
    const auto u = segre_embed(vars, "x1", "y1", "x2", "y2");
    const auto v = segre_embed(vars, "x3", "y3", "x4", "y4");
    const MPoly<Rat> a = var(vars, "a"), b = var(vars, "b"), c = var(vars, "c"),
                     d = var(vars, "d");
    const MPoly<Rat> quarter = lit(vars, Rat(1, 4));
    const BilinearBlocks bl = blocks(u, v);
    const MPoly<Rat> pulled =
        d * u[0] * v[0] - quarter * b * bl.plus - quarter * c * bl.minus - a * bl.corner;

    const auto flipped = forms::g_form<MPoly<Rat>>({a, b, c, -d});
    const MPoly<Rat> target = forms::form_polynomial(
        flipped.a, {"x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"});
    return pulled == lit(vars, Rat(-2)) * target;
}

}  // namespace modulilab::birational
