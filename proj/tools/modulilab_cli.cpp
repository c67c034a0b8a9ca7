#include "modulilab/birational.hpp"
#include "modulilab/forms.hpp"
#include "modulilab/mpoly_io.hpp"
#include "modulilab/stability.hpp"
#include "modulilab/strata.hpp"
#include "modulilab/toric.hpp"
#include "modulilab/weyl.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using modulilab::algebra::Rat;
using modulilab::forms::GQuad;
using modulilab::strata::ECoeffs;

constexpr std::uint64_t kDefaultSeed = 20240901;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rat_str(const Rat& q) { return modulilab::algebra::rat_to_string(q); }

Rat parse_rat(const std::string& text) {
    try {
        return modulilab::algebra::rat_from_string(text);
    } catch (const std::exception&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

std::vector<Rat> parse_rats(const std::string& csv, size_t n, const std::string& flag) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.size() != n)
        throw UsageError(flag + " needs exactly " + std::to_string(n) +
                         " comma-separated rationals");
    return out;
}

GQuad parse_gquad(const std::string& csv) {
    const auto v = parse_rats(csv, 4, "--gcoeffs");
    return {v[0], v[1], v[2], v[3]};
}

ECoeffs parse_ecoeffs(const std::string& csv) {
    const auto v = parse_rats(csv, 3, "--ecoeffs");
    return {v[0], v[1], v[2]};
}

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("MODULILAB_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw UsageError("MODULILAB_SEED is not a 64-bit integer");
        }
    }
    return kDefaultSeed;
}

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

json rat_array(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rat_str(q));
    return a;
}

json gquad_json(const GQuad& g) { return rat_array({g[0], g[1], g[2], g[3]}); }

json qi_json(const modulilab::strata::QI& z) {
    return json::array({rat_str(z.re), rat_str(z.im)});
}

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump() << "\n";
        return;
    }
    // Aligned two-column rendering of one level of keys.
    size_t width = 0;
    for (const auto& item : j.items()) width = std::max(width, item.key().size());
    for (const auto& item : j.items()) {
        const auto& v = item.value();
        std::cout << item.key() << std::string(width - item.key().size() + 2, ' ')
                  << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

// One named verification with its outcome; detail is a short deterministic
// summary (counts, exact values), never a timing.
struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

class Timer {
public:
    explicit Timer(std::string label) : label_(std::move(label)), start_(clock::now()) {}
    ~Timer() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() -
                                                                              start_)
                            .count();
        std::cerr << "[time] " << label_ << ": " << ms << " ms\n";
    }

private:
    using clock = std::chrono::steady_clock;
    std::string label_;
    clock::time_point start_;
};

modulilab::weyl::MatrixGroup projective_group() {
    using namespace modulilab::weyl;
    return project_mod_center(generate(gamma_generators()));
}

std::string stratum_of(const GQuad& g) {
    return modulilab::strata::to_string(modulilab::strata::classify_p3(g));
}

// ---------------------------------------------------------------- suites

std::vector<CheckResult> suite_group() {
    using namespace modulilab::weyl;
    std::vector<CheckResult> out;
    Timer t("suite group");
    const auto g0 = generate(gamma0_generators());
    const auto g1 = generate(gamma_generators());
    const auto pg = project_mod_center(g1);
    out.push_back({"group-order-gamma0", g0.elements.size() == 192,
                   "order " + std::to_string(g0.elements.size())});
    out.push_back({"group-order-gamma", g1.elements.size() == 1152,
                   "order " + std::to_string(g1.elements.size())});
    out.push_back({"group-order-projective", pg.elements.size() == 576,
                   "order " + std::to_string(pg.elements.size())});
    const GQuad corner = {Rat(0), Rat(0), Rat(0), Rat(1)};
    const auto orb = orbit(pg, corner);
    out.push_back({"orbit-corner-size", orb.size() == 12,
                   "orbit size " + std::to_string(orb.size())});
    const auto stab = stabilizer(pg, corner);
    out.push_back({"stabilizer-corner-order", stab.elements.size() == 48,
                   "order " + std::to_string(stab.elements.size())});
    return out;
}

std::vector<CheckResult> suite_invariants(std::uint64_t seed, unsigned order) {
    using namespace modulilab::forms;
    using modulilab::algebra::MPoly;
    std::vector<CheckResult> out;
    Timer t("suite invariants");

    const std::vector<std::string> vars = {"a", "b", "c", "d"};
    const auto v = [&](const char* n) { return MPoly<Rat>::variable(vars, n, Rat(1)); };
    const std::array<MPoly<Rat>, 4> sym = {v("a"), v("b"), v("c"), v("d")};
    const auto inv = invariants(g_form(sym));

    const MPoly<Rat> half = MPoly<Rat>::constant(vars, Rat(1, 2));
    const MPoly<Rat> norm =
        half * (sym[0] * sym[0] + sym[1] * sym[1] + sym[2] * sym[2] + sym[3] * sym[3]);
    out.push_back({"H-closed-form", inv.H == norm, "H = (a^2+b^2+c^2+d^2)/2"});

    bool fixed = true;
    for (const auto& m : modulilab::weyl::gamma_generators()) {
        const auto moved = invariants(g_form(modulilab::weyl::act_symbolic(m, sym)));
        fixed = fixed && moved.H == inv.H && moved.R == inv.R && moved.S == inv.S &&
                moved.T == inv.T;
    }
    out.push_back({"HRST-generator-invariance", fixed, "all generators"});

    std::mt19937_64 gen(seed);
    bool routes = true;
    int tested = 0;
    while (tested < 100) {
        GQuad g;
        for (auto& q : g)
            q = Rat(static_cast<long long>(gen() % 41) - 20,
                    static_cast<long long>(gen() % 5) + 1);
        if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero() && g[3].is_zero()) continue;
        routes = routes && wp_equal(quotient_point(g), phi_chain(g));
        ++tested;
    }
    out.push_back({"quotient-vs-chain-random", routes, "100 random points"});

    const auto hit = [&](const GQuad& g, const std::vector<Rat>& coords) {
        return wp_equal(quotient_point(g), WeightedPoint{{1, 3, 4, 6}, coords});
    };
    out.push_back({"quotient-sixA1-point",
                   hit({Rat(0), Rat(0), Rat(1), Rat(1)},
                       {Rat(2), Rat(0), Rat(4, 3), Rat(8, 27)}),
                   "(0:0:1:1) -> (2:0:4/3:8/27)"});
    out.push_back({"quotient-reducible-point",
                   hit({Rat(1), Rat(-1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(0), Rat(0)}),
                   "(1:-1:1:1) -> (2:2:0:0)"});

    const auto sq = [](const MPoly<Rat>& p) { return p * p; };
    MPoly<Rat> product = MPoly<Rat>::constant(vars, Rat(1));
    const std::array<MPoly<Rat>, 4> p2 = {sq(sym[0]), sq(sym[1]), sq(sym[2]), sq(sym[3])};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) product = product * (p2[i] - p2[j]);
    const MPoly<Rat> disc =
        inv.S * inv.S * inv.S - MPoly<Rat>::constant(vars, Rat(27)) * inv.T * inv.T;
    const auto quot = modulilab::algebra::divide_exact(disc, product);
    out.push_back({"discriminant-divisibility", quot.has_value(),
                   "S^3-27T^2 divisible by prod (p_i - p_j)"});

    out.push_back({"molien-series", molien_check(order),
                   "order " + std::to_string(order)});

    const auto parsed_text =
        modulilab::algebra::mpoly_from_string(vars, modulilab::algebra::to_string(inv.S));
    const auto parsed_json =
        modulilab::algebra::mpoly_from_json(modulilab::algebra::mpoly_to_json(inv.T));
    out.push_back({"serialization-round-trip", parsed_text == inv.S && parsed_json == inv.T,
                   "text form of S, JSON form of T"});

    const auto f = g_form(sym);
    const auto& a = f.a;
    const std::vector<std::vector<MPoly<Rat>>> flat = {{a[0], a[4], a[8], a[12]},
                                                       {a[1], a[5], a[9], a[13]},
                                                       {a[2], a[6], a[10], a[14]},
                                                       {a[3], a[7], a[11], a[15]}};
    out.push_back({"determinant-routes",
                   modulilab::algebra::poly_det(flat) == modulilab::algebra::ring_det(flat),
                   "Bareiss vs cofactor on the symbolic coefficient matrix"});
    return out;
}

std::vector<CheckResult> suite_fan() {
    using namespace modulilab::toric;
    std::vector<CheckResult> out;
    Timer t("suite fan");
    const Fan fan = moduli_fan();
    out.push_back({"fan-complete", fan_is_complete(fan), "wall and sample checks"});
    const std::vector<long long> expect = {3, 2, 1, 6, 4, 3};
    std::vector<long long> mult;
    for (const auto& c : fan.maximal_cones) mult.push_back(cone_multiplicity(fan, c));
    std::string shown;
    for (long long m : mult) shown += (shown.empty() ? "" : ",") + std::to_string(m);
    out.push_back({"cone-multiplicities", mult == expect, "(" + shown + ")"});
    out.push_back({"star-subdivision", star_subdivision_check(),
                   "subdividing P(1,3,4,6) at (1,2,3) recovers the fan"});
    const auto orders = ideal_weighted_orders({1, 2, 3});
    const bool all6 =
        std::all_of(orders.begin(), orders.end(), [](int o) { return o == 6; });
    out.push_back({"ideal-weighted-orders", all6 && orders.size() == 7,
                   std::to_string(orders.size()) + " generators, order 6"});
    return out;
}

std::vector<CheckResult> suite_stability() {
    using namespace modulilab::stability;
    std::vector<CheckResult> out;
    Timer t("suite stability");
    const auto expect_s = [&](const std::string& preset, const Rat& want) {
        const Rat got = preset_s_value(preset);
        out.push_back({"s-value-" + preset, got == want,
                       "S = " + rat_str(got) + ", expected " + rat_str(want)});
    };
    expect_s("divisor-E", Rat(5, 6));
    expect_s("divisor-Eprime", Rat(5, 6));
    expect_s("divisor-F-corrected", Rat(5, 6));
    expect_s("divisor-F-literal", Rat(17, 20));
    expect_s("fiber-S", Rat(11, 16));

    const auto rep = stability_report("divisor-E");
    out.push_back({"beta-divisor-E", rep.beta == Rat(7, 6) && beta_value(1, Rat(5, 6)) == Rat(1, 6),
                   "A - S = " + rat_str(rep.beta)});
    const auto fiber = stability_report("fiber-S");
    out.push_back(
        {"beta-fiber-S", fiber.beta == Rat(5, 16), "beta = " + rat_str(fiber.beta)});

    const auto nb = nemuro_bound();
    out.push_back({"nemuro-factor", nb.factor == Rat(15, 16), rat_str(nb.factor)});
    out.push_back({"nemuro-delta-bound", nb.delta_bound == Rat(16, 15), rat_str(nb.delta_bound)});
    out.push_back({"crude-delta-bound", nb.crude_bound == Rat(2, 3), rat_str(nb.crude_bound)});

    bool cross = true;
    for (const auto& [name, preset] : presets()) {
        if (preset.kind != PresetKind::Profile) continue;
        cross = cross && integrate_piecewise(preset.profile) ==
                             integrate_piecewise_monomial(preset.profile);
    }
    out.push_back({"integration-cross-check", cross, "antiderivative vs monomial route"});
    return out;
}

std::vector<CheckResult> suite_appendix(bool symbolic, std::uint64_t seed) {
    using namespace modulilab::birational;
    std::vector<CheckResult> out;
    Timer t("suite appendix");

    out.push_back({"chi-vanishing", verify_chi_vanishing(symbolic, seed),
                   symbolic ? "zero polynomial in z, c" : "200 random samples"});
    out.push_back({"rho-sigma-identities", rho_sigma_identities(), "three zero polynomials"});

    const auto coeffs = abcd_symbolic({"c0", "c1", "c2", "c3"});
    out.push_back({"a-plus-b-vanishes", (coeffs[0] + coeffs[1]).is_zero_poly(),
                   "a + b = 0 identically"});

    const CPoint c = {Rat(1), Rat(2), Rat(3), Rat(5)};
    const GQuad g = abcd_from_c(c);
    const GQuad want = {Rat(-165), Rat(165), Rat(1517), Rat(173)};
    out.push_back({"abcd-at-1-2-3-5", g == want,
                   "(" + rat_str(g[0]) + ":" + rat_str(g[1]) + ":" + rat_str(g[2]) + ":" +
                       rat_str(g[3]) + ")"});
    const auto d = discriminants(c);
    out.push_back({"discriminants-at-1-2-3-5",
                   d.d12 == 165 && d.d13 == 845 && d.d14 == 168,
                   "(" + rat_str(d.d12) + "," + rat_str(d.d13) + "," + rat_str(d.d14) + ")"});
    out.push_back({"pipeline-two-nodes", stratum_of(g) == "TwoA1", stratum_of(g)});

    const GQuad four = abcd_from_c({Rat(1), Rat(1), Rat(0), Rat(1)});
    const GQuad six = abcd_from_c({Rat(3), Rat(2), Rat(1), Rat(2)});
    out.push_back({"pipeline-merged-lines",
                   stratum_of(four) == "FourA1" && stratum_of(six) == "SixA1",
                   stratum_of(four) + " / " + stratum_of(six)});
    return out;
}

std::vector<CheckResult> suite_section3() {
    using namespace modulilab::birational;
    std::vector<CheckResult> out;
    Timer t("suite section3");
    out.push_back({"segre-identities", segre_identities(), "both quadrics pull back to 0"});
    out.push_back({"segre-pullback", segre_pullback_identity(),
                   "third equation pulls back to -2 G_{a,b,c,-d}"});
    out.push_back({"family-limit", limit_check(), "s = 0 limit and u1,v1 rescaling"});
    const auto fam = family_member({Rat(1), Rat(1), Rat(1)}, Rat(1));
    const auto model = ci_model({Rat(1), Rat(1), Rat(1), Rat(1)});
    out.push_back({"family-at-s-1",
                   fam.equations[0] == model.equations[0] &&
                       fam.equations[1] == model.equations[1],
                   "quadric equations match the d = 1 model"});
    return out;
}

int run_verify(const std::string& suite, bool symbolic, bool as_json, unsigned order) {
    const std::uint64_t seed = seed_from_env();
    std::vector<CheckResult> checks;
    const std::map<std::string, std::function<std::vector<CheckResult>()>> suites = {
        {"group", [&] { return suite_group(); }},
        {"invariants", [&] { return suite_invariants(seed, order); }},
        {"fan", [&] { return suite_fan(); }},
        {"stability", [&] { return suite_stability(); }},
        {"appendix", [&] { return suite_appendix(symbolic, seed); }},
        {"section3", [&] { return suite_section3(); }},
    };
    if (suite == "all") {
        for (const auto& name : {"group", "invariants", "fan", "stability", "appendix",
                                 "section3"}) {
            auto part = suites.at(name)();
            checks.insert(checks.end(), part.begin(), part.end());
        }
    } else {
        const auto it = suites.find(suite);
        if (it == suites.end()) throw UsageError("unknown suite '" + suite + "'");
        checks = it->second();
    }
    if (std::getenv("MODULILAB_FORCE_FAIL"))
        checks.push_back({"forced-failure", false, "injected by MODULILAB_FORCE_FAIL"});

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;
    if (as_json) {
        json out;
        out["suite"] = suite;
        json list = json::array();
        for (const auto& c : checks)
            list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        out["checks"] = list;
        out["pass"] = all;
        std::cout << out.dump() << "\n";
    } else {
        size_t width = 0;
        for (const auto& c : checks) width = std::max(width, c.name.size());
        for (const auto& c : checks)
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name
                      << std::string(width - c.name.size() + 2, ' ') << c.detail << "\n";
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

// ----------------------------------------------------------------- verbs

int run_classify(const std::string& gcoeffs, const std::string& ecoeffs,
                 const std::string& cpoint, bool points, bool as_json) {
    using namespace modulilab::strata;
    const int given = (!gcoeffs.empty()) + (!ecoeffs.empty()) + (!cpoint.empty());
    if (given != 1)
        throw UsageError("classify needs exactly one of --gcoeffs, --ecoeffs, --cpoint");
    json out;
    if (!gcoeffs.empty()) {
        const GQuad g = parse_gquad(gcoeffs);
        out["stratum"] = to_string(classify_p3(g));
        if (points) {
            json pts = json::array();
            for (const auto& pt : expected_singular_points(g)) {
                if (!is_singular_point_1111(g, pt))
                    throw std::logic_error("catalogued point fails the exact singularity witness");
                json factors = json::array();
                for (const auto& f : pt)
                    factors.push_back(json::array({rat_str(f.x), rat_str(f.y)}));
                pts.push_back(factors);
            }
            out["points"] = pts;
        }
    } else if (!ecoeffs.empty()) {
        const ECoeffs e = parse_ecoeffs(ecoeffs);
        out["stratum"] = to_string(classify_e(e));
        if (points) {
            json pts = json::array();
            for (const auto& pt : expected_singular_points(e)) {
                if (!is_singular_point_22(e, pt))
                    throw std::logic_error("catalogued point fails the exact singularity witness");
                const auto factor = [](const P112Point& q) {
                    return json{{"s", qi_json(q.s)}, {"t", qi_json(q.t)}, {"w", qi_json(q.w)}};
                };
                pts.push_back(json::array({factor(pt.first), factor(pt.second)}));
            }
            out["points"] = pts;
        }
    } else {
        const auto v = parse_rats(cpoint, 4, "--cpoint");
        const modulilab::birational::CPoint c = {v[0], v[1], v[2], v[3]};
        const GQuad g = modulilab::birational::abcd_from_c(c);
        const auto d = modulilab::birational::discriminants(c);
        out["gcoeffs"] = gquad_json(g);
        out["discriminants"] = json{{"d12", rat_str(d.d12)},
                                    {"d13", rat_str(d.d13)},
                                    {"d14", rat_str(d.d14)},
                                    {"quadric_product", rat_str(d.quadric_product)}};
        out["stratum"] = to_string(classify_p3(g));
    }
    emit(out, as_json);
    return 0;
}

const std::vector<std::string>& xy_names() {
    static const std::vector<std::string> xy = {"x1", "y1", "x2", "y2",
                                                "x3", "y3", "x4", "y4"};
    return xy;
}

json poly_json(const modulilab::algebra::MPoly<Rat>& p, bool as_json) {
    return as_json ? json(modulilab::algebra::mpoly_to_json(p))
                   : json(modulilab::algebra::to_string(p));
}

int run_invariants(const std::string& gcoeffs, bool symbolic, bool with_form, bool as_json) {
    using namespace modulilab::forms;
    using modulilab::algebra::MPoly;
    if (gcoeffs.empty() == !symbolic)
        throw UsageError("invariants needs exactly one of --gcoeffs, --symbolic");
    json out;
    if (symbolic) {
        const std::vector<std::string> vars = {"a", "b", "c", "d"};
        const auto v = [&](const char* n) { return MPoly<Rat>::variable(vars, n, Rat(1)); };
        const std::array<MPoly<Rat>, 4> sym = {v("a"), v("b"), v("c"), v("d")};
        const auto inv = invariants(g_form(sym));
        out["H"] = poly_json(inv.H, as_json);
        out["L"] = poly_json(inv.L, as_json);
        out["M"] = poly_json(inv.M, as_json);
        out["D"] = poly_json(inv.D, as_json);
        out["R"] = poly_json(inv.R, as_json);
        out["S"] = poly_json(inv.S, as_json);
        out["T"] = poly_json(inv.T, as_json);
        if (with_form) {
            std::vector<std::string> joint = vars;
            joint.insert(joint.end(), xy_names().begin(), xy_names().end());
            const auto vj = [&](const std::string& n) {
                return MPoly<Rat>::variable(joint, n, Rat(1));
            };
            const std::array<MPoly<Rat>, 4> symj = {vj("a"), vj("b"), vj("c"), vj("d")};
            const MPoly<Rat> poly = form_polynomial(
                g_form(symj).a, {"x1", "y1", "x2", "y2", "x3", "y3", "x4", "y4"});
            out["form"] = poly_json(poly, as_json);
        }
    } else {
        const GQuad g = parse_gquad(gcoeffs);
        const auto inv = invariants(g_form(g));
        out["H"] = rat_str(inv.H);
        out["L"] = rat_str(inv.L);
        out["M"] = rat_str(inv.M);
        out["D"] = rat_str(inv.D);
        out["R"] = rat_str(inv.R);
        out["S"] = rat_str(inv.S);
        out["T"] = rat_str(inv.T);
        if (with_form) out["form"] = poly_json(form_polynomial(g_form(g), xy_names()), as_json);
    }
    emit(out, as_json);
    return 0;
}

int run_quotient(const std::string& gcoeffs, bool as_json) {
    const auto wp = modulilab::forms::quotient_point(parse_gquad(gcoeffs));
    json out;
    out["wpoint"] = rat_array(wp.coords);
    emit(out, as_json);
    return 0;
}

int run_orbit(const std::string& gcoeffs, bool as_json) {
    Timer t("orbit");
    const auto group = projective_group();
    auto orb = modulilab::weyl::orbit(group, parse_gquad(gcoeffs));
    std::sort(orb.begin(), orb.end(), [](const GQuad& a, const GQuad& b) {
        for (int i = 0; i < 4; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    json out;
    out["size"] = orb.size();
    json pts = json::array();
    for (const auto& p : orb) pts.push_back(gquad_json(p));
    out["points"] = pts;
    emit(out, as_json);
    return 0;
}

int run_stabilizer(const std::string& gcoeffs, bool as_json) {
    Timer t("stabilizer");
    const auto group = projective_group();
    const auto stab = modulilab::weyl::stabilizer(group, parse_gquad(gcoeffs));
    json out;
    out["order"] = stab.elements.size();
    json mats = json::array();
    for (const auto& m : stab.elements) {
        json rows = json::array();
        for (const auto& row : m) rows.push_back(rat_array({row[0], row[1], row[2], row[3]}));
        mats.push_back(rows);
    }
    out["elements"] = mats;
    emit(out, as_json);
    return 0;
}

json report_json(const modulilab::strata::SingReport& r) {
    json out;
    out["prime"] = r.prime;
    out["count"] = r.count;
    json charts = json::object();
    for (const auto& [mask, n] : r.per_chart) charts[mask] = n;
    out["per_chart"] = charts;
    return out;
}

int run_oracle_count(const std::string& gcoeffs, const std::string& ecoeffs,
                     std::uint64_t prime, bool as_json) {
    using namespace modulilab::strata;
    const int given = (!gcoeffs.empty()) + (!ecoeffs.empty());
    if (given != 1) throw UsageError("oracle-count needs exactly one of --gcoeffs, --ecoeffs");
    std::vector<std::uint64_t> primes;
    if (prime != 0) {
        if (!is_odd_prime(prime)) throw UsageError("--prime must be an odd prime");
        primes = {prime};
    } else {
        primes = {5, 7};
    }
    json reports = json::array();
    for (std::uint64_t p : primes) {
        Timer t("oracle p=" + std::to_string(p));
        reports.push_back(report_json(gcoeffs.empty()
                                          ? oracle_count_22(parse_ecoeffs(ecoeffs), p)
                                          : oracle_count_1111(parse_gquad(gcoeffs), p)));
    }
    if (reports.size() == 1) {
        emit(reports[0], as_json);
    } else {
        json out;
        out["reports"] = reports;
        if (as_json) {
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& r : reports)
                std::cout << "p=" << r["prime"] << "  count=" << r["count"] << "\n";
        }
    }
    return 0;
}

int run_beta(const std::string& preset, bool as_json) {
    using namespace modulilab::stability;
    if (preset.empty()) throw UsageError("beta needs --preset NAME");
    const auto it = presets().find(preset);
    if (it == presets().end()) throw UsageError("unknown preset '" + preset + "'");
    json out;
    out["preset"] = preset;
    if (it->second.kind == PresetKind::DeltaConstant) {
        out["delta"] = rat_str(it->second.value);
    } else {
        const auto rep = stability_report(preset);
        out["s"] = rat_str(rep.s_value);
        out["a"] = rat_str(rep.a_value);
        out["beta"] = rat_str(rep.beta);
    }
    emit(out, as_json);
    return 0;
}

int run_fan(const std::string& check, bool as_json) {
    using namespace modulilab::toric;
    const Fan fan = moduli_fan();
    json out;
    json rays = json::array();
    for (const auto& r : fan.rays) rays.push_back({r[0], r[1], r[2]});
    out["rays"] = rays;
    json cones = json::array();
    for (const auto& c : fan.maximal_cones) cones.push_back({c[0], c[1], c[2]});
    out["maximal_cones"] = cones;
    const bool all = check == "all";
    if (all || check == "multiplicities") {
        json mult = json::array();
        for (const auto& c : fan.maximal_cones) mult.push_back(cone_multiplicity(fan, c));
        out["multiplicities"] = mult;
    }
    if (all || check == "complete") out["complete"] = fan_is_complete(fan);
    if (all || check == "star") out["star_subdivision"] = star_subdivision_check();
    if (all || check == "ideal") {
        json ideal;
        json exps = json::array();
        for (const auto& e : moduli_ideal().exponents) exps.push_back({e[0], e[1], e[2]});
        ideal["exponents"] = exps;
        ideal["weights"] = {1, 2, 3};
        ideal["orders"] = ideal_weighted_orders({1, 2, 3});
        out["ideal"] = ideal;
    }
    emit(out, as_json);
    return 0;
}

int run_strata_scan(bool as_json) {
    using namespace modulilab::strata;
    json rows = json::array();
    if (!as_json) std::cout << "a,d,stratum\n";
    for (int i = -10; i <= 10; ++i) {
        for (int j = -10; j <= 10; ++j) {
            const Rat a(i, 10), d(j, 10);
            const std::string label = to_string(classify_p3({a, -a, Rat(1), d}));
            if (as_json) {
                rows.push_back({{"a", rat_str(a)}, {"d", rat_str(d)}, {"stratum", label}});
            } else {
                std::cout << rat_str(a) << "," << rat_str(d) << "," << label << "\n";
            }
        }
    }
    if (as_json) std::cout << json{{"rows", rows}}.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for degree (1,1,1,1) divisors in (P^1)^4: "
                 "normal forms, invariants, group orbits, strata, fans, stability"};
    app.require_subcommand(1);

    std::string gcoeffs, ecoeffs, cpoint, preset, suite = "all", check = "all";
    std::uint64_t prime = 0;
    bool as_json = false, table = false, symbolic = false, points = false, with_form = false;
    unsigned order = 20;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "JSON output");
        cmd->add_flag("--table", table, "aligned table output (default)");
    };

    auto* classify = app.add_subcommand("classify", "stratum of a parameter point");
    classify->add_option("--gcoeffs", gcoeffs, "a,b,c,d");
    classify->add_option("--ecoeffs", ecoeffs, "a,b,c");
    classify->add_option("--cpoint", cpoint, "c0,c1,c2,c3 (line-configuration pipeline)");
    classify->add_flag("--points", points, "include the catalogued singular points");
    add_format(classify);

    auto* invariants = app.add_subcommand("invariants", "H, L, M, D, R, S, T of the form");
    invariants->add_option("--gcoeffs", gcoeffs, "a,b,c,d");
    invariants->add_flag("--symbolic", symbolic, "closed forms in a, b, c, d");
    invariants->add_flag("--form", with_form, "include the quadrilinear polynomial itself");
    add_format(invariants);

    auto* quotient = app.add_subcommand("quotient", "(H : R : S : T) in P(1,3,4,6)");
    quotient->add_option("--gcoeffs", gcoeffs, "a,b,c,d")->required();
    add_format(quotient);

    auto* orbit = app.add_subcommand("orbit", "orbit under the projective group");
    orbit->add_option("--gcoeffs", gcoeffs, "a,b,c,d")->required();
    add_format(orbit);

    auto* stab = app.add_subcommand("stabilizer", "stabilizer in the projective group");
    stab->add_option("--gcoeffs", gcoeffs, "a,b,c,d")->required();
    add_format(stab);

    auto* oracle = app.add_subcommand("oracle-count", "singular F_p point count");
    oracle->add_option("--gcoeffs", gcoeffs, "a,b,c,d");
    oracle->add_option("--ecoeffs", ecoeffs, "a,b,c");
    oracle->add_option("--prime", prime, "odd prime (default: both 5 and 7)");
    add_format(oracle);

    auto* beta = app.add_subcommand("beta", "stability report for a named profile");
    beta->add_option("--preset", preset, "divisor-E, divisor-Eprime, divisor-F-corrected, "
                                         "divisor-F-literal, fiber-S, delta-sextic-dP");
    add_format(beta);

    auto* fan = app.add_subcommand("fan", "rays, cones, and fan verifications");
    fan->add_option("--check", check, "all, complete, multiplicities, star, ideal");
    add_format(fan);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "appendix, section3, invariants, group, fan, stability, all");
    verify->add_flag("--symbolic", symbolic, "full symbolic mode for the heavy identities");
    verify->add_option("--order", order, "series truncation order (default 20)");
    add_format(verify);

    auto* scan = app.add_subcommand("strata-scan", "CSV stratum grid on the plane a+b=0");
    add_format(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*classify) return run_classify(gcoeffs, ecoeffs, cpoint, points, as_json);
        if (*invariants) return run_invariants(gcoeffs, symbolic, with_form, as_json);
        if (*quotient) return run_quotient(gcoeffs, as_json);
        if (*orbit) return run_orbit(gcoeffs, as_json);
        if (*stab) return run_stabilizer(gcoeffs, as_json);
        if (*oracle) return run_oracle_count(gcoeffs, ecoeffs, prime, as_json);
        if (*beta) return run_beta(preset, as_json);
        if (*fan) return run_fan(check, as_json);
        if (*verify) return run_verify(suite, symbolic, as_json, order);
        if (*scan) return run_strata_scan(as_json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
