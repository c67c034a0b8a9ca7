#include <doctest.h>

#include "modulilab/strata.hpp"
#include "modulilab/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace modulilab;
using algebra::Rat;
using forms::GQuad;
using strata::ECoeffs;
using strata::EPoint;
using strata::P14Point;
using strata::QI;
using strata::StratumE;
using strata::StratumP3;

namespace {

GQuad quad(long a, long b, long c, long d) { return {Rat(a), Rat(b), Rat(c), Rat(d)}; }

// Sign pattern of a point whose factors all sit at (1:+-1).
std::string mask(const P14Point& pt) {
    std::string m;
    for (const auto& f : pt) {
        REQUIRE(f.x == Rat(1));
        REQUIRE((f.y == Rat(1) || f.y == Rat(-1)));
        m += f.y == Rat(1) ? '+' : '-';
    }
    return m;
}

std::set<std::string> mask_set(const std::vector<P14Point>& pts) {
    std::set<std::string> s;
    for (const auto& p : pts) s.insert(mask(p));
    return s;
}

P14Point sign_point(const std::string& pattern) {
    P14Point pt;
    for (int f = 0; f < 4; ++f)
        pt[f] = strata::P1Point{Rat(1), Rat(pattern[static_cast<size_t>(f)] == '+' ? 1 : -1)};
    return pt;
}

const weyl::MatrixGroup& projective_group() {
    static const weyl::MatrixGroup g =
        weyl::project_mod_center(weyl::generate(weyl::gamma_generators()));
    return g;
}

}  // namespace

TEST_CASE("Gaussian rational arithmetic") {
    const QI i = QI::unit_i();
    CHECK(i * i == QI(-1));
    CHECK((QI(1) + i) * (QI(1) - i) == QI(2));
    CHECK(is_zero(QI(1) - QI(1)));
    CHECK(one_like(i) == QI(1));
}

TEST_CASE("stratum names") {
    CHECK(strata::to_string(StratumP3::Smooth) == "Smooth");
    CHECK(strata::to_string(StratumP3::Red) == "Red");
    CHECK(strata::to_string(StratumP3::Curv) == "Curv");
    CHECK(strata::to_string(StratumP3::SixA1) == "SixA1");
    CHECK(strata::to_string(StratumP3::FourA1) == "FourA1");
    CHECK(strata::to_string(StratumP3::TwoA1) == "TwoA1");
    CHECK(strata::to_string(StratumE::Base) == "Base");
    CHECK(strata::to_string(StratumE::CurvPlus) == "CurvPlus");
    CHECK(strata::to_string(StratumE::FourA1Plus) == "FourA1Plus");
    CHECK(strata::to_string(StratumE::TwoA1Plus) == "TwoA1Plus");
}

TEST_CASE("P^3 classifier on representatives") {
    CHECK(strata::classify_p3(quad(1, 2, 3, 5)) == StratumP3::Smooth);
    CHECK(strata::classify_p3(quad(1, 2, 3, 4)) == StratumP3::Smooth);

    CHECK(strata::classify_p3(quad(1, -1, 2, 3)) == StratumP3::TwoA1);
    CHECK(strata::classify_p3(quad(-165, 165, 1517, 173)) == StratumP3::TwoA1);
    CHECK(strata::classify_p3(quad(2, 3, 3, 7)) == StratumP3::TwoA1);

    CHECK(strata::classify_p3(quad(0, 0, 1, 2)) == StratumP3::FourA1);
    CHECK(strata::classify_p3(quad(1, -1, 2, -2)) == StratumP3::FourA1);
    CHECK(strata::classify_p3(quad(1, 2, -1, -2)) == StratumP3::FourA1);

    CHECK(strata::classify_p3(quad(0, 0, 1, 1)) == StratumP3::SixA1);
    CHECK(strata::classify_p3(quad(0, 0, 2, -2)) == StratumP3::SixA1);
    CHECK(strata::classify_p3(quad(0, 1, 0, -1)) == StratumP3::SixA1);

    CHECK(strata::classify_p3(quad(1, -1, 1, 2)) == StratumP3::Curv);
    CHECK(strata::classify_p3(quad(1, 1, -1, 5)) == StratumP3::Curv);
    CHECK(strata::classify_p3(quad(0, 2, -2, 2)) == StratumP3::Curv);

    CHECK(strata::classify_p3(quad(1, 1, 1, 1)) == StratumP3::Red);
    CHECK(strata::classify_p3(quad(1, -1, 1, 1)) == StratumP3::Red);
    CHECK(strata::classify_p3(quad(0, 0, 0, 1)) == StratumP3::Red);
    CHECK(strata::classify_p3(quad(1, 0, 0, 0)) == StratumP3::Red);

    CHECK_THROWS_AS(strata::classify_p3(quad(0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("exceptional classifier on representatives") {
    CHECK(strata::classify_e({Rat(2), Rat(3), Rat(5)}) == StratumE::Base);
    CHECK(strata::classify_e({Rat(0), Rat(1), Rat(2)}) == StratumE::Base);
    CHECK(strata::classify_e({Rat(1), Rat(0), Rat(0)}) == StratumE::FourA1Plus);
    CHECK(strata::classify_e({Rat(0), Rat(3), Rat(0)}) == StratumE::FourA1Plus);
    CHECK(strata::classify_e({Rat(0), Rat(0), Rat(-5)}) == StratumE::FourA1Plus);
    CHECK(strata::classify_e({Rat(1), Rat(1), Rat(2)}) == StratumE::TwoA1Plus);
    CHECK(strata::classify_e({Rat(2), Rat(3), Rat(-3)}) == StratumE::TwoA1Plus);
    CHECK(strata::classify_e({Rat(5), Rat(2), Rat(-5)}) == StratumE::TwoA1Plus);
    CHECK(strata::classify_e({Rat(1), Rat(1), Rat(1)}) == StratumE::CurvPlus);
    CHECK(strata::classify_e({Rat(2), Rat(-2), Rat(2)}) == StratumE::CurvPlus);
    CHECK_THROWS_AS(strata::classify_e({Rat(0), Rat(0), Rat(0)}), std::invalid_argument);
}

TEST_CASE("classifier is constant on group orbits") {
    const auto& g = projective_group();
    for (const GQuad& x : {quad(1, 2, 3, 5), quad(-165, 165, 1517, 173), quad(1, -1, 1, 2),
                           quad(0, 0, 1, 2), quad(0, 0, 1, 1), quad(1, -1, 1, 1)}) {
        const StratumP3 base = strata::classify_p3(x);
        for (size_t i = 0; i < g.elements.size(); i += 37)
            CHECK(strata::classify_p3(weyl::act(g.elements[i], x)) == base);
    }
}

TEST_CASE("catalogued singular points, six-node form") {
    const GQuad g = quad(0, 0, 1, 1);
    const auto pts = strata::expected_singular_points(g);
    REQUIRE(pts.size() == 6);
    CHECK(mask_set(pts) ==
          std::set<std::string>{"--++", "++++", "+--+", "-++-", "----", "++--"});
    for (const auto& pt : pts) CHECK(strata::is_singular_point_1111(g, pt));
    // On the divisor but smooth there; not part of the list.
    CHECK(!strata::is_singular_point_1111(g, sign_point("--+-")));
    CHECK(!strata::is_singular_point_1111(g, sign_point("+++-")));
}

TEST_CASE("catalogued singular points, four-node form") {
    for (long d : {2L, 3L, -5L}) {
        const GQuad g = quad(0, 0, 1, d);
        const auto pts = strata::expected_singular_points(g);
        REQUIRE(pts.size() == 4);
        CHECK(mask_set(pts) == std::set<std::string>{"--++", "++++", "----", "++--"});
        for (const auto& pt : pts) CHECK(strata::is_singular_point_1111(g, pt));
        CHECK(!strata::is_singular_point_1111(g, sign_point("+--+")));
    }
}

TEST_CASE("catalogued singular points, two-node form") {
    for (const GQuad& g : {quad(1, -1, 2, 3), quad(2, -2, 3, 7), quad(-165, 165, 1517, 173)}) {
        const auto pts = strata::expected_singular_points(g);
        REQUIRE(pts.size() == 2);
        CHECK(mask_set(pts) == std::set<std::string>{"++++", "----"});
        for (const auto& pt : pts) CHECK(strata::is_singular_point_1111(g, pt));
        CHECK(!strata::is_singular_point_1111(g, sign_point("--++")));
        CHECK(!strata::is_singular_point_1111(g, sign_point("++--")));
    }
}

TEST_CASE("catalogue refuses uncatalogued normal forms") {
    CHECK_THROWS_AS(strata::expected_singular_points(quad(1, 2, 3, 5)), std::domain_error);
    CHECK_THROWS_AS(strata::expected_singular_points(quad(0, 0, 1, -1)), std::domain_error);
    CHECK_THROWS_AS(strata::expected_singular_points(quad(1, -1, 2, -2)), std::domain_error);
    CHECK_THROWS_AS(strata::expected_singular_points(quad(1, -1, 1, 1)), std::domain_error);
    CHECK_THROWS_AS(strata::expected_singular_points(quad(1, -1, 1, 2)), std::domain_error);
}

TEST_CASE("exceptional catalogue, coordinate points") {
    const ECoeffs ea{Rat(3), Rat(0), Rat(0)};
    const auto pa = strata::expected_singular_points(ea);
    REQUIRE(pa.size() == 4);
    for (const auto& pt : pa) CHECK(strata::is_singular_point_22(ea, pt));

    const ECoeffs eb{Rat(0), Rat(2), Rat(0)};
    const auto pb = strata::expected_singular_points(eb);
    REQUIRE(pb.size() == 4);
    for (const auto& pt : pb) {
        CHECK(strata::is_singular_point_22(eb, pt));
        // These four live over Q(i), not Q.
        CHECK((!pt.first.s.im.is_zero() || !pt.first.t.im.is_zero()));
    }

    const ECoeffs ec{Rat(0), Rat(0), Rat(7)};
    const auto pc = strata::expected_singular_points(ec);
    REQUIRE(pc.size() == 4);
    for (const auto& pt : pc) CHECK(strata::is_singular_point_22(ec, pt));
}

TEST_CASE("exceptional catalogue, single coincidences") {
    const std::vector<ECoeffs> cases{
        {Rat(2), Rat(3), Rat(-3)},  // b + c = 0
        {Rat(2), Rat(3), Rat(3)},   // b - c = 0
        {Rat(3), Rat(3), Rat(5)},   // a - b = 0
        {Rat(3), Rat(5), Rat(3)},   // a - c = 0
        {Rat(3), Rat(5), Rat(-3)},  // a + c = 0
        {Rat(3), Rat(-3), Rat(5)},  // a + b = 0
    };
    for (const auto& e : cases) {
        REQUIRE(strata::classify_e(e) == StratumE::TwoA1Plus);
        const auto pts = strata::expected_singular_points(e);
        REQUIRE(pts.size() == 2);
        for (const auto& pt : pts) CHECK(strata::is_singular_point_22(e, pt));
    }
}

TEST_CASE("exceptional catalogue, base and curve cases") {
    CHECK(strata::expected_singular_points(ECoeffs{Rat(2), Rat(3), Rat(5)}).empty());
    CHECK_THROWS_AS(strata::expected_singular_points(ECoeffs{Rat(1), Rat(1), Rat(1)}),
                    std::domain_error);
    CHECK_THROWS_AS(strata::expected_singular_points(ECoeffs{Rat(1), Rat(-1), Rat(1)}),
                    std::domain_error);
}

TEST_CASE("rational singularity witness rejects off-divisor points") {
    CHECK(!strata::is_singular_point_1111(quad(1, 2, 3, 5), sign_point("++++")));
    strata::P14Point degenerate = sign_point("++++");
    degenerate[2] = strata::P1Point{Rat(0), Rat(0)};
    CHECK_THROWS_AS(strata::is_singular_point_1111(quad(0, 0, 1, 1), degenerate),
                    std::invalid_argument);
    const EPoint off{{QI(1), QI(0), QI(0)}, {QI(1), QI(0), QI(0)}};
    CHECK(!strata::is_singular_point_22(ECoeffs{Rat(2), Rat(3), Rat(5)}, off));
}

TEST_CASE("finite-field counts, product side") {
    const auto run = [](const GQuad& g, std::uint64_t p) {
        const auto r = strata::oracle_count_1111(g, p);
        long long total = 0;
        for (const auto& [chart, n] : r.per_chart) total += n;
        CHECK(total == r.count);
        return r.count;
    };
    CHECK(run(quad(0, 0, 1, 1), 5) == 6);
    CHECK(run(quad(0, 0, 1, 1), 7) == 6);

    CHECK(run(quad(1, -1, 1, 2), 5) == 6);
    CHECK(run(quad(1, -1, 1, 2), 7) == 8);  // p + 1: singular along a curve

    CHECK(run(quad(1, 2, 3, 5), 5) == 2);
    CHECK(run(quad(1, 2, 3, 5), 7) == 0);
    CHECK(run(quad(1, 2, 3, 5), 11) == 0);

    CHECK(run(quad(0, 0, 1, 2), 5) == 4);
    CHECK(run(quad(0, 0, 1, 2), 7) == 4);
    CHECK(run(quad(0, 0, 1, 2), 11) == 4);

    CHECK(run(quad(-165, 165, 1517, 173), 5) == 6);
    CHECK(run(quad(-165, 165, 1517, 173), 7) == 4);
    CHECK(run(quad(-165, 165, 1517, 173), 17) == 2);

    CHECK(run(quad(1, -1, 1, 1), 5) == 36);
    CHECK(run(quad(1, -1, 1, 1), 7) == 64);
}

TEST_CASE("finite-field counts, limit side") {
    const auto run = [](long a, long b, long c, std::uint64_t p) {
        const auto r = strata::oracle_count_22({Rat(a), Rat(b), Rat(c)}, p);
        long long total = 0;
        for (const auto& [chart, n] : r.per_chart) total += n;
        CHECK(total == r.count);
        return r.count;
    };
    CHECK(run(1, 0, 0, 5) == 16);
    CHECK(run(1, 0, 0, 7) == 20);
    CHECK(run(2, 3, 5, 5) == 14);
    CHECK(run(2, 3, 5, 7) == 16);
    CHECK(run(1, 1, 1, 5) == 18);
    CHECK(run(1, 1, 1, 7) == 24);
    // At p = 7 the base contributes 16; the four extra nodes and the extra
    // p + 1 curve points sit on top of it.
    CHECK(run(1, 0, 0, 7) - run(2, 3, 5, 7) == 4);
    CHECK(run(1, 1, 1, 7) - run(2, 3, 5, 7) == 8);
}

TEST_CASE("oracle chart masks are consistent") {
    const auto r = strata::oracle_count_1111(quad(0, 0, 1, 1), 7);
    REQUIRE(r.per_chart.count("0000") == 1);
    CHECK(r.per_chart.at("0000") == 6);
    CHECK(r.prime == 7);
}

TEST_CASE("oracle rejects bad reduction") {
    CHECK_THROWS_AS(strata::oracle_count_1111({Rat(1, 5), Rat(-1, 5), Rat(1), Rat(1)}, 5),
                    std::domain_error);
    CHECK_THROWS_AS(strata::oracle_count_22({Rat(1, 7), Rat(3), Rat(5)}, 7),
                    std::domain_error);
    CHECK_THROWS_AS(strata::oracle_count_1111(quad(1, 2, 3, 5), 4), std::invalid_argument);
}
