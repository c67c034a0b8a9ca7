#include <doctest.h>

#include "modulilab/toric.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace modulilab::toric;

TEST_CASE("moduli fan shape") {
    const Fan f = moduli_fan();
    REQUIRE(f.rays.size() == 5);
    REQUIRE(f.maximal_cones.size() == 6);
    CHECK(f.rays[0] == Ray{1, 2, 3});
    CHECK(f.rays[4] == Ray{-3, -4, -6});
    // v4 + 3 v1 + 4 v2 + 6 v3 = 0 pins the weighted structure downstairs.
    for (int i = 0; i < 3; ++i)
        CHECK(f.rays[4][i] + 3 * f.rays[1][i] + 4 * f.rays[2][i] + 6 * f.rays[3][i] == 0);
    // The blow-up ray is the weighted combination of the cone it subdivides.
    for (int i = 0; i < 3; ++i)
        CHECK(f.rays[0][i] ==
              f.rays[1][i] + 2 * f.rays[2][i] + 3 * f.rays[3][i]);
}

TEST_CASE("cone multiplicities") {
    const Fan f = moduli_fan();
    const std::vector<long long> expect{3, 2, 1, 6, 4, 3};
    for (size_t i = 0; i < f.maximal_cones.size(); ++i)
        CHECK(cone_multiplicity(f, f.maximal_cones[i]) == expect[i]);
    // Order of the indices inside a cone does not matter.
    CHECK(cone_multiplicity(f, ConeIdx{2, 0, 1}) == 3);
    CHECK_THROWS_AS(cone_multiplicity(f, ConeIdx{0, 1, 4}), std::domain_error);

    const Fan p = p1346_fan();
    long long total = 0;
    for (const auto& cone : p.maximal_cones) total += cone_multiplicity(p, cone);
    CHECK(total == 14);  // 1 + 6 + 4 + 3 for P(1,3,4,6)
}

TEST_CASE("both fans are complete") {
    CHECK(fan_is_complete(moduli_fan()));
    CHECK(fan_is_complete(p1346_fan()));
    CHECK(fan_is_complete(moduli_fan(), 987654321, 2000));
}

TEST_CASE("completeness fails when a cone is removed") {
    Fan f = moduli_fan();
    f.maximal_cones.pop_back();
    CHECK(!fan_is_complete(f));

    Fan degenerate = moduli_fan();
    degenerate.maximal_cones[0] = {1, 1, 1};
    CHECK_THROWS_AS(fan_is_complete(degenerate), std::domain_error);
}

TEST_CASE("cone membership by Cramer signs") {
    const Ray a{1, 0, 0}, b{0, 1, 0}, c{0, 0, 1};
    CHECK(cone_contains(a, b, c, Ray{2, 3, 5}));
    CHECK(cone_contains(a, b, c, Ray{0, 0, 0}));
    CHECK(cone_contains(a, b, c, Ray{1, 0, 0}));
    CHECK(!cone_contains(a, b, c, Ray{-1, 2, 2}));
}

TEST_CASE("star subdivision replaces one cone by three") {
    const Fan base = p1346_fan();
    const Fan sub = star_subdivide(base, Ray{1, 2, 3}, ConeIdx{0, 1, 2});
    CHECK(sub.rays.size() == 5);
    CHECK(sub.maximal_cones.size() == 6);
    CHECK(fans_equal(sub, moduli_fan()));
    CHECK(star_subdivision_check());
    CHECK_THROWS_AS(star_subdivide(base, Ray{1, 2, 3}, ConeIdx{0, 1, 4}),
                    std::domain_error);
}

TEST_CASE("subdividing elsewhere gives a different fan") {
    const Fan base = p1346_fan();
    const Fan wrong_cone = star_subdivide(base, Ray{-2, -3, -5}, ConeIdx{3, 1, 2});
    CHECK(!fans_equal(wrong_cone, moduli_fan()));
    const Fan wrong_ray = star_subdivide(base, Ray{1, 1, 1}, ConeIdx{0, 1, 2});
    CHECK(!fans_equal(wrong_ray, moduli_fan()));
    CHECK(fans_equal(base, p1346_fan()));
    CHECK(!fans_equal(base, moduli_fan()));
}

TEST_CASE("fan equality ignores ray numbering") {
    Fan relabeled;
    const Fan f = moduli_fan();
    // Reverse the ray list and remap cone indices accordingly.
    relabeled.rays = {f.rays[4], f.rays[3], f.rays[2], f.rays[1], f.rays[0]};
    for (const auto& cone : f.maximal_cones)
        relabeled.maximal_cones.push_back({4 - cone[0], 4 - cone[1], 4 - cone[2]});
    CHECK(fans_equal(relabeled, f));
}

TEST_CASE("ideal generators and weighted orders") {
    const auto gens = moduli_ideal();
    REQUIRE(gens.exponents.size() == 7);
    const auto orders = ideal_weighted_orders({1, 2, 3});
    REQUIRE(orders.size() == 7);
    for (int o : orders) CHECK(o == 6);
    // Any other weight triple separates the generators.
    const auto other = ideal_weighted_orders({1, 1, 1});
    CHECK(std::count(other.begin(), other.end(), 6) != 7);
}
