#include <doctest.h>

#include "modulilab/stability.hpp"

#include <stdexcept>

using namespace modulilab::stability;
using modulilab::algebra::Rat;

TEST_CASE("univariate polynomial helpers") {
    const UPoly p{Rat(1), Rat(2), Rat(3)};
    CHECK(upoly_eval(p, Rat(2)) == Rat(17));
    CHECK(upoly_eval(p, Rat(-1, 2)) == Rat(3, 4));
    CHECK(upoly_eval({}, Rat(5)) == Rat(0));
    const UPoly f = upoly_antiderivative({Rat(6), Rat(4)});
    CHECK(f == UPoly{Rat(0), Rat(6), Rat(2)});
    CHECK(upoly_eval(f, Rat(1)) - upoly_eval(f, Rat(0)) == Rat(8));
}

TEST_CASE("piecewise integration, two routes") {
    const PiecewisePoly v{{{Rat(0), Rat(1), {Rat(24), Rat(0), Rat(-24), Rat(8)}},
                           {Rat(1), Rat(2), {Rat(64), Rat(-96), Rat(48), Rat(-8)}}}};
    CHECK(integrate_piecewise(v) == Rat(20));
    CHECK(integrate_piecewise_monomial(v) == Rat(20));
    // Pieces may arrive unsorted.
    const PiecewisePoly shuffled{{v.pieces[1], v.pieces[0]}};
    CHECK(integrate_piecewise(shuffled) == Rat(20));
    for (const auto& [name, preset] : presets()) {
        if (preset.kind != PresetKind::Profile) continue;
        CHECK(integrate_piecewise(preset.profile) ==
              integrate_piecewise_monomial(preset.profile));
    }
}

TEST_CASE("profile validation") {
    const UPoly one{Rat(1)};
    CHECK_THROWS_AS(integrate_piecewise({{{Rat(1), Rat(1), one}}}), std::invalid_argument);
    CHECK_THROWS_AS(integrate_piecewise({{{Rat(2), Rat(1), one}}}), std::invalid_argument);
    CHECK_THROWS_AS(
        integrate_piecewise({{{Rat(0), Rat(1), one}, {Rat(1, 2), Rat(2), one}}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        integrate_piecewise({{{Rat(0), Rat(1), one}, {Rat(3, 2), Rat(2), one}}}),
        std::invalid_argument);
}

TEST_CASE("S and beta") {
    const PiecewisePoly v{{{Rat(0), Rat(2), {Rat(12)}}}};
    CHECK(s_value(v) == Rat(1));
    CHECK(s_value(v, Rat(48)) == Rat(1, 2));
    CHECK_THROWS_AS(s_value(v, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(s_value(v, Rat(-24)), std::invalid_argument);
    CHECK(beta_value(Rat(1), Rat(5, 6)) == Rat(1, 6));
    CHECK(beta_value(Rat(2), Rat(5, 6)) == Rat(7, 6));
}

TEST_CASE("preset S-values") {
    CHECK(preset_s_value("divisor-F-corrected") == Rat(5, 6));
    CHECK(preset_s_value("divisor-Eprime") == Rat(5, 6));
    CHECK(preset_s_value("divisor-E") == Rat(5, 6));
    CHECK(preset_s_value("divisor-F-literal") == Rat(17, 20));
    CHECK(preset_s_value("fiber-S") == Rat(11, 16));
    CHECK_THROWS_AS(preset_s_value("no-such-divisor"), std::invalid_argument);
    CHECK_THROWS_AS(preset_s_value("delta-sextic-dP"), std::domain_error);
}

TEST_CASE("preset table contents") {
    CHECK(presets().size() == 6);
    CHECK(presets().at("divisor-E").a_value == Rat(2));
    CHECK(presets().at("divisor-Eprime").a_value == Rat(1));
    CHECK(presets().at("fiber-S").kind == PresetKind::SConstant);
    CHECK(presets().at("delta-sextic-dP").kind == PresetKind::DeltaConstant);
    CHECK(presets().at("delta-sextic-dP").value == Rat(1));
}

TEST_CASE("stability reports") {
    const auto e = stability_report("divisor-E");
    CHECK(e.s_value == Rat(5, 6));
    CHECK(e.a_value == Rat(2));
    CHECK(e.beta == Rat(7, 6));
    const auto f = stability_report("divisor-F-corrected");
    CHECK(f.beta == Rat(1, 6));
    const auto s = stability_report("fiber-S");
    CHECK(s.beta == Rat(5, 16));
    const auto lit = stability_report("divisor-F-literal");
    CHECK(lit.beta == Rat(3, 20));
}

TEST_CASE("fibration bound for the local delta invariant") {
    const auto b = nemuro_bound();
    CHECK(b.factor == Rat(15, 16));
    CHECK(b.delta_bound == Rat(16, 15));
    CHECK(b.crude_bound == Rat(2, 3));
    CHECK(b.delta_bound > Rat(1));
    CHECK(b.delta_bound > b.crude_bound);
}
