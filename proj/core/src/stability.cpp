#include "modulilab/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace modulilab::stability {

namespace {

// Pieces sorted by lower endpoint; rejects empty and overlapping intervals
// and gaps, so the profile is a function on one interval.
std::vector<Piece> validated_pieces(const PiecewisePoly& v) {
    std::vector<Piece> pieces = v.pieces;
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    for (const Piece& piece : pieces)
        if (!(piece.lo < piece.hi)) throw std::invalid_argument("piece with lo >= hi");
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        if (pieces[i].lo < pieces[i - 1].hi) throw std::invalid_argument("overlapping pieces");
        if (pieces[i].lo > pieces[i - 1].hi)
            throw std::invalid_argument("gap between pieces");
    }
    return pieces;
}

}  // namespace

UPoly upoly_antiderivative(const UPoly& p) {
    UPoly out(p.size() + 1, Rat(0));
    for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p[k] / Rat(k + 1);
    return out;
}

Rat upoly_eval(const UPoly& p, const Rat& u) {
    Rat value(0);
    for (std::size_t k = p.size(); k-- > 0;) value = value * u + p[k];
    return value;
}

Rat integrate_piecewise(const PiecewisePoly& v) {
    Rat total(0);
    for (const Piece& piece : validated_pieces(v)) {
        const UPoly f = upoly_antiderivative(piece.poly);
        total += upoly_eval(f, piece.hi) - upoly_eval(f, piece.lo);
    }
    return total;
}

Rat integrate_piecewise_monomial(const PiecewisePoly& v) {
    Rat total(0);
    for (const Piece& piece : validated_pieces(v)) {
        Rat hi_pow = piece.hi, lo_pow = piece.lo;
        for (std::size_t k = 0; k < piece.poly.size(); ++k) {
            total += piece.poly[k] * (hi_pow - lo_pow) / Rat(k + 1);
            hi_pow *= piece.hi;
            lo_pow *= piece.lo;
        }
    }
    return total;
}

Rat s_value(const PiecewisePoly& v, const Rat& anticanonical_volume) {
    if (!(anticanonical_volume > 0))
        throw std::invalid_argument("anticanonical volume must be positive");
    return integrate_piecewise(v) / anticanonical_volume;
}

Rat beta_value(const Rat& a, const Rat& s) { return a - s; }

NemuroBound nemuro_bound() {
    // (2-u)^3 = 8 - 12u + 6u^2 - u^3 on [1,2]
    const PiecewisePoly tail{{{Rat(1), Rat(2), {Rat(8), Rat(-12), Rat(6), Rat(-1)}}}};
    NemuroBound b;
    b.factor = Rat(3, 4) + Rat(3, 4) * integrate_piecewise(tail);
    b.delta_bound = 1 / b.factor;
    // (-K_X)^3 = 24, (-K_S)^2 = 6 for the sextic del Pezzo fiber S
    const Rat delta_s = presets().at("delta-sextic-dP").value;
    b.crude_bound = (Rat(24) / 3) * delta_s / (2 * Rat(6));
    return b;
}

const std::map<std::string, Preset>& presets() {
    static const std::map<std::string, Preset>* table = [] {
        const Piece nef_piece{Rat(0), Rat(1), {Rat(24), Rat(0), Rat(-24), Rat(8)}};
        const Piece zariski_piece{Rat(1), Rat(2), {Rat(64), Rat(-96), Rat(48), Rat(-8)}};
        const Piece zariski_piece_literal{Rat(1), Rat(2),
                                          {Rat(0), Rat(64), Rat(-96), Rat(48), Rat(-8)}};

        auto* m = new std::map<std::string, Preset>;
        (*m)["divisor-F-corrected"] =
            Preset{PresetKind::Profile, {{nef_piece, zariski_piece}}, Rat(0), Rat(1)};
        (*m)["divisor-F-literal"] =
            Preset{PresetKind::Profile, {{nef_piece, zariski_piece_literal}}, Rat(0), Rat(1)};
        (*m)["divisor-Eprime"] =
            Preset{PresetKind::Profile, {{nef_piece, zariski_piece}}, Rat(0), Rat(1)};
        (*m)["divisor-E"] =
            Preset{PresetKind::Profile, {{nef_piece, zariski_piece}}, Rat(0), Rat(2)};
        (*m)["fiber-S"] = Preset{PresetKind::SConstant, {}, Rat(11, 16), Rat(1)};
        (*m)["delta-sextic-dP"] = Preset{PresetKind::DeltaConstant, {}, Rat(1), Rat(0)};
        return m;
    }();
    return *table;
}

Rat preset_s_value(const std::string& name) {
    const auto it = presets().find(name);
    if (it == presets().end()) throw std::invalid_argument("unknown preset '" + name + "'");
    switch (it->second.kind) {
        case PresetKind::Profile: return s_value(it->second.profile);
        case PresetKind::SConstant: return it->second.value;
        case PresetKind::DeltaConstant:
            throw std::domain_error("preset '" + name + "' is a delta constant, not an S-profile");
    }
    throw std::logic_error("unreachable preset kind");
}

StabilityReport stability_report(const std::string& name) {
    const Rat s = preset_s_value(name);
    const Rat a = presets().at(name).a_value;
    return StabilityReport{s, a, beta_value(a, s)};
}

}  // namespace modulilab::stability
