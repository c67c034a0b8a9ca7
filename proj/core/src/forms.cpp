#include "modulilab/forms.hpp"

#include "modulilab/series.hpp"

namespace modulilab::forms {

namespace {

void enumerate(const std::vector<int>& weights, int remaining, size_t pos, Exponents& cur,
               std::vector<Exponents>& out) {
    if (pos == weights.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int k = 0; k * weights[pos] <= remaining; ++k) {
        cur[pos] = static_cast<unsigned>(k);
        enumerate(weights, remaining - k * weights[pos], pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> weighted_monomials(const std::vector<int>& weights, int degree) {
    std::vector<Exponents> out;
    Exponents cur(weights.size(), 0);
    enumerate(weights, degree, 0, cur, out);
    return out;
}

bool wp_equal(const WeightedPoint& P, const WeightedPoint& Q) {
    if (P.weights != Q.weights) throw std::invalid_argument("weight vectors differ");
    return wp_equal_vectors(P.weights, P.coords, Q.coords);
}

WeightedPoint quotient_point(const GQuad& g) {
    const auto inv = invariants(g_form(g));
    WeightedPoint p{{1, 3, 4, 6}, {inv.H, inv.R, inv.S, inv.T}};
    bool all_zero = true;
    for (const auto& x : p.coords) all_zero = all_zero && x == 0;
    if (all_zero)
        throw std::logic_error("all four invariants vanish on a nonzero quadruple");
    return p;
}

WeightedPoint phi_chain(const GQuad& g) {
    if (g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0)
        throw std::invalid_argument("zero coefficient quadruple");
    const auto v = phi_chain_map(g);
    return WeightedPoint{{1, 3, 4, 6}, {v[0], v[1], v[2], v[3]}};
}

Exponents basis_exponents(int m) {
    if (m < 0 || m > 15) throw std::invalid_argument("basis index out of range");
    Exponents e(8, 0);
    for (int f = 0; f < 4; ++f) {
        const unsigned bit = (static_cast<unsigned>(m) >> (3 - f)) & 1u;
        e[2 * static_cast<size_t>(f)] = bit;
        e[2 * static_cast<size_t>(f) + 1] = 1u - bit;
    }
    return e;
}

MPoly<Rat> form_polynomial(const Form1111<Rat>& f, const std::vector<std::string>& xyvars) {
    if (xyvars.size() != 8) throw std::invalid_argument("need exactly 8 coordinate names");
    MPoly<Rat> acc(xyvars);
    for (int m = 0; m < 16; ++m) {
        if (f.a[static_cast<size_t>(m)] == 0) continue;
        MPoly<Rat> term = MPoly<Rat>::constant(xyvars, f.a[static_cast<size_t>(m)]);
        const Exponents e = basis_exponents(m);
        for (size_t i = 0; i < 8; ++i)
            if (e[i] == 1) term = term * MPoly<Rat>::variable(xyvars, xyvars[i], Rat(1));
        acc = acc + term;
    }
    return acc;
}

MPoly<Rat> form_polynomial(const std::array<MPoly<Rat>, 16>& coeffs,
                           const std::array<std::string, 8>& xyvars) {
    const auto& vars = coeffs[0].variables();
    MPoly<Rat> acc(vars);
    for (int m = 0; m < 16; ++m) {
        MPoly<Rat> term = coeffs[static_cast<size_t>(m)];
        const Exponents e = basis_exponents(m);
        for (size_t i = 0; i < 8; ++i)
            if (e[i] == 1) term = term * MPoly<Rat>::variable(vars, xyvars[i], Rat(1));
        acc = acc + term;
    }
    return acc;
}

bool molien_check(unsigned order) {
    return algebra::molien_average(order) == algebra::molien_closed_form(order);
}

}  // namespace modulilab::forms
