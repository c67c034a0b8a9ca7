#include "modulilab/strata.hpp"

#include <cstddef>

namespace modulilab::strata {

namespace {

std::array<Rat, 4> coordinate_squares(const GQuad& g) {
    return {g[0] * g[0], g[1] * g[1], g[2] * g[2], g[3] * g[3]};
}

int zero_count(const GQuad& g) {
    int n = 0;
    for (const Rat& x : g)
        if (x.is_zero()) ++n;
    return n;
}

// Points with every factor at (1:1) or (1:-1), written as a sign pattern.
P14Point sign_point(const char* pattern) {
    P14Point pt;
    for (int f = 0; f < 4; ++f) pt[f] = P1Point{Rat(1), Rat(pattern[f] == '+' ? 1 : -1)};
    return pt;
}

std::vector<P14Point> sign_points(const std::vector<const char*>& patterns) {
    std::vector<P14Point> out;
    out.reserve(patterns.size());
    for (const char* p : patterns) out.push_back(sign_point(p));
    return out;
}

EPoint epair(const P112Point& first, const P112Point& second) { return {first, second}; }

}  // namespace

std::string to_string(StratumP3 s) {
    switch (s) {
        case StratumP3::Smooth: return "Smooth";
        case StratumP3::Red: return "Red";
        case StratumP3::Curv: return "Curv";
        case StratumP3::SixA1: return "SixA1";
        case StratumP3::FourA1: return "FourA1";
        case StratumP3::TwoA1: return "TwoA1";
    }
    throw std::logic_error("unreachable stratum tag");
}

std::string to_string(StratumE s) {
    switch (s) {
        case StratumE::Base: return "Base";
        case StratumE::CurvPlus: return "CurvPlus";
        case StratumE::FourA1Plus: return "FourA1Plus";
        case StratumE::TwoA1Plus: return "TwoA1Plus";
    }
    throw std::logic_error("unreachable stratum tag");
}

StratumP3 classify_p3(const GQuad& g) {
    const int zeros = zero_count(g);
    if (zeros == 4) throw std::invalid_argument("zero coefficient quadruple");
    const std::array<Rat, 4> s = coordinate_squares(g);

    if ((s[0] == s[1] && s[1] == s[2] && s[2] == s[3]) || zeros >= 3) return StratumP3::Red;

    for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> idx{};
        int n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) idx[n++] = i;
        if (s[idx[0]] == s[idx[1]] && s[idx[1]] == s[idx[2]] && !s[idx[0]].is_zero())
            return StratumP3::Curv;
    }

    if (zeros == 2) {
        std::array<int, 2> nz{};
        int n = 0;
        for (int i = 0; i < 4; ++i)
            if (!g[i].is_zero()) nz[n++] = i;
        return s[nz[0]] == s[nz[1]] ? StratumP3::SixA1 : StratumP3::FourA1;
    }

    constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings)
        if (s[pr[0]] == s[pr[1]] && s[pr[2]] == s[pr[3]]) return StratumP3::FourA1;

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (s[i] == s[j]) return StratumP3::TwoA1;

    return StratumP3::Smooth;
}

StratumE classify_e(const ECoeffs& e) {
    if (e.a.is_zero() && e.b.is_zero() && e.c.is_zero())
        throw std::invalid_argument("zero coefficient triple");
    const Rat sa = e.a * e.a, sb = e.b * e.b, sc = e.c * e.c;

    if (sa == sb && sb == sc) return StratumE::CurvPlus;

    const int nonzero = (e.a.is_zero() ? 0 : 1) + (e.b.is_zero() ? 0 : 1) + (e.c.is_zero() ? 0 : 1);
    if (nonzero == 1) return StratumE::FourA1Plus;

    if (sa == sb || sa == sc || sb == sc) return StratumE::TwoA1Plus;
    return StratumE::Base;
}

std::vector<P14Point> expected_singular_points(const GQuad& g) {
    const StratumP3 tag = classify_p3(g);
    if (g[0] + g[1] != 0)
        throw std::domain_error("no catalogued list: (a:b:c:d) lies outside the plane a+b=0");

    if (tag == StratumP3::Red) throw std::domain_error("no catalogued list: the divisor is reducible");
    if (tag == StratumP3::Curv)
        throw std::domain_error(
            "no catalogued list: singular along the curve {((u:v),(v:u),(u:v),(v:u))}");

    if (tag == StratumP3::SixA1) {
        // catalogued representative: (0:0:c:c), projectively (0:0:1:1)
        if (!g[0].is_zero() || g[3] != g[2])
            throw std::domain_error(
                "no catalogued list: only (0:0:1:1) of the SixA1 stratum is catalogued");
        return sign_points({"--++", "++++", "+--+", "-++-", "----", "++--"});
    }
    if (tag == StratumP3::FourA1) {
        // catalogued representative: (0:0:c:d); here d/c is never 0 or +-1
        if (!g[0].is_zero())
            throw std::domain_error(
                "no catalogued list: the FourA1 stratum is catalogued only in the form (0:0:1:d)");
        return sign_points({"--++", "++++", "----", "++--"});
    }
    return sign_points({"++++", "----"});
}

std::vector<EPoint> expected_singular_points(const ECoeffs& e) {
    const StratumE tag = classify_e(e);
    const QI one(1), zero, iu = QI::unit_i();

    const P112Point s_pole{one, zero, zero};    // (1:0:0)
    const P112Point t_pole{zero, one, zero};    // (0:1:0)
    const P112Point pp{one, one, zero};         // (1:1:0)
    const P112Point pm{one, -one, zero};        // (1:-1:0)
    const P112Point gi{one, iu, zero};          // (1:i:0)
    const P112Point gmi{one, -iu, zero};        // (1:-i:0)
    const P112Point ip{iu, one, zero};          // (i:1:0)
    const P112Point imp{-iu, one, zero};        // (-i:1:0)

    switch (tag) {
        case StratumE::Base:
            return {};
        case StratumE::CurvPlus: {
            const bool bpos = (e.b == e.a), cpos = (e.c == e.a);
            const std::string mid = bpos ? (cpos ? "s1s2 + t1t2" : "s1t2 + t1s2")
                                         : (cpos ? "s1t2 - t1s2" : "s1s2 - t1t2");
            throw std::domain_error("no catalogued list: singular along the curve {w1 = w2 = " +
                                    mid + " = 0}");
        }
        case StratumE::FourA1Plus: {
            if (!e.a.is_zero())
                return {epair(s_pole, s_pole), epair(s_pole, t_pole), epair(t_pole, s_pole),
                        epair(t_pole, t_pole)};
            if (!e.b.is_zero())
                return {epair(ip, ip), epair(ip, imp), epair(imp, ip), epair(imp, imp)};
            return {epair(pp, pp), epair(pp, pm), epair(pm, pp), epair(pm, pm)};
        }
        case StratumE::TwoA1Plus: {
            // Exactly one of the six factors vanishes here: any two vanishing
            // together force the CurvPlus or FourA1Plus stratum.
            if (e.b + e.c == 0) return {epair(s_pole, s_pole), epair(t_pole, t_pole)};
            if (e.b - e.c == 0) return {epair(s_pole, t_pole), epair(t_pole, s_pole)};
            if (e.a - e.b == 0) return {epair(pp, pm), epair(pm, pp)};
            if (e.a - e.c == 0) return {epair(gi, gi), epair(gmi, gmi)};
            if (e.a + e.c == 0) return {epair(gi, gmi), epair(gmi, gi)};
            return {epair(pp, pp), epair(pm, pm)};
        }
    }
    throw std::logic_error("unreachable stratum tag");
}

namespace {

Form1111<FpElem> reduce_form(const GQuad& g, std::uint64_t p) {
    const Form1111<Rat> f = forms::g_form(g);
    const FpElem zero(0, p);
    Form1111<FpElem> out{{zero, zero, zero, zero, zero, zero, zero, zero, zero, zero, zero, zero,
                          zero, zero, zero, zero}};
    for (int m = 0; m < 16; ++m) out.a[m] = algebra::fp_from_rat(f.a[m], p);
    return out;
}

}  // namespace

SingReport oracle_count_1111(const GQuad& g, std::uint64_t p) {
    const Form1111<FpElem> f = reduce_form(g, p);

    std::vector<std::array<FpElem, 2>> line;
    line.reserve(p + 1);
    for (std::uint64_t t = 0; t < p; ++t)
        line.push_back({FpElem(1, p), FpElem(static_cast<std::int64_t>(t), p)});
    line.push_back({FpElem(0, p), FpElem(1, p)});

    SingReport report;
    report.prime = p;
    const std::size_t n = line.size();
    std::array<std::array<FpElem, 2>, 4> pt{line[0], line[0], line[0], line[0]};
    for (std::size_t i0 = 0; i0 < n; ++i0) {
        pt[0] = line[i0];
        for (std::size_t i1 = 0; i1 < n; ++i1) {
            pt[1] = line[i1];
            for (std::size_t i2 = 0; i2 < n; ++i2) {
                pt[2] = line[i2];
                for (std::size_t i3 = 0; i3 < n; ++i3) {
                    pt[3] = line[i3];
                    if (!is_zero(form_value(f, pt))) continue;
                    bool singular = true;
                    for (int factor = 0; factor < 4 && singular; ++factor) {
                        const bool wrt_x = is_zero(pt[factor][0]);
                        if (!is_zero(form_partial(f, pt, factor, wrt_x))) singular = false;
                    }
                    if (!singular) continue;
                    ++report.count;
                    std::string chart(4, '0');
                    for (int factor = 0; factor < 4; ++factor)
                        if (is_zero(pt[factor][0])) chart[factor] = '1';
                    ++report.per_chart[chart];
                }
            }
        }
    }
    return report;
}

SingReport oracle_count_22(const ECoeffs& e, std::uint64_t p) {
    if (e.a.is_zero() && e.b.is_zero() && e.c.is_zero())
        throw std::invalid_argument("zero coefficient triple");
    const FpElem A = algebra::fp_from_rat(e.a, p);
    const FpElem B4 = algebra::fp_from_rat(e.b / 4, p);
    const FpElem C4 = algebra::fp_from_rat(e.c / 4, p);

    // Canonical representatives of the quadric cone {u2u3 = u4^2} in P^3.
    std::vector<std::array<FpElem, 4>> cone;
    std::vector<int> lead_index;
    for (int lead = 0; lead < 4; ++lead) {
        const int free = 3 - lead;
        std::vector<std::uint64_t> digits(free, 0);
        while (true) {
            std::array<FpElem, 4> u{FpElem(0, p), FpElem(0, p), FpElem(0, p), FpElem(0, p)};
            u[lead] = FpElem(1, p);
            for (int k = 0; k < free; ++k)
                u[lead + 1 + k] = FpElem(static_cast<std::int64_t>(digits[k]), p);
            if (u[1] * u[2] == u[3] * u[3]) {
                cone.push_back(u);
                lead_index.push_back(lead);
            }
            int k = free - 1;
            while (k >= 0 && digits[k] == p - 1) digits[k--] = 0;
            if (k < 0) break;
            ++digits[k];
        }
    }

    SingReport report;
    report.prime = p;
    for (std::size_t i = 0; i < cone.size(); ++i) {
        for (std::size_t j = 0; j < cone.size(); ++j) {
            const auto eqs = ci_equations(A, B4, C4, cone[i], cone[j]);
            if (!is_zero(eqs[2])) continue;
            const auto jac = ci_jacobian(A, B4, C4, cone[i], cone[j]);
            std::vector<std::vector<FpElem>> rows;
            rows.reserve(3);
            for (const auto& row : jac) rows.emplace_back(row.begin(), row.end());
            if (matrix_rank(std::move(rows)) >= 3) continue;
            ++report.count;
            const std::string chart =
                "u" + std::to_string(lead_index[i] + 1) + "v" + std::to_string(lead_index[j] + 1);
            ++report.per_chart[chart];
        }
    }
    return report;
}

bool is_singular_point_1111(const GQuad& g, const P14Point& pt) {
    const Form1111<Rat> f = forms::g_form(g);
    std::array<std::array<Rat, 2>, 4> q;
    for (int factor = 0; factor < 4; ++factor) {
        if (pt[factor].x.is_zero() && pt[factor].y.is_zero())
            throw std::invalid_argument("(0:0) is not a point of P^1");
        q[factor] = {pt[factor].x, pt[factor].y};
    }
    if (!form_value(f, q).is_zero()) return false;
    for (int factor = 0; factor < 4; ++factor)
        for (const bool wrt_x : {true, false})
            if (!form_partial(f, q, factor, wrt_x).is_zero()) return false;
    return true;
}

bool is_singular_point_22(const ECoeffs& e, const EPoint& pt) {
    if (e.a.is_zero() && e.b.is_zero() && e.c.is_zero())
        throw std::invalid_argument("zero coefficient triple");
    for (const P112Point* half : {&pt.first, &pt.second})
        if (is_zero(half->s) && is_zero(half->t) && is_zero(half->w))
            throw std::invalid_argument("(0:0:0) is not a point of P(1,1,2)");

    const QI A(e.a), B4(e.b / 4), C4(e.c / 4);
    const std::array<QI, 4> u{pt.first.w, pt.first.s * pt.first.s, pt.first.t * pt.first.t,
                              pt.first.s * pt.first.t};
    const std::array<QI, 4> v{pt.second.w, pt.second.s * pt.second.s, pt.second.t * pt.second.t,
                              pt.second.s * pt.second.t};

    for (const QI& value : ci_equations(A, B4, C4, u, v))
        if (!is_zero(value)) return false;

    const auto jac = ci_jacobian(A, B4, C4, u, v);
    std::vector<std::vector<QI>> rows;
    rows.reserve(3);
    for (const auto& row : jac) rows.emplace_back(row.begin(), row.end());
    return matrix_rank(std::move(rows)) < 3;
}

}  // namespace modulilab::strata
