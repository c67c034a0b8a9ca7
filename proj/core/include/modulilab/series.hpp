#pragma once

#include "modulilab/rational.hpp"

#include <stdexcept>
#include <vector>

namespace modulilab::algebra {

// Power series in one variable t truncated at a fixed order (inclusive).
// coeffs()[k] is the coefficient of t^k for 0 <= k <= order().
class SeriesTrunc {
public:
    SeriesTrunc(unsigned order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1, Rat(0));
    }
    static SeriesTrunc zero(unsigned order) { return SeriesTrunc(order, {}); }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t k) const { return c_.at(k); }

    friend bool operator==(const SeriesTrunc& a, const SeriesTrunc& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SeriesTrunc& a, const SeriesTrunc& b) { return !(a == b); }

    friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b) {
        a.check(b);
        std::vector<Rat> r = a.c_;
        for (size_t k = 0; k < r.size(); ++k) r[k] += b.c_[k];
        return SeriesTrunc(a.order(), std::move(r));
    }
    friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b) {
        a.check(b);
        std::vector<Rat> r = a.c_;
        for (size_t k = 0; k < r.size(); ++k) r[k] -= b.c_[k];
        return SeriesTrunc(a.order(), std::move(r));
    }
    friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b) {
        a.check(b);
        std::vector<Rat> r(a.c_.size(), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; i + j < r.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return SeriesTrunc(a.order(), std::move(r));
    }
    friend SeriesTrunc operator*(const Rat& s, const SeriesTrunc& a) {
        std::vector<Rat> r = a.c_;
        for (auto& x : r) x *= s;
        return SeriesTrunc(a.order(), std::move(r));
    }

    // Multiplicative inverse; requires a unit constant term.
    SeriesTrunc invert() const {
        if (c_[0] == 0) throw std::domain_error("series with zero constant term has no inverse");
        std::vector<Rat> r(c_.size(), Rat(0));
        r[0] = Rat(1) / c_[0];
        for (size_t k = 1; k < c_.size(); ++k) {
            Rat acc(0);
            for (size_t j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
            r[k] = -acc / c_[0];
        }
        return SeriesTrunc(order(), std::move(r));
    }

private:
    void check(const SeriesTrunc& other) const {
        if (c_.size() != other.c_.size())
            throw std::invalid_argument("series truncated at different orders");
    }
    std::vector<Rat> c_;
};

// One summand scale * num(t) / den(t) of a formal sum of rational
// functions; num and den hold coefficients by ascending power of t.
struct RationalFnTerm {
    Rat scale;
    std::vector<Rat> num;
    std::vector<Rat> den;
};

// Expands a finite sum of rational functions of t as a truncated power
// series. Every denominator needs a nonzero constant term.
inline SeriesTrunc series_expand(const std::vector<RationalFnTerm>& terms, unsigned order) {
    SeriesTrunc acc = SeriesTrunc::zero(order);
    for (const auto& t : terms) {
        SeriesTrunc num(order, t.num);
        SeriesTrunc den(order, t.den);
        acc = acc + t.scale * (num * den.invert());
    }
    return acc;
}

// Both sides of the Molien identity
//   (1/6) [ 1/(1-t)^2 + 3/(1-t^2) + 2/(1+t+t^2) ] = 1/((1-t^2)(1-t^3)),
// as truncated series, so callers can compare them to any order.
inline SeriesTrunc molien_average(unsigned order) {
    return series_expand({{Rat(1, 6), {Rat(1)}, {Rat(1), Rat(-2), Rat(1)}},
                          {Rat(1, 2), {Rat(1)}, {Rat(1), Rat(0), Rat(-1)}},
                          {Rat(1, 3), {Rat(1)}, {Rat(1), Rat(1), Rat(1)}}},
                         order);
}

inline SeriesTrunc molien_closed_form(unsigned order) {
    return series_expand(
        {{Rat(1), {Rat(1)}, {Rat(1), Rat(0), Rat(-1), Rat(-1), Rat(0), Rat(1)}}}, order);
}

}  // namespace modulilab::algebra
