#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace modulilab::algebra {

// Arbitrary-precision rational, always stored reduced with positive
// denominator (cpp_rational maintains both invariants internally).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical text form: "num" for integers, "num/den" otherwise. The sign
// lives on the numerator.
inline std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "num" or "num/den" with an optional leading sign.
inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& r) { return r.is_zero(); }

// Scalar action used by code that is generic over Rat-valued and
// polynomial-valued coefficients.
inline Rat ring_scale(const Rat& x, const Rat& s) { return x * s; }

}  // namespace modulilab::algebra
