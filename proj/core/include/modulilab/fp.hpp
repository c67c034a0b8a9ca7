#pragma once

#include "modulilab/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modulilab::algebra {

// Element of the prime field F_p for an odd prime p. The modulus travels
// with the value; mixing moduli is a hard error, not a silent coercion.
class FpElem {
public:
    FpElem() : v_(0), p_(0) {}
    FpElem(std::int64_t value, std::uint64_t p) : p_(p) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("modulus must be an odd prime");
        std::int64_t m = value % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(m);
    }

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    friend FpElem operator+(const FpElem& a, const FpElem& b) {
        a.check(b);
        return FpElem::raw((a.v_ + b.v_) % a.p_, a.p_);
    }
    friend FpElem operator-(const FpElem& a, const FpElem& b) {
        a.check(b);
        return FpElem::raw((a.v_ + a.p_ - b.v_) % a.p_, a.p_);
    }
    friend FpElem operator*(const FpElem& a, const FpElem& b) {
        a.check(b);
        return FpElem::raw((a.v_ * b.v_) % a.p_, a.p_);
    }
    FpElem operator-() const { return FpElem::raw(v_ == 0 ? 0 : p_ - v_, p_); }

    FpElem inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
        // Fermat: p is prime and fits in 32 bits for every oracle use, so
        // the 64-bit products below cannot overflow.
        std::uint64_t result = 1, base = v_, e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return FpElem::raw(result, p_);
    }
    friend FpElem operator/(const FpElem& a, const FpElem& b) {
        a.check(b);
        return a * b.inverse();
    }

    friend bool operator==(const FpElem& a, const FpElem& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }

private:
    static FpElem raw(std::uint64_t v, std::uint64_t p) {
        FpElem e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    void check(const FpElem& other) const {
        if (p_ != other.p_)
            throw std::invalid_argument("F_p arithmetic across mismatched moduli (" +
                                        std::to_string(p_) + " vs " + std::to_string(other.p_) + ")");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline FpElem zero_like(const FpElem& x) { return FpElem(0, x.modulus()); }
inline FpElem one_like(const FpElem& x) { return FpElem(1, x.modulus()); }
inline bool is_zero(const FpElem& x) { return x.residue() == 0; }

// Image of a rational in F_p; fails when p divides the denominator.
inline FpElem fp_from_rat(const Rat& r, std::uint64_t p) {
    const Int pm(p);
    const Int den = rat_den(r) % pm;
    if (den == 0) throw std::domain_error("denominator divisible by p");
    const Int num = rat_num(r) % pm;
    const FpElem n(static_cast<std::int64_t>(num), p);
    const FpElem d(static_cast<std::int64_t>(den), p);
    return n / d;
}

}  // namespace modulilab::algebra
