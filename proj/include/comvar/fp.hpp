#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace comvar {

/// Trial-division primality test for moduli up to 2^31 - 1.
bool is_prime(std::uint32_t n);

/// Throws std::invalid_argument unless p is a prime in [2, 2^31 - 1].
void require_prime_modulus(std::uint32_t p);

/// Residue modulo a prime p. Values are kept reduced to [0, p); combining
/// elements with different moduli throws. Every nonzero element is invertible.
class Fp {
public:
    Fp() : value_(0), p_(2) {}

    Fp(std::int64_t value, std::uint32_t p) : p_(p) {
        require_prime_modulus(p);
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        value_ = static_cast<std::uint32_t>(r);
    }

    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }

    Fp operator+(const Fp& o) const {
        check_same(o);
        std::uint64_t s = static_cast<std::uint64_t>(value_) + o.value_;
        if (s >= p_) s -= p_;
        return from_reduced(static_cast<std::uint32_t>(s), p_);
    }

    Fp operator-(const Fp& o) const {
        check_same(o);
        std::uint32_t r = value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_;
        return from_reduced(r, p_);
    }

    Fp operator-() const {
        return from_reduced(value_ == 0 ? 0 : p_ - value_, p_);
    }

    Fp operator*(const Fp& o) const {
        check_same(o);
        std::uint64_t prod = static_cast<std::uint64_t>(value_) * o.value_ % p_;
        return from_reduced(static_cast<std::uint32_t>(prod), p_);
    }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Fp inverse() const;

    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return p_ == o.p_ && value_ == o.value_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    /// x^e by repeated squaring (e >= 0).
    Fp pow(std::uint64_t e) const;

    std::string to_string() const { return std::to_string(value_); }

private:
    static Fp from_reduced(std::uint32_t v, std::uint32_t p) {
        Fp r;
        r.value_ = v;
        r.p_ = p;
        return r;
    }

    void check_same(const Fp& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("Fp: modulus mismatch (" + std::to_string(p_) + " vs " +
                                        std::to_string(o.p_) + ")");
    }

    std::uint32_t value_;
    std::uint32_t p_;
};

} // namespace comvar
