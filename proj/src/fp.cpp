#include "comvar/fp.hpp"

namespace comvar {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

void require_prime_modulus(std::uint32_t p) {
    // Constructors run this on every element; remember the last good modulus.
    thread_local std::uint32_t last_good = 0;
    if (p == last_good) return;
    if (p > 0x7fffffffu || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime in [2, 2^31-1]");
    last_good = p;
}

Fp Fp::inverse() const {
    if (value_ == 0) throw std::domain_error("Fp: zero has no inverse");
    // Extended Euclid on (p, value).
    std::int64_t r0 = p_, r1 = value_, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += p_;
    return from_reduced(static_cast<std::uint32_t>(t0), p_);
}

Fp Fp::pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = Fp::one(p_);
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace comvar
