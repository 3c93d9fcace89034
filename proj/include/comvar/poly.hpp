#pragma once

#include <cstddef>
#include <vector>

#include "comvar/fp.hpp"
#include "comvar/matrix.hpp"

namespace comvar {

/// Univariate polynomial over a prime field, coefficients lowest degree first
/// with no trailing zeros. The zero polynomial has an empty coefficient list
/// and no degree; callers must test is_zero() before asking for one.
class FieldPolynomial {
public:
    /// Zero polynomial.
    explicit FieldPolynomial(std::uint32_t p) : p_(p) { require_prime_modulus(p); }

    /// Trims trailing zeros; all coefficients must share one modulus.
    explicit FieldPolynomial(std::vector<Fp> coeffs);

    static FieldPolynomial from_values(const std::vector<std::int64_t>& coeffs, std::uint32_t p);
    static FieldPolynomial constant(const Fp& c);
    /// The monomial t.
    static FieldPolynomial variable(std::uint32_t p);
    /// t - root.
    static FieldPolynomial linear_root(const Fp& root);

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }

    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    std::size_t degree() const;

    /// Coefficient of t^k (zero beyond the stored length).
    Fp coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Fp::zero(p_); }
    const std::vector<Fp>& coeffs() const { return c_; }

    Fp leading() const;
    bool is_monic() const { return !is_zero() && leading() == Fp::one(p_); }

    FieldPolynomial operator+(const FieldPolynomial& o) const;
    FieldPolynomial operator-(const FieldPolynomial& o) const;
    FieldPolynomial operator*(const FieldPolynomial& o) const;
    bool operator==(const FieldPolynomial& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const FieldPolynomial& o) const { return !(*this == o); }

    FieldPolynomial scaled(const Fp& c) const;
    FieldPolynomial monic() const;
    FieldPolynomial pow(std::uint64_t k) const;

    /// Euclidean division; divisor must be nonzero.
    struct DivMod {
        FieldPolynomial quotient;
        FieldPolynomial remainder;
    };
    DivMod divmod(const FieldPolynomial& divisor) const;

    Fp evaluate(const Fp& x) const;

private:
    void check_same(const FieldPolynomial& o) const;
    void trim();

    std::uint32_t p_;
    std::vector<Fp> c_;
};

struct PolyXgcd {
    FieldPolynomial gcd; // monic
    FieldPolynomial u;
    FieldPolynomial v; // u*f + v*g = gcd
};

/// Extended gcd; throws std::invalid_argument when both inputs are zero.
/// The gcd is monic and when g does not divide f, deg u < deg g - deg gcd.
PolyXgcd poly_xgcd(const FieldPolynomial& f, const FieldPolynomial& g);

/// Horner evaluation of f at a square matrix; f = 1 gives the identity.
FieldMatrix poly_eval_matrix(const FieldPolynomial& f, const FieldMatrix& x);

} // namespace comvar
