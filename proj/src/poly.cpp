#include "comvar/poly.hpp"

#include <stdexcept>

namespace comvar {

FieldPolynomial::FieldPolynomial(std::vector<Fp> coeffs) : p_(2), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("FieldPolynomial: empty coefficient list; use FieldPolynomial(p)");
    p_ = c_.front().modulus();
    for (const Fp& c : c_)
        if (c.modulus() != p_) throw std::invalid_argument("FieldPolynomial: mixed moduli");
    trim();
}

FieldPolynomial FieldPolynomial::from_values(const std::vector<std::int64_t>& coeffs,
                                             std::uint32_t p) {
    FieldPolynomial r(p);
    r.c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) r.c_.emplace_back(v, p);
    r.trim();
    return r;
}

FieldPolynomial FieldPolynomial::constant(const Fp& c) {
    FieldPolynomial r(c.modulus());
    if (!c.is_zero()) r.c_.push_back(c);
    return r;
}

FieldPolynomial FieldPolynomial::variable(std::uint32_t p) {
    return from_values({0, 1}, p);
}

FieldPolynomial FieldPolynomial::linear_root(const Fp& root) {
    FieldPolynomial r(root.modulus());
    r.c_ = {-root, Fp::one(root.modulus())};
    return r;
}

std::size_t FieldPolynomial::degree() const {
    if (is_zero()) throw std::domain_error("FieldPolynomial: zero polynomial has no degree");
    return c_.size() - 1;
}

Fp FieldPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("FieldPolynomial: zero polynomial has no leading coefficient");
    return c_.back();
}

void FieldPolynomial::check_same(const FieldPolynomial& o) const {
    if (p_ != o.p_) throw std::invalid_argument("FieldPolynomial: modulus mismatch");
}

void FieldPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPolynomial FieldPolynomial::operator+(const FieldPolynomial& o) const {
    check_same(o);
    FieldPolynomial r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Fp::zero(p_));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) + o.coeff(k);
    r.trim();
    return r;
}

FieldPolynomial FieldPolynomial::operator-(const FieldPolynomial& o) const {
    check_same(o);
    FieldPolynomial r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Fp::zero(p_));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) - o.coeff(k);
    r.trim();
    return r;
}

FieldPolynomial FieldPolynomial::operator*(const FieldPolynomial& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return FieldPolynomial(p_);
    FieldPolynomial r(p_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Fp::zero(p_));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

FieldPolynomial FieldPolynomial::scaled(const Fp& c) const {
    if (c.modulus() != p_) throw std::invalid_argument("FieldPolynomial: modulus mismatch");
    FieldPolynomial r(p_);
    r.c_.reserve(c_.size());
    for (const Fp& a : c_) r.c_.push_back(a * c);
    r.trim();
    return r;
}

FieldPolynomial FieldPolynomial::monic() const {
    if (is_zero()) throw std::domain_error("FieldPolynomial: cannot normalize the zero polynomial");
    return scaled(leading().inverse());
}

FieldPolynomial FieldPolynomial::pow(std::uint64_t k) const {
    FieldPolynomial acc = constant(Fp::one(p_));
    FieldPolynomial base = *this;
    while (k != 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

FieldPolynomial::DivMod FieldPolynomial::divmod(const FieldPolynomial& divisor) const {
    check_same(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("FieldPolynomial: division by zero");
    FieldPolynomial q(p_), r = *this;
    const std::size_t dd = divisor.degree();
    const Fp lead_inv = divisor.leading().inverse();
    while (!r.is_zero() && r.degree() >= dd) {
        const std::size_t shift = r.degree() - dd;
        const Fp factor = r.leading() * lead_inv;
        if (q.c_.size() < shift + 1) q.c_.resize(shift + 1, Fp::zero(p_));
        q.c_[shift] += factor;
        // r -= factor * t^shift * divisor
        for (std::size_t k = 0; k < divisor.c_.size(); ++k)
            r.c_[k + shift] -= factor * divisor.c_[k];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Fp FieldPolynomial::evaluate(const Fp& x) const {
    Fp acc = Fp::zero(p_);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

PolyXgcd poly_xgcd(const FieldPolynomial& f, const FieldPolynomial& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("poly_xgcd: modulus mismatch");
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_xgcd: both inputs are zero");
    const std::uint32_t p = f.modulus();
    FieldPolynomial r0 = f, r1 = g;
    FieldPolynomial u0 = FieldPolynomial::constant(Fp::one(p)), u1(p);
    FieldPolynomial v0(p), v1 = FieldPolynomial::constant(Fp::one(p));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        FieldPolynomial u2 = u0 - q * u1;
        FieldPolynomial v2 = v0 - q * v1;
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    const Fp scale = r0.leading().inverse();
    return {r0.scaled(scale), u0.scaled(scale), v0.scaled(scale)};
}

FieldMatrix poly_eval_matrix(const FieldPolynomial& f, const FieldMatrix& x) {
    if (!x.is_square()) throw std::invalid_argument("poly_eval_matrix: non-square matrix");
    const std::size_t n = x.rows();
    const std::uint32_t p = x.modulus();
    if (f.modulus() != p) throw std::invalid_argument("poly_eval_matrix: modulus mismatch");
    FieldMatrix acc(n, n, p);
    if (f.is_zero()) return acc;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        acc = mat_mul(acc, x);
        const Fp c = f.coeff(k);
        if (!c.is_zero()) acc = acc + FieldMatrix::identity(n, p).scaled(c);
    }
    return acc;
}

} // namespace comvar
