#include "comvar/matrix.hpp"

#include <stdexcept>

namespace comvar {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, Fp::zero(p)) {}

FieldMatrix FieldMatrix::identity(std::size_t n, std::uint32_t p) {
    FieldMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Fp::one(p));
    return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                   std::uint32_t p) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    FieldMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("FieldMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Fp(rows[i][j], p));
    }
    return m;
}

FieldMatrix FieldMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                   std::uint32_t p) {
    std::vector<std::vector<std::int64_t>> v;
    v.reserve(rows.size());
    for (const auto& row : rows) v.emplace_back(row);
    return from_rows(v, p);
}

void FieldMatrix::set(std::size_t i, std::size_t j, const Fp& v) {
    if (v.modulus() != p_) throw std::invalid_argument("FieldMatrix: modulus mismatch on set");
    e_[i * cols_ + j] = v;
}

bool FieldMatrix::is_zero() const {
    for (const Fp& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool FieldMatrix::is_upper_triangular() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

bool FieldMatrix::is_strictly_upper_triangular() const {
    if (!is_upper_triangular()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!at(i, i).is_zero()) return false;
    return true;
}

void FieldMatrix::check_compatible(const FieldMatrix& o) const {
    if (p_ != o.p_) throw std::invalid_argument("FieldMatrix: modulus mismatch");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("FieldMatrix: shape mismatch");
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    check_compatible(o);
    FieldMatrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    check_compatible(o);
    FieldMatrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const { return mat_mul(*this, o); }

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
}

FieldMatrix FieldMatrix::scaled(const Fp& c) const {
    if (c.modulus() != p_) throw std::invalid_argument("FieldMatrix: modulus mismatch on scale");
    FieldMatrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

FieldMatrix FieldMatrix::negated() const {
    FieldMatrix r(rows_, cols_, p_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

FieldMatrix FieldMatrix::pow(std::uint64_t k) const {
    if (!is_square()) throw std::invalid_argument("FieldMatrix::pow: non-square matrix");
    FieldMatrix acc = identity(rows_, p_);
    FieldMatrix base = *this;
    while (k != 0) {
        if (k & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        k >>= 1;
    }
    return acc;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("mat_mul: modulus mismatch");
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    const std::uint32_t p = a.modulus();
    const std::uint64_t p64 = p;
    FieldMatrix r(a.rows(), b.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc += static_cast<std::uint64_t>(a.at(i, k).value()) * b.at(k, j).value() % p64;
                if (acc >= p64) acc -= p64;
            }
            r.set(i, j, Fp(static_cast<std::int64_t>(acc), p));
        }
    }
    return r;
}

FieldMatrix commutator(const FieldMatrix& x, const FieldMatrix& y) {
    if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("commutator: requires square matrices of equal shape");
    return mat_mul(x, y) - mat_mul(y, x);
}

std::size_t mat_rank(const FieldMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    const std::uint32_t p = a.modulus();
    std::vector<std::vector<Fp>> m(r, std::vector<Fp>(c, Fp::zero(p)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m[i][j] = a.at(i, j);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t pivot = rank;
        while (pivot < r && m[pivot][col].is_zero()) ++pivot;
        if (pivot == r) continue;
        std::swap(m[pivot], m[rank]);
        const Fp inv = m[rank][col].inverse();
        for (std::size_t j = col; j < c; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            const Fp f = m[i][col];
            for (std::size_t j = col; j < c; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace comvar
