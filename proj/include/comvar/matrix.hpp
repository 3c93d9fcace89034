#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "comvar/fp.hpp"

namespace comvar {

/// Dense rectangular matrix over a prime field, row-major.
class FieldMatrix {
public:
    /// Zero matrix of the given shape.
    FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FieldMatrix identity(std::size_t n, std::uint32_t p);

    /// Builds from integer rows (entries reduced mod p). Throws on ragged input.
    static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p);
    static FieldMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                 std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }
    bool is_square() const { return rows_ == cols_; }

    const Fp& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Fp& v);
    void set(std::size_t i, std::size_t j, std::int64_t v) { set(i, j, Fp(v, p_)); }

    bool is_zero() const;
    bool is_upper_triangular() const;
    bool is_strictly_upper_triangular() const;

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    FieldMatrix operator*(const FieldMatrix& o) const;
    bool operator==(const FieldMatrix& o) const;
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    FieldMatrix scaled(const Fp& c) const;
    FieldMatrix negated() const;
    FieldMatrix transpose() const;

    /// A^k for square A, k >= 0 (A^0 = identity).
    FieldMatrix pow(std::uint64_t k) const;

private:
    void check_compatible(const FieldMatrix& o) const;

    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<Fp> e_;
};

/// Exact product; throws on shape or modulus mismatch.
FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);

/// XY - YX for square matrices of equal shape.
FieldMatrix commutator(const FieldMatrix& x, const FieldMatrix& y);

/// Rank by Gaussian elimination with first-nonzero pivoting.
std::size_t mat_rank(const FieldMatrix& a);

} // namespace comvar
