#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "agtrellis/gf.hpp"

namespace agtrellis {

// Dense matrix over a Field, entries stored as raw element codes.
// Zero-row matrices are allowed (kernel bases, generators of trimmed codes);
// the column count is always >= 1.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::initializer_list<std::initializer_list<std::uint16_t>> entries);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<std::uint16_t>>& entries);
    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint16_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint16_t v) { data_[r * cols_ + c] = v; }

    std::vector<std::uint16_t> row(std::size_t r) const;
    Matrix transpose() const;
    Matrix columns(const std::vector<std::size_t>& which) const;

    // Matrix product; dimensions and fields must agree.
    Matrix operator*(const Matrix& rhs) const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint16_t> data_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form. Deterministic: pivots are the leftmost columns,
// each pivot row is the first (lowest-index) row with a nonzero entry in the
// pivot column.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the right null space {v : M v^T = 0}, one vector per row, in RREF.
// Returns a matrix with cols() columns and nullity rows (possibly zero rows).
Matrix kernel_basis(const Matrix& m);

// True iff the row spaces coincide. Throws std::invalid_argument on field or
// column-count mismatch.
bool row_space_equal(const Matrix& a, const Matrix& b);

// Row vector times matrix.
std::vector<std::uint16_t> vec_mat(const std::vector<std::uint16_t>& v, const Matrix& m);

// Streams columns left to right and reports the rank after each one:
// result[j] = rank of the first j columns, for j in 0..cols.
std::vector<std::size_t> prefix_column_ranks(const Matrix& m);

}  // namespace agtrellis
