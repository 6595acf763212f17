#include "agtrellis/matrix.hpp"

#include <stdexcept>

namespace agtrellis {

namespace {

void require_compatible(const Matrix& a, const Matrix& b) {
    if (!a.field() || !b.field() || (*a.field() != *b.field()))
        throw std::invalid_argument("matrix field mismatch");
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix column-count mismatch");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("null field");
    if (cols_ == 0) throw std::invalid_argument("matrix must have at least one column");
}

Matrix::Matrix(FieldPtr field, std::initializer_list<std::initializer_list<std::uint16_t>> entries)
    : Matrix(std::move(field), entries.size(), entries.size() ? entries.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : entries) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
        std::size_t c = 0;
        for (std::uint16_t v : row) {
            if (v >= field_->order()) throw std::invalid_argument("matrix entry out of field range");
            set(r, c++, v);
        }
        ++r;
    }
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<std::uint16_t>>& entries) {
    if (entries.empty()) throw std::invalid_argument("matrix needs at least one row here");
    Matrix m(std::move(field), entries.size(), entries.front().size());
    for (std::size_t r = 0; r < entries.size(); ++r) {
        if (entries[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (entries[r][c] >= m.field_->order()) throw std::invalid_argument("matrix entry out of field range");
            m.set(r, c, entries[r][c]);
        }
    }
    return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<std::uint16_t> Matrix::row(std::size_t r) const {
    return std::vector<std::uint16_t>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
    if (rows_ == 0) throw std::invalid_argument("cannot transpose a zero-row matrix");
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
    Matrix sub(field_, rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < which.size(); ++j) {
            if (which[j] >= cols_) throw std::invalid_argument("column index out of range");
            sub.set(r, j, at(r, which[j]));
        }
    return sub;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (!field_ || !rhs.field_ || *field_ != *rhs.field_) throw std::invalid_argument("matrix field mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    const Field& f = *field_;
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint16_t a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                out.set(r, c, f.add(out.at(r, c), f.mul(a, rhs.at(k, c))));
        }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ && other.field_ && *field_ == *other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

RrefResult rref(const Matrix& m) {
    Matrix w = m;
    const Field& f = *w.field();
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < w.rows() && w.at(sel, col) == 0) ++sel;
        if (sel == w.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < w.cols(); ++c) {
                const std::uint16_t tmp = w.at(sel, c);
                w.set(sel, c, w.at(pivot_row, c));
                w.set(pivot_row, c, tmp);
            }
        const std::uint16_t scale = f.inv(w.at(pivot_row, col));
        if (scale != 1)
            for (std::size_t c = col; c < w.cols(); ++c) w.set(pivot_row, c, f.mul(scale, w.at(pivot_row, c)));
        for (std::size_t r = 0; r < w.rows(); ++r) {
            if (r == pivot_row) continue;
            const std::uint16_t factor = w.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < w.cols(); ++c)
                w.set(r, c, f.sub(w.at(r, c), f.mul(factor, w.at(pivot_row, c))));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(w), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    const auto r = rref(m);
    const std::size_t n = m.cols();
    const Field& f = *m.field();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    const std::size_t nullity = n - r.pivots.size();
    Matrix basis(m.field(), nullity, n);
    std::size_t out_row = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(out_row, free_col, 1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            basis.set(out_row, r.pivots[i], f.neg(r.matrix.at(i, free_col)));
        ++out_row;
    }
    return basis;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    require_compatible(a, b);
    const auto ra = rref(a);
    const auto rb = rref(b);
    if (ra.pivots != rb.pivots) return false;
    for (std::size_t r = 0; r < ra.pivots.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (ra.matrix.at(r, c) != rb.matrix.at(r, c)) return false;
    return true;
}

std::vector<std::uint16_t> vec_mat(const std::vector<std::uint16_t>& v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector length must equal matrix row count");
    const Field& f = *m.field();
    std::vector<std::uint16_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(v[r], m.at(r, c)));
    }
    return out;
}

std::vector<std::size_t> prefix_column_ranks(const Matrix& m) {
    const Field& f = *m.field();
    const std::size_t k = m.rows();
    // Basis of the column span so far, kept in echelon form by leading row.
    std::vector<std::vector<std::uint16_t>> basis;
    std::vector<std::size_t> lead;
    std::vector<std::size_t> ranks(m.cols() + 1, 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<std::uint16_t> col(k);
        for (std::size_t r = 0; r < k; ++r) col[r] = m.at(r, j);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint16_t c = col[lead[b]];
            if (c == 0) continue;
            for (std::size_t r = 0; r < k; ++r) col[r] = f.sub(col[r], f.mul(c, basis[b][r]));
        }
        std::size_t first = 0;
        while (first < k && col[first] == 0) ++first;
        if (first < k) {
            const std::uint16_t scale = f.inv(col[first]);
            for (std::size_t r = first; r < k; ++r) col[r] = f.mul(scale, col[r]);
            basis.push_back(std::move(col));
            lead.push_back(first);
        }
        ranks[j + 1] = basis.size();
    }
    return ranks;
}

}  // namespace agtrellis
