#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "traceforge/field.hpp"

namespace traceforge {

/// Dense row-major matrix over an exact field.
template <ExactScalar E>
class Matrix {
public:
    explicit Matrix(FieldSpec field) : field_(field) {}
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, E::zero(field)) {}

    static Matrix identity(FieldSpec field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = E::one(field);
        return m;
    }

    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<E>>& rows, std::size_t cols) {
        Matrix m(field, 0, cols);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<E> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const E> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<E> row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }

    void append_row(std::span<const E> values) {
        require(values.size() == cols_, ErrorCode::InvalidArgument, "row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }
    void append_row(const std::vector<E>& values) { append_row(std::span<const E>(values)); }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    void truncate_rows(std::size_t n) {
        rows_ = n;
        data_.resize(rows_ * cols_, E::zero(field_));
    }

    bool row_is_zero(std::size_t r) const {
        for (const auto& x : row(r))
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<E> apply(std::span<const E> v) const {
        require(v.size() == cols_, ErrorCode::InvalidArgument, "vector length mismatch");
        std::vector<E> out(rows_, E::zero(field_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<E> data_;
};

template <ExactScalar E>
struct RrefResult {
    Matrix<E> matrix;              // zero rows removed
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. The pivot in each column is the first row (in
/// current order) with a nonzero entry, which keeps the output deterministic.
/// Zero rows are dropped from the returned matrix.
template <ExactScalar E>
RrefResult<E> rref(Matrix<E> m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t c = 0; c < C && lead < R; ++c) {
        std::size_t r = lead;
        while (r < R && m(r, c).is_zero()) ++r;
        if (r == R) continue;
        m.swap_rows(lead, r);
        if (!m(lead, c).is_one()) {
            const E s = m(lead, c).inv();
            for (std::size_t k = c; k < C; ++k) m(lead, k) *= s;
        }
        for (std::size_t i = 0; i < R; ++i) {
            if (i == lead || m(i, c).is_zero()) continue;
            const E f = m(i, c);
            for (std::size_t k = c; k < C; ++k)
                if (!m(lead, k).is_zero()) m(i, k) -= f * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    m.truncate_rows(lead);
    return {std::move(m), std::move(pivots)};
}

template <ExactScalar E>
std::size_t rank(const Matrix<E>& m) {
    return rref(m).rank();
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that column.
template <ExactScalar E>
std::vector<std::vector<E>> solve_homogeneous(const Matrix<E>& m) {
    const auto red = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<std::vector<E>> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        std::vector<E> v(C, E::zero(m.field()));
        v[free] = E::one(m.field());
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.matrix(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reduces v against the rows of an RREF matrix with the given pivots.
template <ExactScalar E>
void reduce_against(std::vector<E>& v, const Matrix<E>& echelon, const std::vector<std::size_t>& pivots) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const E f = v[pivots[i]];
        if (f.is_zero()) continue;
        for (std::size_t k = pivots[i]; k < v.size(); ++k)
            if (!echelon(i, k).is_zero()) v[k] -= f * echelon(i, k);
    }
}

template <ExactScalar E>
bool is_zero_vector(std::span<const E> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace traceforge
