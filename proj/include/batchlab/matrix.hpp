#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "batchlab/field.hpp"

namespace batchlab {

// Dense row-major matrix over one prime field. This is plumbing for
// generator and parity-check matrices; rows/columns are 0-based here, while
// the code-level interfaces speak 1-based codeword coordinates.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

    static Matrix from_rows(Field field, const std::vector<std::vector<long long>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.front().size();
        Matrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("Matrix: ragged rows (row " + std::to_string(i + 1) +
                                            " has " + std::to_string(rows[i].size()) +
                                            " entries, expected " + std::to_string(c) + ")");
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static Matrix identity(Field field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t get(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long value) { v_[r * cols_ + c] = field_.canon(value); }
    FieldElement at(std::size_t r, std::size_t c) const { return field_.element(get(r, c)); }

    // Row r as canonical representatives.
    std::vector<std::uint8_t> row(std::size_t r) const {
        return {v_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                v_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> v_;
};

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank;
};

// Reduced row echelon form by Gauss-Jordan elimination; deterministic
// (first nonzero entry in column order becomes the pivot).
inline RrefResult rref(Matrix m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot_row = lead;
        while (pivot_row < m.rows() && m.get(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != lead)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                std::uint8_t tmp = m.get(lead, c);
                m.set(lead, c, m.get(pivot_row, c));
                m.set(pivot_row, c, tmp);
            }
        std::uint8_t scale = f.inv(m.get(lead, col));
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(lead, c, f.mul(m.get(lead, c), scale));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            std::uint8_t factor = m.get(r, col);
            if (factor == 0) continue;
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.set(r, c, f.sub(m.get(r, c), f.mul(factor, m.get(lead, c))));
        }
        pivots.push_back(col);
        ++lead;
    }
    std::size_t rank = pivots.size();
    return RrefResult{std::move(m), std::move(pivots), rank};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("mat_mul: field mismatch");
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint8_t arc = a.get(r, k);
            if (arc == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.set(r, c, f.add(out.get(r, c), f.mul(arc, b.get(k, c))));
        }
    return out;
}

// Solve A x = b exactly; returns the particular solution with all free
// variables zero, or nullopt if the system is inconsistent.
inline std::optional<std::vector<std::uint8_t>> solve(const Matrix& a,
                                                      const std::vector<std::uint8_t>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    RrefResult red = rref(std::move(aug));
    for (std::size_t p : red.pivot_cols)
        if (p == a.cols()) return std::nullopt;
    std::vector<std::uint8_t> x(a.cols(), 0);
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
        x[red.pivot_cols[i]] = red.matrix.get(i, a.cols());
    return x;
}

}  // namespace batchlab
