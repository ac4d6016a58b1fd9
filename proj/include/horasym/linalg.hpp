#pragma once

/**
 * @file linalg.hpp
 * @brief Dense matrices over a field descriptor; exact Gaussian elimination
 *        yielding determinant and nullspace basis.
 */

#include <utility>
#include <vector>

#include "horasym/rings.hpp"

namespace horasym {

class Matrix {
   public:
    Matrix(RingDesc field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, value_zero(field_)) {}

    const RingDesc& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Value& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, Value v) { a_[static_cast<size_t>(i) * cols_ + j] = std::move(v); }
    void set(int i, int j, const RingElement& e) {
        if (!desc_eq(e.ring(), field_)) throw DescriptorMismatch("matrix entry from a different ring");
        set(i, j, e.value());
    }
    RingElement entry(int i, int j) const { return {field_, at(i, j)}; }

    static Matrix identity(const RingDesc& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, value_one(field));
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_ || !desc_eq(x.field_, y.field_)) throw DescriptorMismatch("matrix product shape");
        Matrix out(x.field_, x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (value_is_zero(x.field_, x.at(i, k))) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    if (value_is_zero(y.field_, y.at(k, j))) continue;
                    out.set(i, j, value_add(x.field_, out.at(i, j), value_mul(x.field_, x.at(i, k), y.at(k, j))));
                }
            }
        return out;
    }

   private:
    RingDesc field_;
    int rows_, cols_;
    std::vector<Value> a_;
};

struct DetNull {
    RingElement det;
    std::vector<std::vector<RingElement>> kernel;  // basis columns
};

/// Exact elimination with first-nonzero pivot selection. A nonzero pivot that
/// fails to invert means the descriptor is not a field; that is reported, not
/// silently skipped.
inline DetNull det_and_nullspace(const RingDesc& field, const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("det_and_nullspace expects a square matrix");
    const int n = m.rows();
    std::vector<std::vector<Value>> a(n, std::vector<Value>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Value det = value_one(field);
    bool singular = false;
    std::vector<int> pivot_col_of_row;
    std::vector<bool> col_is_pivot(n, false);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r) {
            if (!value_is_zero(field, a[r][col])) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            singular = true;
            continue;
        }
        if (piv != row) {
            std::swap(a[piv], a[row]);
            det = value_neg(field, det);
        }
        det = value_mul(field, det, a[row][col]);
        Value inv;
        try {
            inv = value_inv(field, a[row][col]);
        } catch (const NotInvertible&) {
            throw NotAField("nonzero pivot is not invertible; descriptor is not a field");
        }
        for (int j = col; j < n; ++j) a[row][j] = value_mul(field, a[row][j], inv);
        for (int r = 0; r < n; ++r) {
            if (r == row || value_is_zero(field, a[r][col])) continue;
            Value f = a[r][col];
            for (int j = col; j < n; ++j)
                a[r][j] = value_sub(field, a[r][j], value_mul(field, f, a[row][j]));
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[col] = true;
        ++row;
    }
    if (singular) det = value_zero(field);

    DetNull out{RingElement(field, std::move(det)), {}};
    for (int fc = 0; fc < n; ++fc) {
        if (col_is_pivot[fc]) continue;
        std::vector<RingElement> v(n, ring_zero(field));
        v[fc] = ring_one(field);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = RingElement(field, value_neg(field, a[r][fc]));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace horasym
