#include "dirackit/matrix.hpp"

#include "dirackit/errors.hpp"

#include <sstream>

namespace dirackit {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
  : rows_(rows.size())
  , cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    QMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Rational> QMatrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    QMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    }
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

bool QMatrix::is_zero() const {
    for (const auto& v : data_) {
        if (v != 0) return false;
    }
    return true;
}

bool QMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if ((*this)(r, c) != -(*this)(c, r)) return false;
        }
    }
    return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix out = a;
    for (auto& v : out.data_) v *= s;
    return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << dirackit::to_string((*this)(r, c));
    }
    os << "]";
    return os.str();
}

QMatrix hconcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hconcat row mismatch");
    QMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

QMatrix vconcat(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vconcat column mismatch");
    QMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r) out(a.rows() + r, c) = b(r, c);
    }
    return out;
}

std::vector<std::size_t> rref_in_place(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        }
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const QMatrix& m) {
    QMatrix copy = m;
    return rref_in_place(copy).size();
}

QMatrix nullspace(const QMatrix& m) {
    QMatrix r = m;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return QMatrix::from_columns(m.cols(), basis);
}

QMatrix column_basis(const QMatrix& m) {
    QMatrix r = m;
    auto pivots = rref_in_place(r);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(pivots.size());
    for (auto p : pivots) cols.push_back(m.column(p));
    return QMatrix::from_columns(m.rows(), cols);
}

std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
    return x;
}

Rational determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            Rational factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

} // namespace dirackit
