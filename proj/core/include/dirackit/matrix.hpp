#pragma once

#include "dirackit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirackit {

/// Dense row-major matrix over Q with exact elimination routines.
///
/// Zero-sized shapes are valid (a 0 x r or n x 0 matrix is the natural representation of
/// maps into or out of the zero space).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows)
      , cols_(cols)
      , data_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::vector<Rational> column(std::size_t c) const;
    [[nodiscard]] QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    [[nodiscard]] QMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_antisymmetric() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& s, const QMatrix& a);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

    [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& v) const;

    [[nodiscard]] std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix hconcat(const QMatrix& a, const QMatrix& b);
QMatrix vconcat(const QMatrix& a, const QMatrix& b);

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Columns spanning the kernel (cols x k, k = cols - rank).
QMatrix nullspace(const QMatrix& m);
/// A maximal linearly independent subset of the columns, in original order.
QMatrix column_basis(const QMatrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b);
/// Exact determinant of a square matrix.
Rational determinant(QMatrix m);

} // namespace dirackit
