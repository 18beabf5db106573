#pragma once

#include "dirackit/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dirackit {

/// Strictly increasing list of coordinate indices (i_1 < ... < i_k) labelling dx_{i_1}^...^dx_{i_k}.
using IndexSet = std::vector<std::size_t>;

/// Polynomial vector field sum_i X_i d/dx_i on R^n.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(std::size_t dim);
    explicit VectorField(std::vector<Poly> components);

    static VectorField coordinate(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const { return components_.size(); }
    [[nodiscard]] const Poly& operator[](std::size_t i) const { return components_.at(i); }
    [[nodiscard]] Poly& operator[](std::size_t i) { return components_.at(i); }
    [[nodiscard]] const std::vector<Poly>& components() const { return components_; }
    [[nodiscard]] bool is_zero() const;

    /// Derivation X(f) = sum_i X_i df/dx_i.
    [[nodiscard]] Poly apply(const Poly& f) const;
    [[nodiscard]] RationalPoint evaluate(std::span<const Rational> point) const;

    VectorField& operator+=(const VectorField& other);
    VectorField& operator-=(const VectorField& other);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Poly& f, const VectorField& v);
    friend VectorField operator*(const Rational& s, const VectorField& v);
    VectorField operator-() const;
    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    std::vector<Poly> components_;
};

/// Differential k-form sum_I f_I dx_I on R^n with polynomial coefficients.
///
/// Only strictly increasing index sets with non-zero coefficient are stored. A form of
/// degree n+1 (or higher) is representable and always zero.
class KForm {
public:
    using CoeffMap = std::map<IndexSet, Poly>;

    KForm() = default;
    KForm(std::size_t dim, std::size_t degree)
      : dim_(dim)
      , degree_(degree) {}

    static KForm zero(std::size_t dim, std::size_t degree) { return KForm(dim, degree); }
    /// The 0-form f.
    static KForm function(const Poly& f);
    /// f dx_{indices[0]} ^ dx_{indices[1]} ^ ... in any index order (sign applied).
    static KForm basis(std::size_t dim, const std::vector<std::size_t>& indices, const Poly& f);
    /// sum_i coeffs[i] dx_i.
    static KForm one_form(std::vector<Poly> coeffs);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const CoeffMap& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of dx_I for a strictly increasing I (zero polynomial when absent).
    [[nodiscard]] Poly coefficient(const IndexSet& indices) const;
    /// For 0-forms: the function itself.
    [[nodiscard]] Poly as_function() const;
    /// For 1-forms: the dense coefficient vector (alpha_0, ..., alpha_{n-1}).
    [[nodiscard]] std::vector<Poly> as_covector() const;

    /// Adds f dx_{indices} for an arbitrary index order; repeated indices contribute nothing.
    void add_term(const std::vector<std::size_t>& indices, const Poly& f);

    KForm& operator+=(const KForm& other);
    KForm& operator-=(const KForm& other);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(const Poly& f, const KForm& w);
    friend KForm operator*(const Rational& s, const KForm& w);
    KForm operator-() const;
    friend bool operator==(const KForm& a, const KForm& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

    /// Pointwise coefficients; keys are the stored index sets.
    [[nodiscard]] std::map<IndexSet, Rational> evaluate(std::span<const Rational> point) const;

private:
    void check_compatible(const KForm& other) const;

    std::size_t dim_ = 0;
    std::size_t degree_ = 0;
    CoeffMap coeffs_;
};

/// Bivector field sum_{i<j} pi_ij d/dx_i ^ d/dx_j.
class Bivector {
public:
    Bivector() = default;
    explicit Bivector(std::size_t dim)
      : dim_(dim) {}

    [[nodiscard]] std::size_t dim() const { return dim_; }
    /// Antisymmetric accessor: coefficient(j, i) == -coefficient(i, j).
    [[nodiscard]] Poly coefficient(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Poly& value);
    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, Poly>& coeffs() const { return coeffs_; }

    /// pi^sharp(alpha) = pi(alpha, .), i.e. component j is sum_i alpha_i pi(dx_i, dx_j).
    [[nodiscard]] VectorField sharp(const KForm& alpha) const;

private:
    std::size_t dim_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Poly> coeffs_;
};

/// Polynomial map R^m -> R^n given by n polynomials in m variables.
class PolyMap {
public:
    PolyMap() = default;
    PolyMap(std::size_t source_dim, std::vector<Poly> components);

    static PolyMap identity(std::size_t dim);

    [[nodiscard]] std::size_t source_dim() const { return source_dim_; }
    [[nodiscard]] std::size_t target_dim() const { return components_.size(); }
    [[nodiscard]] const std::vector<Poly>& components() const { return components_; }
    [[nodiscard]] const Poly& operator[](std::size_t i) const { return components_.at(i); }

    [[nodiscard]] RationalPoint evaluate(std::span<const Rational> point) const;
    /// Symbolic Jacobian, target_dim rows by source_dim columns.
    [[nodiscard]] std::vector<std::vector<Poly>> jacobian() const;
    /// this o inner.
    [[nodiscard]] PolyMap compose(const PolyMap& inner) const;

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

private:
    std::size_t source_dim_ = 0;
    std::vector<Poly> components_;
};

// Exterior calculus. All operations are exact and throw DimensionMismatch on ambient mismatch.

KForm wedge(const KForm& a, const KForm& b);
KForm exterior_d(const KForm& form);
/// i_X form; requires degree >= 1. Sign convention i_X(a^b) = a(X) b - b(X) a.
KForm interior_product(const VectorField& x, const KForm& form);
/// Lie derivative computed from the coordinate formula (not via Cartan's identity).
KForm lie_derivative(const VectorField& x, const KForm& form);
/// [X, Y]_i = X(Y_i) - Y(X_i).
VectorField vf_bracket(const VectorField& x, const VectorField& y);
/// phi^* form for phi: R^m -> R^n and form on R^n.
KForm pullback(const PolyMap& phi, const KForm& form);
/// alpha(X) for a 1-form alpha.
Poly contract(const KForm& alpha, const VectorField& x);

} // namespace dirackit
