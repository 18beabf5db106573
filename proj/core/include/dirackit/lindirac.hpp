#pragma once

#include "dirackit/matrix.hpp"

#include <optional>
#include <vector>

namespace dirackit {

/// An element (X, alpha) of Q^n (+) (Q^n)^*.
struct GenTangentVector {
    std::vector<Rational> vec;
    std::vector<Rational> covec;

    [[nodiscard]] std::size_t dim() const { return vec.size(); }
    friend bool operator==(const GenTangentVector&, const GenTangentVector&) = default;
};

/// <(X,a),(Y,b)>_+ = (a(Y) + b(X)) / 2.
Rational pairing_plus(const GenTangentVector& u, const GenTangentVector& v);
/// <(X,a),(Y,b)>_- = (a(Y) - b(X)) / 2.
Rational pairing_minus(const GenTangentVector& u, const GenTangentVector& v);

/// A linear subspace of Q^n (+) (Q^n)^* given by a basis.
///
/// The basis is a 2n x r matrix whose top n rows are the vector parts and bottom n rows the
/// covector parts. Construction rejects rank-deficient bases with RankDeficientBasis.
class LinearDirac {
public:
    LinearDirac() = default;
    LinearDirac(std::size_t dim, QMatrix basis);

    /// Builds from an arbitrary spanning family, keeping an independent subset.
    static LinearDirac span_of(std::size_t dim, const QMatrix& generators);
    static LinearDirac tangent_block(std::size_t dim);
    static LinearDirac cotangent_block(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t rank() const { return basis_.cols(); }
    [[nodiscard]] const QMatrix& basis() const { return basis_; }
    [[nodiscard]] QMatrix vector_part() const { return basis_.block(0, 0, dim_, basis_.cols()); }
    [[nodiscard]] QMatrix covector_part() const { return basis_.block(dim_, 0, dim_, basis_.cols()); }
    [[nodiscard]] GenTangentVector element(std::size_t j) const;

    /// Exact membership test.
    [[nodiscard]] bool contains(const GenTangentVector& v) const;

private:
    std::size_t dim_ = 0;
    QMatrix basis_;
};

/// r x r matrix of pairing_plus over the basis.
QMatrix gram_plus(const LinearDirac& l);
bool is_maximal_isotropic(const LinearDirac& l);
/// Checks a raw basis; a rank-deficient basis raises RankDeficientBasis instead of returning false.
bool is_maximal_isotropic(std::size_t dim, const QMatrix& basis);

/// graph(omega) = {(X, omega(X, .))}; omega given by omega_ij = omega(e_i, e_j).
LinearDirac graph_of_2form(const QMatrix& omega);
/// graph(pi) = {(pi(alpha, .), alpha)}; pi given by pi_ij = pi(e^i, e^j).
LinearDirac graph_of_bivector(const QMatrix& pi);
/// D (+) D^0 for D spanned by the columns of `distribution` (n x d). When an annihilator basis
/// is supplied (columns are covectors) it is checked, otherwise it is computed.
LinearDirac graph_of_distribution(const QMatrix& distribution,
                                  const std::optional<QMatrix>& annihilator = std::nullopt);

/// T_* L = {(T X, b) : (X, T^t b) in L} for T : Q^n -> Q^m given as an m x n matrix.
LinearDirac pushforward(const LinearDirac& l, const QMatrix& t);
/// T^* L = {(X, T^t b) : (T X, b) in L} for T : Q^m -> Q^n given as an n x m matrix.
LinearDirac pullback(const LinearDirac& l, const QMatrix& t);
/// e^B L = {(X, a + B(X, .))}.
LinearDirac b_transform(const LinearDirac& l, const QMatrix& b);

/// Exact equality of spanned subspaces.
bool subspace_equal(const LinearDirac& a, const LinearDirac& b);
/// Operator-norm distance between orthogonal projections onto the two subspaces, in [0, 1].
double grassmann_gap(const LinearDirac& a, const LinearDirac& b);

} // namespace dirackit
