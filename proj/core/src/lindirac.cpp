#include "dirackit/lindirac.hpp"

#include "dirackit/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace dirackit {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void require_same_dim(const GenTangentVector& u, const GenTangentVector& v) {
    if (u.vec.size() != v.vec.size() || u.covec.size() != u.vec.size() || v.covec.size() != v.vec.size()) {
        throw DimensionMismatch("generalized tangent vectors of different dimension");
    }
}

void assert_maximal(const LinearDirac& l, const char* op) {
    if (!is_maximal_isotropic(l)) {
        throw std::logic_error(std::string(op) + " produced a subspace that is not maximal isotropic");
    }
}

} // namespace

Rational pairing_plus(const GenTangentVector& u, const GenTangentVector& v) {
    require_same_dim(u, v);
    return (dot(u.covec, v.vec) + dot(v.covec, u.vec)) / 2;
}

Rational pairing_minus(const GenTangentVector& u, const GenTangentVector& v) {
    require_same_dim(u, v);
    return (dot(u.covec, v.vec) - dot(v.covec, u.vec)) / 2;
}

LinearDirac::LinearDirac(std::size_t dim, QMatrix basis)
  : dim_(dim)
  , basis_(std::move(basis)) {
    if (basis_.rows() != 2 * dim_) throw DimensionMismatch("basis must have 2n rows");
    if (dirackit::rank(basis_) != basis_.cols()) {
        throw RankDeficientBasis("basis of " + std::to_string(basis_.cols()) + " columns has rank " +
                                 std::to_string(dirackit::rank(basis_)));
    }
}

LinearDirac LinearDirac::span_of(std::size_t dim, const QMatrix& generators) {
    if (generators.rows() != 2 * dim) throw DimensionMismatch("generators must have 2n rows");
    return LinearDirac(dim, column_basis(generators));
}

LinearDirac LinearDirac::tangent_block(std::size_t dim) {
    QMatrix b(2 * dim, dim);
    for (std::size_t i = 0; i < dim; ++i) b(i, i) = 1;
    return LinearDirac(dim, std::move(b));
}

LinearDirac LinearDirac::cotangent_block(std::size_t dim) {
    QMatrix b(2 * dim, dim);
    for (std::size_t i = 0; i < dim; ++i) b(dim + i, i) = 1;
    return LinearDirac(dim, std::move(b));
}

GenTangentVector LinearDirac::element(std::size_t j) const {
    GenTangentVector v{std::vector<Rational>(dim_), std::vector<Rational>(dim_)};
    for (std::size_t i = 0; i < dim_; ++i) {
        v.vec[i] = basis_(i, j);
        v.covec[i] = basis_(dim_ + i, j);
    }
    return v;
}

bool LinearDirac::contains(const GenTangentVector& v) const {
    if (v.dim() != dim_) throw DimensionMismatch("membership test dimension mismatch");
    std::vector<Rational> col(v.vec);
    col.insert(col.end(), v.covec.begin(), v.covec.end());
    return solve(basis_, col).has_value();
}

QMatrix gram_plus(const LinearDirac& l) {
    QMatrix g(l.rank(), l.rank());
    std::vector<GenTangentVector> elems;
    for (std::size_t j = 0; j < l.rank(); ++j) elems.push_back(l.element(j));
    for (std::size_t i = 0; i < l.rank(); ++i) {
        for (std::size_t j = i; j < l.rank(); ++j) {
            g(i, j) = pairing_plus(elems[i], elems[j]);
            g(j, i) = g(i, j);
        }
    }
    return g;
}

bool is_maximal_isotropic(const LinearDirac& l) {
    return l.rank() == l.dim() && gram_plus(l).is_zero();
}

bool is_maximal_isotropic(std::size_t dim, const QMatrix& basis) {
    return is_maximal_isotropic(LinearDirac(dim, basis));
}

LinearDirac graph_of_2form(const QMatrix& omega) {
    if (!omega.is_antisymmetric()) throw DimensionMismatch("2-form matrix must be square antisymmetric");
    const std::size_t n = omega.rows();
    QMatrix b(2 * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) b(n + j, i) = omega(i, j);
    }
    return LinearDirac(n, std::move(b));
}

LinearDirac graph_of_bivector(const QMatrix& pi) {
    if (!pi.is_antisymmetric()) throw DimensionMismatch("bivector matrix must be square antisymmetric");
    const std::size_t n = pi.rows();
    QMatrix b(2 * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        b(n + i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) b(j, i) = pi(i, j);
    }
    return LinearDirac(n, std::move(b));
}

LinearDirac graph_of_distribution(const QMatrix& distribution, const std::optional<QMatrix>& annihilator) {
    const std::size_t n = distribution.rows();
    const std::size_t d = distribution.cols();
    if (rank(distribution) != d) throw RankDeficientBasis("distribution basis is not independent");
    QMatrix ann;
    if (annihilator) {
        ann = *annihilator;
        if (ann.rows() != n || ann.cols() != n - d) throw DimensionMismatch("annihilator must be n x (n - d)");
        if (!(ann.transpose() * distribution).is_zero()) {
            throw PreconditionFailed("supplied covectors do not annihilate the distribution");
        }
        if (rank(ann) != n - d) throw RankDeficientBasis("annihilator basis is not independent");
    } else {
        ann = nullspace(distribution.transpose());
    }
    QMatrix b(2 * n, n);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < n; ++r) b(r, c) = distribution(r, c);
    }
    for (std::size_t c = 0; c < n - d; ++c) {
        for (std::size_t r = 0; r < n; ++r) b(n + r, d + c) = ann(r, c);
    }
    return LinearDirac(n, std::move(b));
}

LinearDirac pushforward(const LinearDirac& l, const QMatrix& t) {
    const std::size_t n = l.dim();
    if (t.cols() != n) throw DimensionMismatch("pushforward: map source dimension mismatch");
    const std::size_t m = t.rows();
    const std::size_t r = l.rank();
    const QMatrix bx = l.vector_part();
    const QMatrix ba = l.covector_part();

    // Unknowns (c, beta): the element B c = (X, alpha) must satisfy alpha = T^t beta.
    QMatrix system = hconcat(ba, Rational(-1) * t.transpose());
    QMatrix kernel = nullspace(system);

    // (c, beta) -> (T X, beta)
    QMatrix image_map(2 * m, r + m);
    QMatrix tx = t * bx;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < r; ++j) image_map(i, j) = tx(i, j);
        image_map(m + i, r + i) = 1;
    }
    LinearDirac out = LinearDirac::span_of(m, image_map * kernel);
    if (is_maximal_isotropic(l)) assert_maximal(out, "pushforward");
    return out;
}

LinearDirac pullback(const LinearDirac& l, const QMatrix& t) {
    const std::size_t n = l.dim();
    if (t.rows() != n) throw DimensionMismatch("pullback: map target dimension mismatch");
    const std::size_t m = t.cols();
    const std::size_t r = l.rank();
    const QMatrix bx = l.vector_part();
    const QMatrix ba = l.covector_part();

    // Unknowns (X, c): T X must equal the vector part B_X c; beta = B_alpha c.
    QMatrix system = hconcat(t, Rational(-1) * bx);
    QMatrix kernel = nullspace(system);

    // (X, c) -> (X, T^t B_alpha c)
    QMatrix image_map(2 * m, m + r);
    QMatrix ttba = t.transpose() * ba;
    for (std::size_t i = 0; i < m; ++i) {
        image_map(i, i) = 1;
        for (std::size_t j = 0; j < r; ++j) image_map(m + i, m + j) = ttba(i, j);
    }
    LinearDirac out = LinearDirac::span_of(m, image_map * kernel);
    if (is_maximal_isotropic(l)) assert_maximal(out, "pullback");
    return out;
}

LinearDirac b_transform(const LinearDirac& l, const QMatrix& b) {
    const std::size_t n = l.dim();
    if (b.rows() != n || !b.is_antisymmetric()) throw DimensionMismatch("B must be an n x n antisymmetric matrix");
    QMatrix basis = l.basis();
    // covector part gains B(X, .) = B^t X
    QMatrix shift = b.transpose() * l.vector_part();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < l.rank(); ++j) basis(n + i, j) += shift(i, j);
    }
    return LinearDirac(n, std::move(basis));
}

bool subspace_equal(const LinearDirac& a, const LinearDirac& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("comparing subspaces of different ambient dimension");
    if (a.rank() != b.rank()) return false;
    return rank(hconcat(a.basis(), b.basis())) == a.rank();
}

namespace {

Eigen::MatrixXd orthonormal_basis(const QMatrix& basis) {
    Eigen::MatrixXd m(basis.rows(), basis.cols());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < basis.cols(); ++c) m(r, c) = basis(r, c).get_d();
    }
    if (m.cols() == 0) return m;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    // The exact basis has full column rank, so every singular value is a genuine direction.
    return svd.matrixU().leftCols(m.cols());
}

} // namespace

double grassmann_gap(const LinearDirac& a, const LinearDirac& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("comparing subspaces of different ambient dimension");
    const auto size = static_cast<Eigen::Index>(2 * a.dim());
    if (size == 0) return 0.0;
    Eigen::MatrixXd qa = orthonormal_basis(a.basis());
    Eigen::MatrixXd qb = orthonormal_basis(b.basis());
    Eigen::MatrixXd diff = qa * qa.transpose() - qb * qb.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
    double gap = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    return std::clamp(gap, 0.0, 1.0);
}

} // namespace dirackit
