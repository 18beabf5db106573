#pragma once

#include "dirackit/errors.hpp"
#include "dirackit/forms.hpp"
#include "dirackit/lindirac.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dirackit {

/// A section (X, alpha) of TM (+) T*M with polynomial coefficients.
struct CourantSection {
    VectorField x;
    KForm alpha; // degree 1

    [[nodiscard]] std::size_t dim() const { return x.dim(); }
    [[nodiscard]] GenTangentVector evaluate(std::span<const Rational> point) const;
    friend bool operator==(const CourantSection&, const CourantSection&) = default;
};

/// Axis-aligned rational coordinate box [min_i, max_i].
struct Box {
    RationalPoint min;
    RationalPoint max;

    static Box symmetric(std::size_t dim, const Rational& half_width);
    [[nodiscard]] std::size_t dim() const { return min.size(); }
    [[nodiscard]] bool contains(std::span<const Rational> p) const;
};

enum class DiracKind { TwoForm, Bivector, Distribution, Span };

const char* to_string(DiracKind kind);

/// Thrown by evaluate() at points where the spanning sections lose rank.
class DegenerateFiber : public Error {
public:
    DegenerateFiber(const std::string& what, QMatrix basis)
      : Error(what)
      , basis_(std::move(basis)) {}
    [[nodiscard]] const QMatrix& basis() const { return basis_; }

private:
    QMatrix basis_;
};

/// <e1, e2>_+ as a polynomial.
Poly pairing_plus(const CourantSection& e1, const CourantSection& e2);
/// <e1, e2>_- as a polynomial.
Poly pairing_minus(const CourantSection& e1, const CourantSection& e2);

/// An almost Dirac structure on a box in R^n presented by n polynomial sections.
///
/// Construction enforces symbolic isotropy: every Gram polynomial <e_i, e_j>_+ vanishes
/// identically. Points where the sections are dependent form the degeneracy locus; the
/// optional description is carried for reports.
class DiracSpan {
public:
    DiracSpan(std::size_t dim, std::vector<CourantSection> sections, Box domain, DiracKind kind = DiracKind::Span,
              std::optional<std::string> degeneracy_locus = std::nullopt);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<CourantSection>& sections() const { return sections_; }
    [[nodiscard]] const Box& domain() const { return domain_; }
    [[nodiscard]] DiracKind kind() const { return kind_; }
    [[nodiscard]] const std::optional<std::string>& degeneracy_locus() const { return degeneracy_locus_; }

    /// Sections evaluated at p as a 2n x n matrix, without any rank check.
    [[nodiscard]] QMatrix evaluate_basis(std::span<const Rational> p) const;

private:
    std::size_t dim_;
    std::vector<CourantSection> sections_;
    Box domain_;
    DiracKind kind_;
    std::optional<std::string> degeneracy_locus_;
};

struct DistributionOptions {
    /// User-supplied annihilator 1-forms; when absent they are searched for.
    std::optional<std::vector<KForm>> annihilator;
    /// Highest coefficient degree tried by the annihilator search.
    unsigned max_degree = 3;
    /// Seed for the generic test point used to select independent annihilators.
    std::uint64_t seed = 0x5eed;
};

DiracSpan from_2form(const KForm& omega, const Box& domain);
DiracSpan from_bivector(const Bivector& pi, const Box& domain);
DiracSpan from_distribution(const std::vector<VectorField>& distribution, const Box& domain,
                            const DistributionOptions& options = {});

/// [[(X,a),(Y,b)]] = ([X,Y], L_X b - L_Y a + d<(X,a),(Y,b)>_-).
CourantSection courant_bracket(const CourantSection& e1, const CourantSection& e2);

/// T_ijk = <[[e_i, e_j]], e_k>_+ for a DiracSpan; all zero iff the span is involutive.
class IntegrabilityTensor {
public:
    explicit IntegrabilityTensor(const DiracSpan& span);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Poly& at(std::size_t i, std::size_t j, std::size_t k) const {
        return entries_[(i * dim_ + j) * dim_ + k];
    }
    [[nodiscard]] bool vanishes() const;
    struct Entry {
        std::size_t i, j, k;
        Poly value;
    };
    [[nodiscard]] std::optional<Entry> first_nonzero() const;

private:
    std::size_t dim_;
    std::vector<Poly> entries_;
};

IntegrabilityTensor integrability_tensor(const DiracSpan& span);

/// The fiber L|_p. Throws OutsideDomain, or DegenerateFiber when the sections lose rank at p.
LinearDirac evaluate(const DiracSpan& span, std::span<const Rational> p);

/// The leaf presymplectic form omega(X, Y) = <(X,a),(Y,b)>_- at p, for X, Y in the anchor image.
Rational leaf_form(const DiracSpan& span, std::span<const Rational> p, const std::vector<Rational>& x,
                   const std::vector<Rational>& y);

/// e^B L for a closed 2-form B (NonClosedForm otherwise).
DiracSpan b_transform_field(const DiracSpan& span, const KForm& b);

} // namespace dirackit
