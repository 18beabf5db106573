#include "dirackit/diracfield.hpp"

#include "dirackit/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace dirackit {

GenTangentVector CourantSection::evaluate(std::span<const Rational> point) const {
    GenTangentVector v;
    v.vec = x.evaluate(point);
    v.covec.reserve(dim());
    for (const auto& a : alpha.as_covector()) v.covec.push_back(a.evaluate(point));
    return v;
}

Box Box::symmetric(std::size_t dim, const Rational& half_width) {
    return Box{RationalPoint(dim, -half_width), RationalPoint(dim, half_width)};
}

bool Box::contains(std::span<const Rational> p) const {
    if (p.size() != dim()) throw DimensionMismatch("point and box dimension differ");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < min[i] || p[i] > max[i]) return false;
    }
    return true;
}

const char* to_string(DiracKind kind) {
    switch (kind) {
    case DiracKind::TwoForm: return "2form";
    case DiracKind::Bivector: return "bivector";
    case DiracKind::Distribution: return "distribution";
    case DiracKind::Span: return "span";
    }
    return "span";
}

Poly pairing_plus(const CourantSection& e1, const CourantSection& e2) {
    return (contract(e1.alpha, e2.x) + contract(e2.alpha, e1.x)) * Rational(1, 2);
}

Poly pairing_minus(const CourantSection& e1, const CourantSection& e2) {
    return (contract(e1.alpha, e2.x) - contract(e2.alpha, e1.x)) * Rational(1, 2);
}

DiracSpan::DiracSpan(std::size_t dim, std::vector<CourantSection> sections, Box domain, DiracKind kind,
                     std::optional<std::string> degeneracy_locus)
  : dim_(dim)
  , sections_(std::move(sections))
  , domain_(std::move(domain))
  , kind_(kind)
  , degeneracy_locus_(std::move(degeneracy_locus)) {
    if (sections_.size() != dim_) {
        throw DimensionMismatch("a Dirac span on R^" + std::to_string(dim_) + " needs exactly " +
                                std::to_string(dim_) + " sections, got " + std::to_string(sections_.size()));
    }
    if (domain_.min.size() != dim_ || domain_.max.size() != dim_) throw DimensionMismatch("domain box dimension");
    for (std::size_t i = 0; i < dim_; ++i) {
        if (domain_.min[i] > domain_.max[i]) throw DimensionMismatch("domain box has min > max");
    }
    for (const auto& s : sections_) {
        if (s.x.dim() != dim_ || s.alpha.dim() != dim_ || s.alpha.degree() != 1) {
            throw DimensionMismatch("section does not live in TM (+) T*M of the ambient space");
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            Poly g = pairing_plus(sections_[i], sections_[j]);
            if (!g.is_zero()) {
                throw NotIsotropic("<e" + std::to_string(i) + ", e" + std::to_string(j) + ">_+ = " + g.to_string());
            }
        }
    }
}

QMatrix DiracSpan::evaluate_basis(std::span<const Rational> p) const {
    if (p.size() != dim_) throw DimensionMismatch("evaluation point dimension");
    QMatrix b(2 * dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        GenTangentVector v = sections_[j].evaluate(p);
        for (std::size_t i = 0; i < dim_; ++i) {
            b(i, j) = v.vec[i];
            b(dim_ + i, j) = v.covec[i];
        }
    }
    return b;
}

DiracSpan from_2form(const KForm& omega, const Box& domain) {
    if (omega.degree() != 2) throw DimensionMismatch("from_2form needs a 2-form");
    const std::size_t n = omega.dim();
    std::vector<CourantSection> sections;
    for (std::size_t i = 0; i < n; ++i) {
        VectorField e = VectorField::coordinate(n, i);
        KForm a = interior_product(e, omega);
        sections.push_back({std::move(e), std::move(a)});
    }
    return DiracSpan(n, std::move(sections), domain, DiracKind::TwoForm);
}

DiracSpan from_bivector(const Bivector& pi, const Box& domain) {
    const std::size_t n = pi.dim();
    std::vector<CourantSection> sections;
    for (std::size_t i = 0; i < n; ++i) {
        KForm dxi = KForm::basis(n, {i}, Poly::constant(n, 1));
        VectorField x = pi.sharp(dxi);
        sections.push_back({std::move(x), std::move(dxi)});
    }
    return DiracSpan(n, std::move(sections), domain, DiracKind::Bivector);
}

namespace {

std::vector<Exponent> monomials_up_to(std::size_t n, unsigned degree) {
    std::vector<Exponent> out;
    Exponent e(n, 0);
    // odometer over all exponents with entries <= degree, filtered by total degree
    while (true) {
        unsigned total = 0;
        for (auto k : e) total += k;
        if (total <= degree) out.push_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == degree) e[i++] = 0;
        if (i == n) break;
        ++e[i];
    }
    return out;
}

RationalPoint generic_point(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-97, 97);
    std::uniform_int_distribution<int> den(2, 61);
    RationalPoint p;
    for (std::size_t i = 0; i < n; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (q == 0) q = Rational(1, 7 + static_cast<int>(i));
        p.push_back(q);
    }
    return p;
}

std::vector<Rational> evaluate_covector(const KForm& a, std::span<const Rational> p) {
    std::vector<Rational> out;
    for (const auto& c : a.as_covector()) out.push_back(c.evaluate(p));
    return out;
}

std::vector<KForm> search_annihilator(const std::vector<VectorField>& dist, std::size_t n, std::size_t wanted,
                                      const DistributionOptions& options, const RationalPoint& probe) {
    for (unsigned degree = 0; degree <= options.max_degree; ++degree) {
        auto monos = monomials_up_to(n, degree);
        const std::size_t unknowns = n * monos.size();
        // Equation rows are indexed by (vector a, monomial of the product).
        std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
        std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
        for (std::size_t a = 0; a < dist.size(); ++a) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t m = 0; m < monos.size(); ++m) {
                    Poly prod = Poly::monomial(n, monos[m]) * dist[a][i];
                    for (const auto& [e, c] : prod.terms()) {
                        auto [it, inserted] = row_of.try_emplace({a, e}, rows.size());
                        if (inserted) rows.emplace_back();
                        rows[it->second].emplace_back(i * monos.size() + m, c);
                    }
                }
            }
        }
        QMatrix system(rows.size(), unknowns);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (const auto& [col, c] : rows[r]) system(r, col) += c;
        }
        QMatrix kernel = nullspace(system);

        std::vector<KForm> chosen;
        QMatrix at_probe(n, 0);
        for (std::size_t k = 0; k < kernel.cols() && chosen.size() < wanted; ++k) {
            std::vector<Poly> coeffs(n, Poly(n));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t m = 0; m < monos.size(); ++m) {
                    const Rational& c = kernel(i * monos.size() + m, k);
                    if (c != 0) coeffs[i].add_term(monos[m], c);
                }
            }
            KForm candidate = KForm::one_form(std::move(coeffs));
            QMatrix extended = hconcat(at_probe, QMatrix::from_columns(n, {evaluate_covector(candidate, probe)}));
            if (rank(extended) > at_probe.cols()) {
                at_probe = std::move(extended);
                chosen.push_back(std::move(candidate));
            }
        }
        if (chosen.size() == wanted) return chosen;
    }
    throw AnnihilatorNotFound("no polynomial annihilator basis of degree <= " + std::to_string(options.max_degree));
}

} // namespace

DiracSpan from_distribution(const std::vector<VectorField>& distribution, const Box& domain,
                            const DistributionOptions& options) {
    const std::size_t n = domain.dim();
    const std::size_t d = distribution.size();
    if (d > n) throw DimensionMismatch("distribution has more generators than the ambient dimension");
    for (const auto& v : distribution) {
        if (v.dim() != n) throw DimensionMismatch("distribution generator dimension");
    }
    RationalPoint probe = generic_point(n, options.seed);
    {
        std::vector<std::vector<Rational>> cols;
        for (const auto& v : distribution) cols.push_back(v.evaluate(probe));
        if (rank(QMatrix::from_columns(n, cols)) != d) {
            throw RankDeficientBasis("distribution generators are dependent at a generic point");
        }
    }

    std::vector<KForm> annihilator;
    if (options.annihilator) {
        annihilator = *options.annihilator;
        if (annihilator.size() != n - d) throw DimensionMismatch("annihilator must have n - d covectors");
        for (const auto& a : annihilator) {
            if (a.dim() != n || a.degree() != 1) throw DimensionMismatch("annihilator entries must be 1-forms");
            for (const auto& v : distribution) {
                if (!contract(a, v).is_zero()) throw AnnihilatorNotFound("supplied covector does not annihilate D");
            }
        }
    } else {
        annihilator = search_annihilator(distribution, n, n - d, options, probe);
    }

    std::vector<CourantSection> sections;
    for (const auto& v : distribution) sections.push_back({v, KForm(n, 1)});
    for (auto& a : annihilator) sections.push_back({VectorField(n), std::move(a)});
    return DiracSpan(n, std::move(sections), domain, DiracKind::Distribution);
}

CourantSection courant_bracket(const CourantSection& e1, const CourantSection& e2) {
    if (e1.dim() != e2.dim()) throw DimensionMismatch("Courant bracket of sections on different spaces");
    VectorField x = vf_bracket(e1.x, e2.x);
    KForm a = lie_derivative(e1.x, e2.alpha) - lie_derivative(e2.x, e1.alpha) +
              exterior_d(KForm::function(pairing_minus(e1, e2)));
    return {std::move(x), std::move(a)};
}

IntegrabilityTensor::IntegrabilityTensor(const DiracSpan& span)
  : dim_(span.dim())
  , entries_(dim_ * dim_ * dim_, Poly(dim_)) {
    const auto& s = span.sections();
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i + 1; j < dim_; ++j) {
            CourantSection b = courant_bracket(s[i], s[j]);
            for (std::size_t k = 0; k < dim_; ++k) {
                Poly t = pairing_plus(b, s[k]);
                entries_[(j * dim_ + i) * dim_ + k] = -t;
                entries_[(i * dim_ + j) * dim_ + k] = std::move(t);
            }
        }
    }
}

bool IntegrabilityTensor::vanishes() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<IntegrabilityTensor::Entry> IntegrabilityTensor::first_nonzero() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!at(i, j, k).is_zero()) return Entry{i, j, k, at(i, j, k)};
            }
        }
    }
    return std::nullopt;
}

IntegrabilityTensor integrability_tensor(const DiracSpan& span) { return IntegrabilityTensor(span); }

LinearDirac evaluate(const DiracSpan& span, std::span<const Rational> p) {
    if (!span.domain().contains(p)) throw OutsideDomain("evaluation point outside the domain box");
    QMatrix basis = span.evaluate_basis(p);
    if (rank(basis) < span.dim()) {
        std::string where = "(";
        for (std::size_t i = 0; i < p.size(); ++i) where += (i ? ", " : "") + to_string(p[i]);
        throw DegenerateFiber("sections lose rank at " + where + ")", std::move(basis));
    }
    return LinearDirac(span.dim(), std::move(basis));
}

Rational leaf_form(const DiracSpan& span, std::span<const Rational> p, const std::vector<Rational>& x,
                   const std::vector<Rational>& y) {
    const std::size_t n = span.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("leaf_form tangent vector dimension");
    LinearDirac fiber = evaluate(span, p);
    QMatrix bx = fiber.vector_part();
    QMatrix ba = fiber.covector_part();
    auto lift = [&](const std::vector<Rational>& v, const char* name) {
        auto c = solve(bx, v);
        if (!c) throw NotInAnchorRange(std::string(name) + " is not in the image of the anchor");
        return GenTangentVector{v, ba.apply(*c)};
    };
    GenTangentVector ex = lift(x, "X");
    GenTangentVector ey = lift(y, "Y");
    Rational value = pairing_minus(ex, ey);

    // Lifts are unique up to the kernel of the anchor; the value must not depend on the choice.
    QMatrix kernel = nullspace(bx);
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        GenTangentVector shifted = ex;
        auto delta = ba.apply(kernel.column(k));
        for (std::size_t i = 0; i < n; ++i) shifted.covec[i] += delta[i];
        if (pairing_minus(shifted, ey) != value) throw std::logic_error("leaf form depends on the chosen lift");
    }
    return value;
}

DiracSpan b_transform_field(const DiracSpan& span, const KForm& b) {
    if (b.degree() != 2 || b.dim() != span.dim()) throw DimensionMismatch("B must be a 2-form on the ambient space");
    if (!exterior_d(b).is_zero()) throw NonClosedForm("B-transform requires dB = 0");
    std::vector<CourantSection> sections;
    for (const auto& s : span.sections()) sections.push_back({s.x, s.alpha + interior_product(s.x, b)});
    return DiracSpan(span.dim(), std::move(sections), span.domain(), DiracKind::Span, span.degeneracy_locus());
}

} // namespace dirackit
