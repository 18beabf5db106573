#pragma once

#include "dirackit/diracfield.hpp"
#include "dirackit/grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirackit {

enum class GroupKind { Real, Torus };

/// Orbit-map witness for torus actions: the flow of each generator is periodic with this period.
struct PeriodicityWitness {
    std::string description;
    double period = 6.283185307179586;
};

/// Abelian action of R^k or T^k given by k pairwise commuting polynomial generators.
class ActionSpec {
public:
    ActionSpec() = default;
    /// Throws PreconditionFailed when two generators do not commute, DimensionMismatch on
    /// mixed ambient dimensions, and when a torus action comes without a periodicity witness.
    ActionSpec(GroupKind kind, std::vector<VectorField> generators,
               std::optional<PeriodicityWitness> witness = std::nullopt);

    [[nodiscard]] GroupKind kind() const { return kind_; }
    [[nodiscard]] bool is_torus() const { return kind_ == GroupKind::Torus; }
    [[nodiscard]] std::size_t k() const { return generators_.size(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<VectorField>& generators() const { return generators_; }
    [[nodiscard]] const std::optional<PeriodicityWitness>& periodicity() const { return witness_; }
    /// Always true for a constructed spec; kept for reports.
    [[nodiscard]] bool commuting() const { return true; }

private:
    GroupKind kind_ = GroupKind::Real;
    std::size_t dim_ = 0;
    std::vector<VectorField> generators_;
    std::optional<PeriodicityWitness> witness_;
};

/// mu = (mu_1, ..., mu_k), one polynomial per generator.
struct MomentMap {
    std::vector<Poly> components;

    [[nodiscard]] std::size_t k() const { return components.size(); }
    [[nodiscard]] RationalPoint evaluate(std::span<const Rational> p) const;
};

/// Outcome of an exact symbolic check; `witness` names the first polynomial that fails.
struct SymbolicVerdict {
    bool holds = true;
    std::optional<std::string> witness;
    std::optional<Poly> polynomial;
};

/// J_ai = i_{xi_a} alpha_i as polynomials (k x n).
std::vector<std::vector<Poly>> j_matrix(const DiracSpan& span, const ActionSpec& action);

/// J evaluated at p. Throws DegenerateFiber when p lies on the degeneracy locus.
QMatrix j_map(const DiracSpan& span, const ActionSpec& action, std::span<const Rational> p);

/// <(L_xi X_i, L_xi alpha_i), e_j>_+ == 0 for all generators and all i, j.
SymbolicVerdict is_dirac_action(const DiracSpan& span, const ActionSpec& action);

struct MomentReport {
    /// <(xi_a, d mu_a), e_j>_+ == 0 for all a, j.
    SymbolicVerdict condition;
    /// xi_b(mu_a) == 0 for all a, b.
    SymbolicVerdict invariance;
    [[nodiscard]] bool holds() const { return condition.holds && invariance.holds; }
};

MomentReport check_moment(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu);

/// d mu_a(X_i) == -i_{xi_a} alpha_i for all a, i: the consequence of (xi_a, d mu_a) in L under <,>_+.
SymbolicVerdict moment_identity(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu);

enum class ActionRegularity {
    RegularEverywhere, // some k x k minor of J is a non-zero constant
    RegularOnGrid,     // no rank drop detected at nodes or across edges
    NotRegular,        // rank drop detected somewhere on the domain
    NowhereRegular,    // every k x k minor vanishes identically
};

const char* to_string(ActionRegularity v);

struct ActionRegularityReport {
    ActionRegularity verdict = ActionRegularity::NowhereRegular;
    /// True when the verdict is decided symbolically.
    bool exact = false;
    /// Non-zero k x k minors of J.
    std::vector<Poly> minors;
    /// Grid nodes with rank J < k, plus midpoints of edges across which every minor may vanish.
    std::vector<RationalPoint> rank_drop_locus;
    /// Grid nodes on the degeneracy locus of the span (skipped).
    std::vector<RationalPoint> degenerate_nodes;
    [[nodiscard]] bool regular() const {
        return verdict == ActionRegularity::RegularEverywhere || verdict == ActionRegularity::RegularOnGrid;
    }
};

ActionRegularityReport is_regular_action(const DiracSpan& span, const ActionSpec& action, const SampleGrid& grid);

/// Level set mu^{-1}(c) presented by a polynomial parametrization phi over a parameter grid.
struct LevelSet {
    RationalPoint c;
    PolyMap phi;
    SampleGrid param_grid;
};

enum class LevelRegularity { Regular, NotRegular, EmptyLevelSet };

const char* to_string(LevelRegularity v);

struct LevelRegularityReport {
    LevelRegularity verdict = LevelRegularity::Regular;
    /// Parameter nodes where rank J < k (or the fiber is degenerate).
    std::vector<RationalPoint> failing_params;
    std::size_t nodes_checked = 0;
    [[nodiscard]] bool regular() const { return verdict == LevelRegularity::Regular; }
};

/// Throws LevelSetMismatch when mu o phi != c, PreconditionFailed when d phi drops rank on the
/// grid. With no level set given, returns EmptyLevelSet if some mu_a - c_a provably has no real
/// zero and throws PreconditionFailed otherwise.
LevelRegularityReport is_regular_at(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu,
                                    const RationalPoint& c, const std::optional<LevelSet>& level);

/// Throws LevelSetMismatch unless mu o phi == c identically.
void verify_level_set(const MomentMap& mu, const LevelSet& level);

/// Exact value of a symbolic Jacobian at p.
QMatrix jacobian_at(const PolyMap& map, std::span<const Rational> p);

} // namespace dirackit
