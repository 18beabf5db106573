#pragma once

#include "dirackit/hamaction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirackit {

/// A polynomial quotient map pi : R^n -> R^(n-k) invariant under an action.
class QuotientPresentation {
public:
    QuotientPresentation() = default;
    /// Checks xi_a(pi_i) == 0 for every generator and component (PreconditionFailed otherwise).
    QuotientPresentation(PolyMap map, const ActionSpec& action);
    /// A presentation whose invariance is established elsewhere.
    static QuotientPresentation unchecked(PolyMap map);

    [[nodiscard]] const PolyMap& map() const { return map_; }
    /// d pi at p; throws RankDeficientBasis unless it is surjective.
    [[nodiscard]] QMatrix differential(std::span<const Rational> p) const;

private:
    PolyMap map_;
};

/// L_{M/G} at pi(p): the pushforward of L|_p along d pi_p.
LinearDirac reduce_pointwise(const DiracSpan& span, const QuotientPresentation& quotient,
                             std::span<const Rational> p);

enum class Smoothness { Smooth, NonSmooth, Inconclusive };

const char* to_string(Smoothness s);

struct ProbeLevel {
    SampleGrid grid;
    /// Reduced fiber per node; empty where the node was skipped.
    std::vector<std::optional<LinearDirac>> fibers;
    /// Gap per grid edge (same order as grid.edges()); negative when an endpoint was skipped.
    std::vector<double> edge_gaps;
    double max_gap = 0.0;
    std::vector<RationalPoint> skipped;
};

struct ReductionReport {
    std::vector<ProbeLevel> levels;
    Smoothness verdict = Smoothness::Inconclusive;
    /// Nodes and edge midpoints achieving the maximal gap on the finest level.
    std::vector<RationalPoint> suspect_locus;
};

struct ProbeOptions {
    double jump_threshold = 0.5;
    // Lipschitz fibers shrink their gap by ~2 per halving; 1.5 leaves room for curvature.
    double decay_ratio = 1.5;
};

/// Samples reduced fibers on the nodes and edge midpoints of `grid` (its refinement), then on the
/// next refinement. NonSmooth when the maximal adjacent gap is at least the threshold on both
/// levels, Smooth when it shrinks by the decay ratio, Inconclusive otherwise.
ReductionReport smoothness_probe(const DiracSpan& span, const QuotientPresentation& quotient, const SampleGrid& grid,
                                 const ProbeOptions& options = {});

/// i_c^* L at phi(param): the pullback of L|_{phi(param)} along d phi.
LinearDirac restrict_to_level(const DiracSpan& span, const PolyMap& phi, std::span<const Rational> param);

/// The Hamiltonian quotient fiber at q_c(param): restrict_to_level pushed along d q_c.
/// Throws PreconditionFailed when j is not surjective at phi(param) or when a generator is not
/// tangent to the level set there.
LinearDirac hamiltonian_quotient_fiber(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu,
                                       const LevelSet& level, const PolyMap& level_quotient,
                                       std::span<const Rational> param);

struct DiamondFailure {
    RationalPoint param;
    std::string identity; // "level" or "quotient"
};

struct DiamondReport {
    std::size_t nodes_checked = 0;
    std::vector<DiamondFailure> failures;
    [[nodiscard]] bool holds() const { return failures.empty(); }
};

/// Checks at every parameter node of the level set:
///   restrict_to_level == pullback of the quotient fiber along d q_c, and
///   reduce_pointwise at phi(param) == pushforward of the quotient fiber along d i.
/// Requires pi o phi == i o q_c identically and regularity at c (PreconditionFailed otherwise).
DiamondReport verify_diamond(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu,
                             const LevelSet& level, const QuotientPresentation& quotient,
                             const PolyMap& level_quotient, const PolyMap& inclusion);

} // namespace dirackit
