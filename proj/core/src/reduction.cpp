#include "dirackit/reduction.hpp"

#include "dirackit/errors.hpp"
#include "dirackit/parallel.hpp"

#include <algorithm>
#include <set>

namespace dirackit {

namespace {

std::string point_string(std::span<const Rational> p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
    return s + ")";
}

ProbeLevel probe_level(const DiracSpan& span, const QuotientPresentation& quotient, SampleGrid grid) {
    ProbeLevel level;
    level.grid = std::move(grid);
    const auto nodes = level.grid.nodes();
    level.fibers.resize(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
        try {
            level.fibers[i] = reduce_pointwise(span, quotient, nodes[i]);
        } catch (const DegenerateFiber&) {
        } catch (const RankDeficientBasis&) {
        }
    });
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!level.fibers[i]) level.skipped.push_back(nodes[i]);
    }
    const auto edges = level.grid.edges();
    level.edge_gaps.assign(edges.size(), -1.0);
    parallel_for(edges.size(), [&](std::size_t e) {
        const auto& a = level.fibers[edges[e].first];
        const auto& b = level.fibers[edges[e].second];
        if (a && b) level.edge_gaps[e] = grassmann_gap(*a, *b);
    });
    for (double g : level.edge_gaps) level.max_gap = std::max(level.max_gap, g);
    return level;
}

} // namespace

QuotientPresentation::QuotientPresentation(PolyMap map, const ActionSpec& action)
  : map_(std::move(map)) {
    if (map_.source_dim() != action.dim()) throw DimensionMismatch("quotient map and action on different spaces");
    for (std::size_t a = 0; a < action.k(); ++a) {
        for (std::size_t i = 0; i < map_.target_dim(); ++i) {
            Poly w = action.generators()[a].apply(map_[i]);
            if (!w.is_zero()) {
                throw PreconditionFailed("quotient component " + std::to_string(i) + " is not invariant under xi" +
                                         std::to_string(a) + ": " + w.to_string());
            }
        }
    }
}

QuotientPresentation QuotientPresentation::unchecked(PolyMap map) {
    QuotientPresentation q;
    q.map_ = std::move(map);
    return q;
}

QMatrix QuotientPresentation::differential(std::span<const Rational> p) const {
    QMatrix d = jacobian_at(map_, p);
    if (rank(d) != map_.target_dim()) throw RankDeficientBasis("d pi is not surjective at " + point_string(p));
    return d;
}

LinearDirac reduce_pointwise(const DiracSpan& span, const QuotientPresentation& quotient,
                             std::span<const Rational> p) {
    if (quotient.map().source_dim() != span.dim()) throw DimensionMismatch("quotient map source dimension");
    LinearDirac fiber = evaluate(span, p);
    return pushforward(fiber, quotient.differential(p));
}

const char* to_string(Smoothness s) {
    switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::NonSmooth: return "non-smooth";
    case Smoothness::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ReductionReport smoothness_probe(const DiracSpan& span, const QuotientPresentation& quotient, const SampleGrid& grid,
                                 const ProbeOptions& options) {
    if (grid.dim() != span.dim()) throw DimensionMismatch("grid and Dirac structure on different spaces");
    ReductionReport report;
    SampleGrid coarse = grid.refine();
    SampleGrid fine = coarse.refine();
    report.levels.push_back(probe_level(span, quotient, std::move(coarse)));
    report.levels.push_back(probe_level(span, quotient, std::move(fine)));

    const double g0 = report.levels[0].max_gap;
    const double g1 = report.levels[1].max_gap;
    if (g0 >= options.jump_threshold && g1 >= options.jump_threshold) {
        report.verdict = Smoothness::NonSmooth;
    } else if (g1 <= g0 / options.decay_ratio) {
        report.verdict = Smoothness::Smooth;
    } else {
        report.verdict = Smoothness::Inconclusive;
    }

    const ProbeLevel& last = report.levels.back();
    if (last.max_gap > 0.0) {
        std::set<std::size_t> suspects;
        const auto edges = last.grid.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (last.edge_gaps[e] >= last.max_gap - 1e-12) {
                suspects.insert(edges[e].first);
                suspects.insert(edges[e].second);
            }
        }
        for (auto idx : suspects) report.suspect_locus.push_back(last.grid.node(idx));
    }
    return report;
}

LinearDirac restrict_to_level(const DiracSpan& span, const PolyMap& phi, std::span<const Rational> param) {
    if (phi.target_dim() != span.dim()) throw DimensionMismatch("parametrization does not land in the ambient space");
    if (param.size() != phi.source_dim()) throw DimensionMismatch("parameter dimension");
    RationalPoint p = phi.evaluate(param);
    return pullback(evaluate(span, p), jacobian_at(phi, param));
}

LinearDirac hamiltonian_quotient_fiber(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu,
                                       const LevelSet& level, const PolyMap& level_quotient,
                                       std::span<const Rational> param) {
    verify_level_set(mu, level);
    if (level_quotient.source_dim() != level.phi.source_dim()) {
        throw DimensionMismatch("level quotient must be defined on the parameter space");
    }
    RationalPoint p = level.phi.evaluate(param);
    if (rank(j_map(span, action, p)) != action.k()) {
        throw PreconditionFailed("j is not surjective at " + point_string(p) + "; c is not a regular value");
    }
    QMatrix dphi = jacobian_at(level.phi, param);
    QMatrix dq = jacobian_at(level_quotient, param);
    for (std::size_t a = 0; a < action.k(); ++a) {
        auto tangent = solve(dphi, action.generators()[a].evaluate(p));
        if (!tangent) {
            throw PreconditionFailed("xi" + std::to_string(a) + " is not tangent to the level set at " +
                                     point_string(p));
        }
        for (const auto& v : dq.apply(*tangent)) {
            if (v != 0) {
                throw PreconditionFailed("level quotient is not invariant under xi" + std::to_string(a) + " at " +
                                         point_string(param));
            }
        }
    }
    return pushforward(restrict_to_level(span, level.phi, param), dq);
}

DiamondReport verify_diamond(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu,
                             const LevelSet& level, const QuotientPresentation& quotient,
                             const PolyMap& level_quotient, const PolyMap& inclusion) {
    verify_level_set(mu, level);
    if (inclusion.source_dim() != level_quotient.target_dim() ||
        inclusion.target_dim() != quotient.map().target_dim()) {
        throw DimensionMismatch("inclusion must map the level quotient into the full quotient");
    }
    if (quotient.map().compose(level.phi) != inclusion.compose(level_quotient)) {
        throw PreconditionFailed("pi o phi and i o q_c differ");
    }
    LevelRegularityReport regularity = is_regular_at(span, action, mu, level.c, level);
    if (!regularity.regular()) {
        throw PreconditionFailed("c is not a regular value: j drops rank at " +
                                 point_string(regularity.failing_params.front()));
    }

    const auto params = level.param_grid.nodes();
    std::vector<int> result(params.size(), 0);
    parallel_for(params.size(), [&](std::size_t idx) {
        const RationalPoint& t = params[idx];
        LinearDirac fiber = hamiltonian_quotient_fiber(span, action, mu, level, level_quotient, t);
        LinearDirac upstairs = restrict_to_level(span, level.phi, t);
        int flags = 0;
        if (!subspace_equal(upstairs, pullback(fiber, jacobian_at(level_quotient, t)))) flags |= 1;
        RationalPoint p = level.phi.evaluate(t);
        RationalPoint q = level_quotient.evaluate(t);
        if (!subspace_equal(reduce_pointwise(span, quotient, p), pushforward(fiber, jacobian_at(inclusion, q)))) {
            flags |= 2;
        }
        result[idx] = flags;
    });

    DiamondReport report;
    report.nodes_checked = params.size();
    for (std::size_t idx = 0; idx < params.size(); ++idx) {
        if (result[idx] & 1) report.failures.push_back({params[idx], "level"});
        if (result[idx] & 2) report.failures.push_back({params[idx], "quotient"});
    }
    return report;
}

} // namespace dirackit
