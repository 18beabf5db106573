#include "dirackit/hamaction.hpp"

#include "dirackit/errors.hpp"
#include "dirackit/parallel.hpp"

#include <numeric>

namespace dirackit {

namespace {

std::string point_string(std::span<const Rational> p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
    return s + ")";
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m, std::size_t vars) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(vars, 1);
    if (n == 1) return m[0][0];
    Poly det(vars);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc != c) row.push_back(m[r][cc]);
            }
            minor.push_back(std::move(row));
        }
        Poly term = m[0][c] * poly_determinant(minor, vars);
        if (c % 2) det -= term;
        else det += term;
    }
    return det;
}

// Calls fn for every increasing k-subset of {0, ..., n-1}.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

int sign(const Rational& q) { return sgn(q); }

// True when p has no real zero: only even exponents, one strict coefficient sign, and a
// non-zero constant term.
bool certifiably_nonvanishing(const Poly& p) {
    if (p.constant_term() == 0) return false;
    const int s = sign(p.constant_term());
    for (const auto& [e, c] : p.terms()) {
        if (sign(c) != s) return false;
        for (auto k : e) {
            if (k % 2) return false;
        }
    }
    return true;
}

} // namespace

ActionSpec::ActionSpec(GroupKind kind, std::vector<VectorField> generators, std::optional<PeriodicityWitness> witness)
  : kind_(kind)
  , generators_(std::move(generators))
  , witness_(std::move(witness)) {
    if (generators_.empty()) throw DimensionMismatch("an action needs at least one generator");
    dim_ = generators_.front().dim();
    for (const auto& g : generators_) {
        if (g.dim() != dim_) throw DimensionMismatch("generators live on different spaces");
    }
    for (std::size_t a = 0; a < generators_.size(); ++a) {
        for (std::size_t b = a + 1; b < generators_.size(); ++b) {
            if (!vf_bracket(generators_[a], generators_[b]).is_zero()) {
                throw PreconditionFailed("generators " + std::to_string(a) + " and " + std::to_string(b) +
                                         " do not commute");
            }
        }
    }
    if (kind_ == GroupKind::Torus && !witness_) {
        throw PreconditionFailed("torus actions require a periodicity witness");
    }
}

RationalPoint MomentMap::evaluate(std::span<const Rational> p) const {
    RationalPoint out;
    for (const auto& c : components) out.push_back(c.evaluate(p));
    return out;
}

std::vector<std::vector<Poly>> j_matrix(const DiracSpan& span, const ActionSpec& action) {
    if (action.dim() != span.dim()) throw DimensionMismatch("action and Dirac structure on different spaces");
    std::vector<std::vector<Poly>> j(action.k());
    for (std::size_t a = 0; a < action.k(); ++a) {
        for (const auto& s : span.sections()) j[a].push_back(contract(s.alpha, action.generators()[a]));
    }
    return j;
}

QMatrix j_map(const DiracSpan& span, const ActionSpec& action, std::span<const Rational> p) {
    (void)evaluate(span, p);
    auto j = j_matrix(span, action);
    QMatrix out(action.k(), span.dim());
    for (std::size_t a = 0; a < action.k(); ++a) {
        for (std::size_t i = 0; i < span.dim(); ++i) out(a, i) = j[a][i].evaluate(p);
    }
    return out;
}

SymbolicVerdict is_dirac_action(const DiracSpan& span, const ActionSpec& action) {
    if (action.dim() != span.dim()) throw DimensionMismatch("action and Dirac structure on different spaces");
    const auto& s = span.sections();
    for (std::size_t a = 0; a < action.k(); ++a) {
        const VectorField& xi = action.generators()[a];
        for (std::size_t i = 0; i < s.size(); ++i) {
            CourantSection moved{vf_bracket(xi, s[i].x), lie_derivative(xi, s[i].alpha)};
            for (std::size_t j = 0; j < s.size(); ++j) {
                Poly g = pairing_plus(moved, s[j]);
                if (!g.is_zero()) {
                    return {false,
                            "<L_xi" + std::to_string(a) + " e" + std::to_string(i) + ", e" + std::to_string(j) +
                                ">_+ = " + g.to_string(),
                            g};
                }
            }
        }
    }
    return {};
}

MomentReport check_moment(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu) {
    if (mu.k() != action.k()) throw DimensionMismatch("moment map needs one component per generator");
    if (action.dim() != span.dim()) throw DimensionMismatch("action and Dirac structure on different spaces");
    for (const auto& m : mu.components) {
        if (m.num_vars() != span.dim()) throw DimensionMismatch("moment component in the wrong ring");
    }
    MomentReport report;
    for (std::size_t a = 0; a < action.k() && report.condition.holds; ++a) {
        CourantSection e{action.generators()[a], exterior_d(KForm::function(mu.components[a]))};
        for (std::size_t j = 0; j < span.dim(); ++j) {
            Poly g = pairing_plus(e, span.sections()[j]);
            if (!g.is_zero()) {
                report.condition = {false,
                                    "<(xi" + std::to_string(a) + ", dmu" + std::to_string(a) + "), e" +
                                        std::to_string(j) + ">_+ = " + g.to_string(),
                                    g};
                break;
            }
        }
    }
    for (std::size_t a = 0; a < mu.k() && report.invariance.holds; ++a) {
        for (std::size_t b = 0; b < action.k(); ++b) {
            Poly g = action.generators()[b].apply(mu.components[a]);
            if (!g.is_zero()) {
                report.invariance = {false,
                                     "xi" + std::to_string(b) + "(mu" + std::to_string(a) + ") = " + g.to_string(), g};
                break;
            }
        }
    }
    return report;
}

SymbolicVerdict moment_identity(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu) {
    if (mu.k() != action.k()) throw DimensionMismatch("moment map needs one component per generator");
    auto j = j_matrix(span, action);
    for (std::size_t a = 0; a < action.k(); ++a) {
        for (std::size_t i = 0; i < span.dim(); ++i) {
            Poly g = span.sections()[i].x.apply(mu.components[a]) + j[a][i];
            if (!g.is_zero()) {
                return {false, "dmu" + std::to_string(a) + "(X" + std::to_string(i) + ") + i_xi alpha = " +
                                   g.to_string(),
                        g};
            }
        }
    }
    return {};
}

const char* to_string(ActionRegularity v) {
    switch (v) {
    case ActionRegularity::RegularEverywhere: return "regular-everywhere";
    case ActionRegularity::RegularOnGrid: return "regular-on-grid";
    case ActionRegularity::NotRegular: return "not-regular";
    case ActionRegularity::NowhereRegular: return "nowhere-regular";
    }
    return "not-regular";
}

ActionRegularityReport is_regular_action(const DiracSpan& span, const ActionSpec& action, const SampleGrid& grid) {
    if (grid.dim() != span.dim()) throw DimensionMismatch("grid and Dirac structure on different spaces");
    ActionRegularityReport report;
    const std::size_t k = action.k();
    const std::size_t n = span.dim();
    auto j = j_matrix(span, action);
    bool constant_minor = false;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        std::vector<std::vector<Poly>> sub(k);
        for (std::size_t a = 0; a < k; ++a) {
            for (auto c : cols) sub[a].push_back(j[a][c]);
        }
        Poly m = poly_determinant(sub, n);
        if (m.is_zero()) return;
        if (m.is_constant()) constant_minor = true;
        report.minors.push_back(std::move(m));
    });
    if (report.minors.empty()) {
        report.verdict = ActionRegularity::NowhereRegular;
        report.exact = true;
        return report;
    }
    if (constant_minor) {
        report.verdict = ActionRegularity::RegularEverywhere;
        report.exact = true;
        return report;
    }

    const std::size_t count = grid.node_count();
    std::vector<RationalPoint> nodes = grid.nodes();
    // 0: full rank, 1: rank drop, 2: degenerate fiber
    std::vector<int> state(count, 0);
    std::vector<std::vector<Rational>> minor_values(count);
    parallel_for(count, [&](std::size_t idx) {
        for (const auto& m : report.minors) minor_values[idx].push_back(m.evaluate(nodes[idx]));
        try {
            state[idx] = rank(j_map(span, action, nodes[idx])) < k ? 1 : 0;
        } catch (const DegenerateFiber&) {
            state[idx] = 2;
        }
    });
    for (std::size_t idx = 0; idx < count; ++idx) {
        if (state[idx] == 1) report.rank_drop_locus.push_back(nodes[idx]);
        if (state[idx] == 2) report.degenerate_nodes.push_back(nodes[idx]);
    }
    for (const auto& [u, v] : grid.edges()) {
        if (state[u] != 0 || state[v] != 0) continue;
        bool suspect = true;
        for (std::size_t m = 0; m < report.minors.size() && suspect; ++m) {
            const int su = sign(minor_values[u][m]);
            const int sv = sign(minor_values[v][m]);
            if (su != 0 && sv != 0 && su == sv) suspect = false;
        }
        if (!suspect) continue;
        RationalPoint mid(n);
        for (std::size_t i = 0; i < n; ++i) mid[i] = (nodes[u][i] + nodes[v][i]) / 2;
        report.rank_drop_locus.push_back(std::move(mid));
    }
    report.verdict = report.rank_drop_locus.empty() ? ActionRegularity::RegularOnGrid : ActionRegularity::NotRegular;
    return report;
}

const char* to_string(LevelRegularity v) {
    switch (v) {
    case LevelRegularity::Regular: return "regular";
    case LevelRegularity::NotRegular: return "not-regular";
    case LevelRegularity::EmptyLevelSet: return "empty-level-set";
    }
    return "not-regular";
}

QMatrix jacobian_at(const PolyMap& map, std::span<const Rational> p) {
    auto jac = map.jacobian();
    QMatrix out(map.target_dim(), map.source_dim());
    for (std::size_t r = 0; r < map.target_dim(); ++r) {
        for (std::size_t c = 0; c < map.source_dim(); ++c) out(r, c) = jac[r][c].evaluate(p);
    }
    return out;
}

void verify_level_set(const MomentMap& mu, const LevelSet& level) {
    if (level.c.size() != mu.k()) throw DimensionMismatch("level value needs one entry per moment component");
    if (level.param_grid.dim() != level.phi.source_dim()) {
        throw DimensionMismatch("parameter grid and parametrization disagree on dimension");
    }
    for (std::size_t a = 0; a < mu.k(); ++a) {
        if (mu.components[a].num_vars() != level.phi.target_dim()) {
            throw DimensionMismatch("parametrization does not land in the moment map's domain");
        }
        Poly composed = mu.components[a].compose(level.phi.components(), level.phi.source_dim());
        Poly expected = Poly::constant(level.phi.source_dim(), level.c[a]);
        if (composed != expected) {
            throw LevelSetMismatch("mu" + std::to_string(a) + " o phi = " + composed.to_string() + ", expected " +
                                   to_string(level.c[a]));
        }
    }
}

LevelRegularityReport is_regular_at(const DiracSpan& span, const ActionSpec& action, const MomentMap& mu,
                                    const RationalPoint& c, const std::optional<LevelSet>& level) {
    if (c.size() != mu.k()) throw DimensionMismatch("level value needs one entry per moment component");
    LevelRegularityReport report;
    if (!level) {
        for (std::size_t a = 0; a < mu.k(); ++a) {
            Poly shifted = mu.components[a] - Poly::constant(mu.components[a].num_vars(), c[a]);
            if (certifiably_nonvanishing(shifted)) {
                report.verdict = LevelRegularity::EmptyLevelSet;
                return report;
            }
        }
        throw PreconditionFailed("the level set is not provably empty; a parametrization is required");
    }
    if (level->c != c) throw LevelSetMismatch("parametrization was declared for a different level");
    verify_level_set(mu, *level);

    const SampleGrid& grid = level->param_grid;
    std::vector<RationalPoint> params = grid.nodes();
    std::vector<int> failing(params.size(), 0);
    const std::size_t source = level->phi.source_dim();
    parallel_for(params.size(), [&](std::size_t idx) {
        if (rank(jacobian_at(level->phi, params[idx])) != source) {
            throw PreconditionFailed("d phi drops rank at parameter " + point_string(params[idx]));
        }
        RationalPoint p = level->phi.evaluate(params[idx]);
        try {
            failing[idx] = rank(j_map(span, action, p)) < action.k();
        } catch (const DegenerateFiber&) {
            failing[idx] = 1;
        }
    });
    for (std::size_t idx = 0; idx < params.size(); ++idx) {
        if (failing[idx]) report.failing_params.push_back(params[idx]);
    }
    report.nodes_checked = params.size();
    report.verdict = report.failing_params.empty() ? LevelRegularity::Regular : LevelRegularity::NotRegular;
    return report;
}

} // namespace dirackit
