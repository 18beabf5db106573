#include "dirackit/tools/commands.hpp"

#include "dirackit/errors.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace dirackit::tools {

namespace {

Json status(bool pass) { return pass ? "pass" : "fail"; }

Json skipped(const std::string& why) { return {{"status", "skipped"}, {"reason", why}}; }

Json verdict_json(const SymbolicVerdict& v) {
    Json out{{"status", status(v.holds)}};
    if (v.witness) out["witness"] = *v.witness;
    return out;
}

Json points_json(const std::vector<RationalPoint>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(to_json(p));
    return out;
}

Json quad_json(const QuadratureResult& q) {
    return {{"value", round12(q.value)}, {"error_estimate", round12(q.error_estimate)}};
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CommandResult input_error(const std::string& command, const std::string& message) {
    CommandResult r;
    r.exit_code = ExitCode::InputError;
    r.report = {{"command", command}, {"status", "input-error"}, {"error", message}};
    return r;
}

// Parses and dispatches; input problems (syntax, shape, parse) map to exit code 2.
CommandResult guarded(const std::string& command, const std::string& text,
                      const std::function<CommandResult(const Json&)>& body) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        return input_error(command, std::string("JSON parse error: ") + e.what());
    }
    try {
        CommandResult r = body(doc);
        r.report["command"] = command;
        return r;
    } catch (const ParseError& e) {
        return input_error(command, e.what());
    } catch (const DimensionMismatch& e) {
        return input_error(command, e.what());
    } catch (const nlohmann::json::exception& e) {
        return input_error(command, std::string("malformed scene: ") + e.what());
    }
}

Scene require_dirac(const Json& doc, const LoadOptions& options) {
    Scene scene = load_scene(doc, options);
    if (!scene.dirac) throw ParseError("scene has no \"dirac\" block");
    return scene;
}

} // namespace

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

CommandResult run_validate(const std::string& scene_text, const LoadOptions& options) {
    return guarded("validate", scene_text, [&](const Json& doc) {
        CommandResult result;
        Json checks;
        Scene scene;
        try {
            scene = require_dirac(doc, options);
        } catch (const NotIsotropic& e) {
            checks["isotropy"] = {{"status", "fail"}, {"witness", e.what()}};
            for (const char* k : {"involutivity", "dirac_action", "moment_condition", "regularity"}) {
                checks[k] = skipped("isotropy failed");
            }
            result.report = {{"scene", doc.value("name", "")}, {"checks", checks}, {"status", "fail"}};
            result.exit_code = ExitCode::Negative;
            return result;
        }
        const DiracSpan& span = *scene.dirac;
        checks["isotropy"] = {{"status", "pass"}};

        IntegrabilityTensor tensor(span);
        if (auto entry = tensor.first_nonzero()) {
            checks["involutivity"] = {{"status", "fail"},
                                      {"witness", "T_" + std::to_string(entry->i) + std::to_string(entry->j) +
                                                      std::to_string(entry->k) + " = " + entry->value.to_string()}};
        } else {
            checks["involutivity"] = {{"status", "pass"}};
        }

        if (scene.action) {
            checks["dirac_action"] = verdict_json(is_dirac_action(span, *scene.action));
        } else {
            checks["dirac_action"] = skipped("no action");
        }

        if (scene.action && scene.moment) {
            MomentReport m = check_moment(span, *scene.action, *scene.moment);
            Json mj{{"status", status(m.holds())}, {"condition", verdict_json(m.condition)},
                    {"invariance", verdict_json(m.invariance)}};
            checks["moment_condition"] = mj;
        } else {
            checks["moment_condition"] = skipped("no moment map");
        }

        if (scene.action) {
            ActionRegularityReport ar = is_regular_action(span, *scene.action, scene.grid());
            Json action_json{{"verdict", to_string(ar.verdict)},
                             {"exact", ar.exact},
                             {"rank_drop_locus", points_json(ar.rank_drop_locus)},
                             {"degenerate_nodes", points_json(ar.degenerate_nodes)}};
            Json minors = Json::array();
            for (const auto& m : ar.minors) minors.push_back(m.to_string());
            action_json["minors"] = minors;
            Json reg{{"action", action_json}};
            bool pass = ar.regular();
            if (scene.moment && scene.level) {
                try {
                    std::optional<LevelSet> level;
                    if (scene.level->param) level = scene.level_set();
                    LevelRegularityReport lr = is_regular_at(span, *scene.action, *scene.moment, scene.level->c, level);
                    reg["level"] = {{"c", to_json(scene.level->c)},
                                    {"verdict", to_string(lr.verdict)},
                                    {"nodes_checked", lr.nodes_checked},
                                    {"failing_params", points_json(lr.failing_params)}};
                    pass = lr.regular();
                } catch (const LevelSetMismatch& e) {
                    reg["level"] = {{"verdict", "level-set-mismatch"}, {"error", e.what()}};
                    pass = false;
                } catch (const PreconditionFailed& e) {
                    reg["level"] = {{"verdict", "undetermined"}, {"error", e.what()}};
                    pass = false;
                }
            }
            reg["status"] = status(pass);
            checks["regularity"] = reg;
        } else {
            checks["regularity"] = skipped("no action");
        }

        bool all = true;
        for (const auto& [key, value] : checks.items()) {
            if (value.at("status") == "fail") all = false;
        }
        result.report = {{"scene", scene.name}, {"checks", checks}, {"status", status(all)}, {"seed", options.seed}};
        result.exit_code = all ? ExitCode::Pass : ExitCode::Negative;
        return result;
    });
}

CommandResult run_reduce(const std::string& scene_text, const LoadOptions& options) {
    return guarded("reduce", scene_text, [&](const Json& doc) {
        Scene scene = require_dirac(doc, options);
        if (!scene.quotient) throw ParseError("reduce needs a \"quotient\" block");
        const DiracSpan& span = *scene.dirac;
        CommandResult result;

        ReductionReport rr = smoothness_probe(span, *scene.quotient, scene.grid());
        Json levels = Json::array();
        std::ostringstream csv;
        csv << "level";
        for (std::size_t i = 0; i < span.dim(); ++i) csv << ",a" << i;
        for (std::size_t i = 0; i < span.dim(); ++i) csv << ",b" << i;
        csv << ",gap\n";
        for (std::size_t l = 0; l < rr.levels.size(); ++l) {
            const ProbeLevel& level = rr.levels[l];
            levels.push_back({{"resolution", level.grid.resolution()},
                              {"max_gap", round12(level.max_gap)},
                              {"skipped", points_json(level.skipped)}});
            const auto edges = level.grid.edges();
            for (std::size_t e = 0; e < edges.size(); ++e) {
                csv << l;
                for (const auto& q : level.grid.node(edges[e].first)) csv << "," << fmt(q.get_d());
                for (const auto& q : level.grid.node(edges[e].second)) csv << "," << fmt(q.get_d());
                csv << "," << fmt(level.edge_gaps[e]) << "\n";
            }
        }
        Json fibers = Json::array();
        const ProbeLevel& coarse = rr.levels.front();
        for (std::size_t i = 0; i < coarse.fibers.size(); ++i) {
            if (!coarse.fibers[i]) continue;
            fibers.push_back({{"point", to_json(coarse.grid.node(i))}, {"basis", canonical_basis_json(*coarse.fibers[i])}});
        }
        Json reduction{{"verdict", to_string(rr.verdict)},
                       {"levels", levels},
                       {"suspect_locus", points_json(rr.suspect_locus)},
                       {"fibers", fibers}};
        bool pass = rr.verdict == Smoothness::Smooth;

        Json diamond = skipped("scene has no complete level-set data");
        if (scene.action && scene.moment && scene.level && scene.level->param && scene.level->quotient &&
            scene.level->inclusion) {
            try {
                DiamondReport dr = verify_diamond(span, *scene.action, *scene.moment, scene.level_set(), *scene.quotient,
                                                  *scene.level->quotient, *scene.level->inclusion);
                Json failures = Json::array();
                for (const auto& f : dr.failures) failures.push_back({{"param", to_json(f.param)}, {"identity", f.identity}});
                diamond = {{"status", status(dr.holds())}, {"nodes_checked", dr.nodes_checked}, {"failures", failures}};
                pass = pass && dr.holds();
            } catch (const PreconditionFailed& e) {
                diamond = {{"status", "refused"}, {"reason", e.what()}};
                pass = false;
            } catch (const LevelSetMismatch& e) {
                diamond = {{"status", "refused"}, {"reason", e.what()}};
                pass = false;
            }
        }
        result.report = {{"scene", scene.name}, {"reduction", reduction}, {"diamond", diamond},
                         {"status", status(pass)}, {"seed", options.seed}};
        result.exit_code = pass ? ExitCode::Pass : ExitCode::Negative;
        result.csv = csv.str();
        return result;
    });
}

namespace {

const ObstructionSpec& require_obstruction(const Scene& scene) {
    if (!scene.obstruction) throw ParseError("scene has no obstruction data (\"f\", \"interval\")");
    return *scene.obstruction;
}

std::string lattice_csv(const MonodromyReport& report, std::size_t samples) {
    std::ostringstream csv;
    csv << "r,g,sphere_g\n";
    const double a = report.r_min.get_d();
    const double b = report.r_max.get_d();
    for (std::size_t i = 0; i < samples; ++i) {
        const double r = samples == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(samples - 1);
        csv << fmt(r) << "," << fmt(report.generator(r)) << "," << fmt(report.sphere_generator(r)) << "\n";
    }
    return csv.str();
}

} // namespace

CommandResult run_obstruct(const std::string& scene_text, const LoadOptions& options) {
    return guarded("obstruct", scene_text, [&](const Json& doc) {
        Scene scene = load_scene(doc, options);
        const ObstructionSpec& spec = require_obstruction(scene);
        CommandResult result;
        try {
            SphereAtlas atlas(spec.curvature_scale, spec.quadrature_order);
            MonodromyReport mr = monodromy_verdict(spec.f, spec.r_min, spec.r_max, atlas, spec.region);
            Json roots = Json::array();
            for (const auto& root : mr.critical_points) {
                Json rj{{"lo", to_string(root.lo)}, {"hi", to_string(root.hi)}, {"approx", round12(root.approx)}};
                if (root.exact) rj["exact"] = to_string(*root.exact);
                roots.push_back(rj);
            }
            Json lattice = Json::array();
            std::vector<double> rs{mr.r_min.get_d(), mr.r_max.get_d()};
            for (const auto& root : mr.critical_points) rs.push_back(root.approx);
            std::sort(rs.begin(), rs.end());
            for (double r : rs) {
                lattice.push_back({{"r", round12(r)},
                                   {"generator", round12(mr.generator(r))},
                                   {"sphere_generator", round12(mr.sphere_generator(r))}});
            }
            Json monodromy{{"verdict", to_string(mr.verdict)},
                           {"f", spec.f.to_string({"r"})},
                           {"derivative", mr.derivative.to_string({"r"})},
                           {"interval", {to_string(mr.r_min), to_string(mr.r_max)}},
                           {"region", {{"theta_lo", round12(mr.region.theta_lo)}, {"theta_hi", round12(mr.region.theta_hi)}}},
                           {"area", quad_json(mr.area)},
                           {"full_sphere_area", quad_json(mr.full_sphere_area)},
                           {"curvature_scale", round12(spec.curvature_scale)},
                           {"quadrature_order", spec.quadrature_order},
                           {"critical_points", roots},
                           {"interior_critical_points", mr.interior_critical_points},
                           {"lattice", lattice}};
            result.report = {{"scene", scene.name}, {"monodromy", monodromy},
                             {"status", mr.verdict == MonodromyVerdict::NonIntegrable ? "fail" : "pass"}};
            result.exit_code = mr.verdict == MonodromyVerdict::NonIntegrable ? ExitCode::Negative : ExitCode::Pass;
            result.csv = lattice_csv(mr, scene.grid_resolution < 2 ? 2 : 4 * scene.grid_resolution + 1);
        } catch (const PreconditionFailed& e) {
            throw ParseError(e.what());
        }
        return result;
    });
}

CommandResult run_area(const std::string& scene_text, const LoadOptions& options) {
    return guarded("area", scene_text, [&](const Json& doc) {
        Scene scene = load_scene(doc, options);
        const ObstructionSpec& spec = require_obstruction(scene);
        CommandResult result;
        std::optional<SphereAtlas> atlas;
        try {
            atlas.emplace(spec.curvature_scale, spec.quadrature_order);
        } catch (const PreconditionFailed& e) {
            throw ParseError(e.what());
        }
        bool pass = true;
        Json report{{"scene", scene.name}};
        try {
            QuadratureResult full = curvature_integral(*atlas, SphereRegion::full());
            QuadratureResult cap = curvature_integral(*atlas, SphereRegion::cap(spec.theta0));
            QuadratureResult rest = curvature_integral(*atlas, SphereRegion::cap_complement(spec.theta0));
            const double full_exact = 2.0 * std::numbers::pi * spec.curvature_scale;
            const double cap_exact = cap_integral_closed_form(spec.curvature_scale, spec.theta0);
            const bool additive = std::abs(cap.value + rest.value - full.value) < 1e-8;
            const bool chern = std::abs(std::abs(full.value) - std::abs(full_exact)) < 1e-8;
            pass = pass && additive && chern;
            report["curvature_integral"] = {{"full", quad_json(full)},
                                            {"full_closed_form", round12(full_exact)},
                                            {"cap", quad_json(cap)},
                                            {"cap_closed_form", round12(cap_exact)},
                                            {"cap_complement", quad_json(rest)},
                                            {"theta0", round12(spec.theta0)},
                                            {"additivity", status(additive)},
                                            {"chern_identity", status(chern)}};

            Json variations = Json::array();
            bool agree = true;
            for (const Rational& r0 : {spec.r_min, Rational((spec.r_min + spec.r_max) / 2), spec.r_max}) {
                DiskFamily family = DiskFamily::linear(spec.theta0, r0, Rational(1));
                const double numeric = area_variation_numeric(*atlas, spec.f, family, {spec.step});
                const double analytic = area_variation_analytic(*atlas, spec.f, family);
                const bool ok = std::abs(numeric - analytic) < 1e-6 * (1.0 + std::abs(analytic));
                agree = agree && ok;
                variations.push_back({{"r0", to_string(r0)},
                                      {"numeric", round12(numeric)},
                                      {"analytic", round12(analytic)},
                                      {"status", status(ok)}});
            }
            pass = pass && agree;
            report["area_variation"] = {{"samples", variations}, {"status", status(agree)}};

            QuadratureResult hom = homotopy_double_integral(*atlas, SphereHomotopy::latitude_shrink(spec.theta0));
            const bool stokes = std::abs(hom.value - cap.value) < 1e-6;
            pass = pass && stokes;
            report["homotopy"] = {{"value", round12(hom.value)},
                                  {"error_estimate", round12(hom.error_estimate)},
                                  {"cap", round12(cap.value)},
                                  {"status", status(stokes)}};

            MonodromyReport mr = monodromy_verdict(spec.f, spec.r_min, spec.r_max, *atlas, spec.region);
            result.csv = lattice_csv(mr, scene.grid_resolution < 2 ? 2 : 4 * scene.grid_resolution + 1);
        } catch (const QuadratureError& e) {
            report["error"] = e.what();
            pass = false;
        } catch (const PreconditionFailed& e) {
            throw ParseError(e.what());
        }
        report["status"] = status(pass);
        result.report = report;
        result.exit_code = pass ? ExitCode::Pass : ExitCode::Negative;
        return result;
    });
}

} // namespace dirackit::tools
