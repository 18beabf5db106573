#include "dirackit/tools/scene.hpp"

#include "dirackit/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dirackit::tools {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing key \"" + key + "\"");
    return *it;
}

const Json& require_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    return j;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

double number_from_json(const Json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return to_double(rational_from_json(j));
    throw ParseError(where + ": expected a number");
}

RationalPoint point_from_json(const Json& j, const std::string& where) {
    RationalPoint p;
    for (const auto& v : require_array(j, where)) p.push_back(rational_from_json(v));
    return p;
}

std::vector<Poly> polys_from_json(const Json& j, std::size_t vars, const std::string& where) {
    std::vector<Poly> out;
    for (const auto& item : require_array(j, where)) {
        Poly p = poly_from_json(item);
        if (p.num_vars() != vars) {
            throw DimensionMismatch(where + ": polynomial has " + std::to_string(p.num_vars()) + " variables, expected " +
                                    std::to_string(vars));
        }
        out.push_back(std::move(p));
    }
    return out;
}

DiracSpan dirac_from_json(const Json& j, const LoadOptions& options) {
    const std::size_t n = count_from_json(require(j, "dim", "dirac"), "dirac.dim");
    const std::string kind = require(j, "kind", "dirac").get<std::string>();
    Box domain = box_from_json(require(j, "domain", "dirac"));
    if (domain.dim() != n) throw DimensionMismatch("dirac.domain dimension differs from dirac.dim");
    const Json& data = require(j, "data", "dirac");

    if (kind == "2form" || kind == "bivector") {
        KForm omega(n, 2);
        Bivector pi(n);
        for (const auto& entry : require_array(require(data, "coeffs", "dirac.data"), "dirac.data.coeffs")) {
            const Json& idx = require(entry, "idx", "dirac.data.coeffs[]");
            if (!idx.is_array() || idx.size() != 2) throw ParseError("dirac.data.coeffs[].idx: expected [i, j]");
            const std::size_t i = count_from_json(idx[0], "idx");
            const std::size_t k = count_from_json(idx[1], "idx");
            if (i >= n || k >= n) throw DimensionMismatch("dirac.data.coeffs[].idx out of range");
            Poly p = poly_from_json(require(entry, "poly", "dirac.data.coeffs[]"));
            if (p.num_vars() != n) throw DimensionMismatch("dirac.data.coeffs[].poly: wrong number of variables");
            if (kind == "2form") {
                omega.add_term({i, k}, p);
            } else {
                if (i == k) throw ParseError("bivector coefficient with repeated index");
                pi.set(i, k, pi.coefficient(i, k) + p);
            }
        }
        return kind == "2form" ? from_2form(omega, domain) : from_bivector(pi, domain);
    }
    if (kind == "distribution") {
        std::vector<VectorField> vectors;
        for (const auto& v : require_array(require(data, "vectors", "dirac.data"), "dirac.data.vectors")) {
            vectors.push_back(vector_field_from_json(v, n));
        }
        DistributionOptions opts;
        opts.seed = options.seed;
        if (auto it = data.find("annihilator"); it != data.end()) {
            std::vector<KForm> ann;
            for (const auto& a : require_array(*it, "dirac.data.annihilator")) ann.push_back(one_form_from_json(a, n));
            opts.annihilator = std::move(ann);
        }
        if (auto it = data.find("max_degree"); it != data.end()) {
            opts.max_degree = static_cast<unsigned>(count_from_json(*it, "dirac.data.max_degree"));
        }
        return from_distribution(vectors, domain, opts);
    }
    if (kind == "span") {
        std::vector<CourantSection> sections;
        for (const auto& s : require_array(require(data, "sections", "dirac.data"), "dirac.data.sections")) {
            sections.push_back({vector_field_from_json(require(s, "X", "section"), n),
                                one_form_from_json(require(s, "alpha", "section"), n)});
        }
        std::optional<std::string> locus;
        if (auto it = data.find("degeneracy_locus"); it != data.end()) locus = it->get<std::string>();
        return DiracSpan(n, std::move(sections), std::move(domain), DiracKind::Span, std::move(locus));
    }
    throw ParseError("dirac.kind: unknown kind \"" + kind + "\"");
}

ObstructionSpec obstruction_from_json(const Json& j, const LoadOptions& options) {
    ObstructionSpec spec;
    spec.f = poly_from_json(require(j, "f", "obstruction"));
    if (spec.f.num_vars() != 1) throw DimensionMismatch("obstruction.f must be a polynomial in one variable r");
    const Json& interval = require(j, "interval", "obstruction");
    if (!interval.is_array() || interval.size() != 2) throw ParseError("obstruction.interval: expected [a, b]");
    spec.r_min = rational_from_json(interval[0]);
    spec.r_max = rational_from_json(interval[1]);
    if (spec.r_min > spec.r_max) throw ParseError("obstruction.interval: a > b");
    if (auto it = j.find("curvature_scale"); it != j.end()) {
        spec.curvature_scale = number_from_json(*it, "obstruction.curvature_scale");
    }
    if (auto it = j.find("quadrature_order"); it != j.end()) {
        spec.quadrature_order = count_from_json(*it, "obstruction.quadrature_order");
    }
    if (options.quadrature_order) spec.quadrature_order = *options.quadrature_order;
    if (auto it = j.find("theta0"); it != j.end()) spec.theta0 = number_from_json(*it, "obstruction.theta0");
    if (auto it = j.find("step"); it != j.end()) spec.step = number_from_json(*it, "obstruction.step");
    if (auto it = j.find("region"); it != j.end()) {
        const std::string kind = require(*it, "kind", "obstruction.region").get<std::string>();
        if (kind == "full") {
            spec.region = SphereRegion::full();
        } else if (kind == "cap") {
            spec.region = SphereRegion::cap(number_from_json(require(*it, "theta0", "obstruction.region"), "theta0"));
        } else {
            throw ParseError("obstruction.region.kind: expected \"full\" or \"cap\"");
        }
    }
    return spec;
}

} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational as \"p/q\" string or integer");
}

Json to_json(const Rational& q) { return to_string(q); }

Poly poly_from_json(const Json& j) {
    const std::size_t vars = count_from_json(require(j, "vars", "poly"), "poly.vars");
    Poly p(vars);
    for (const auto& term : require_array(require(j, "terms", "poly"), "poly.terms")) {
        const Json& exp = require(term, "exp", "poly.terms[]");
        if (!exp.is_array() || exp.size() != vars) throw ParseError("poly.terms[].exp: expected one entry per variable");
        Exponent e;
        for (const auto& k : exp) e.push_back(static_cast<std::uint32_t>(count_from_json(k, "poly.terms[].exp")));
        Rational num = rational_from_json(require(term, "num", "poly.terms[]"));
        Rational den = 1;
        if (auto it = term.find("den"); it != term.end()) den = rational_from_json(*it);
        if (den == 0) throw ParseError("poly.terms[].den is zero");
        Rational c = num / den;
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"vars", p.num_vars()}, {"terms", terms}};
}

PolyMap polymap_from_json(const Json& j) {
    const std::size_t source = count_from_json(require(j, "source", "map"), "map.source");
    return PolyMap(source, polys_from_json(require(j, "components", "map"), source, "map.components"));
}

Json to_json(const PolyMap& m) {
    Json comps = Json::array();
    for (const auto& c : m.components()) comps.push_back(to_json(c));
    return {{"source", m.source_dim()}, {"components", comps}};
}

VectorField vector_field_from_json(const Json& j, std::size_t dim) {
    auto comps = polys_from_json(j, dim, "vector field");
    if (comps.size() != dim) throw DimensionMismatch("vector field needs one component per coordinate");
    return VectorField(std::move(comps));
}

KForm one_form_from_json(const Json& j, std::size_t dim) {
    auto comps = polys_from_json(j, dim, "1-form");
    if (comps.size() != dim) throw DimensionMismatch("1-form needs one coefficient per coordinate");
    return KForm::one_form(std::move(comps));
}

Box box_from_json(const Json& j) {
    Box b{point_from_json(require(j, "min", "domain"), "domain.min"),
          point_from_json(require(j, "max", "domain"), "domain.max")};
    if (b.min.size() != b.max.size()) throw ParseError("domain.min and domain.max differ in length");
    for (std::size_t i = 0; i < b.min.size(); ++i) {
        if (b.min[i] > b.max[i]) throw ParseError("domain has min > max");
    }
    return b;
}

Json to_json(const RationalPoint& p) {
    Json out = Json::array();
    for (const auto& q : p) out.push_back(to_string(q));
    return out;
}

Json canonical_basis_json(const LinearDirac& l) {
    QMatrix rows = l.basis().transpose();
    auto pivots = rref_in_place(rows);
    Json out = Json::array();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < rows.cols(); ++c) row.push_back(to_string(rows(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

SampleGrid Scene::grid() const {
    if (grid_domain) return SampleGrid::uniform(*grid_domain, grid_resolution);
    if (!dirac) throw PreconditionFailed("scene has neither a grid domain nor a Dirac structure");
    return SampleGrid::uniform(dirac->domain(), grid_resolution);
}

LevelSet Scene::level_set() const {
    if (!level || !level->param) throw PreconditionFailed("scene has no level-set parametrization");
    Box domain = level->param_domain ? *level->param_domain
                                     : Box{RationalPoint(level->param->source_dim(), Rational(-1)),
                                           RationalPoint(level->param->source_dim(), Rational(1))};
    if (domain.dim() != level->param->source_dim()) {
        throw DimensionMismatch("level_set.domain dimension differs from the parametrization source");
    }
    const std::size_t res = level->resolution.value_or(grid_resolution);
    return LevelSet{level->c, *level->param, SampleGrid::uniform(domain, res)};
}

Scene load_scene(const Json& doc, const LoadOptions& options) {
    if (!doc.is_object()) throw ParseError("scene must be a JSON object");
    try {
        Scene scene;
        if (auto it = doc.find("name"); it != doc.end()) scene.name = it->get<std::string>();
        if (auto it = doc.find("grid"); it != doc.end()) {
            if (auto r = it->find("res"); r != it->end()) scene.grid_resolution = count_from_json(*r, "grid.res");
            if (it->contains("min") || it->contains("max")) scene.grid_domain = box_from_json(*it);
        }
        if (options.grid_resolution) scene.grid_resolution = *options.grid_resolution;
        if (scene.grid_resolution < 1) throw ParseError("grid.res must be at least 1");

        if (doc.contains("f")) {
            scene.obstruction = obstruction_from_json(doc, options);
            return scene;
        }
        if (auto it = doc.find("obstruction"); it != doc.end()) scene.obstruction = obstruction_from_json(*it, options);

        if (auto it = doc.find("dirac"); it != doc.end()) scene.dirac = dirac_from_json(*it, options);
        const std::size_t n = scene.dirac ? scene.dirac->dim() : 0;
        if (scene.grid_domain && scene.dirac && scene.grid_domain->dim() != n) {
            throw DimensionMismatch("grid domain dimension differs from the Dirac structure");
        }

        if (auto it = doc.find("action"); it != doc.end()) {
            if (!scene.dirac) throw ParseError("action given without a Dirac structure");
            const Json& group = require(*it, "group", "action");
            const std::string kind = require(group, "kind", "action.group").get<std::string>();
            if (kind != "R" && kind != "T") throw ParseError("action.group.kind: expected \"R\" or \"T\"");
            const std::size_t k = count_from_json(require(group, "k", "action.group"), "action.group.k");
            std::vector<VectorField> gens;
            for (const auto& g : require_array(require(*it, "generators", "action"), "action.generators")) {
                gens.push_back(vector_field_from_json(g, n));
            }
            if (gens.size() != k) throw DimensionMismatch("action.group.k differs from the number of generators");
            std::optional<PeriodicityWitness> witness;
            if (auto w = it->find("periodicity"); w != it->end()) {
                PeriodicityWitness pw;
                if (auto d = w->find("description"); d != w->end()) pw.description = d->get<std::string>();
                if (auto p = w->find("period"); p != w->end()) pw.period = number_from_json(*p, "period");
                witness = pw;
            }
            scene.action = ActionSpec(kind == "T" ? GroupKind::Torus : GroupKind::Real, std::move(gens), witness);
            if (auto m = it->find("moment"); m != it->end()) {
                MomentMap mu{polys_from_json(*m, n, "action.moment")};
                if (mu.k() != k) throw DimensionMismatch("action.moment needs one component per generator");
                scene.moment = std::move(mu);
            }
        }

        if (auto it = doc.find("quotient"); it != doc.end()) {
            if (!scene.action) throw ParseError("quotient given without an action");
            PolyMap map = polymap_from_json(require(*it, "map", "quotient"));
            scene.quotient = QuotientPresentation(std::move(map), *scene.action);
        }

        if (auto it = doc.find("level_set"); it != doc.end()) {
            LevelSetSpec spec;
            spec.c = point_from_json(require(*it, "c", "level_set"), "level_set.c");
            if (auto p = it->find("param"); p != it->end()) spec.param = polymap_from_json(*p);
            if (auto d = it->find("domain"); d != it->end()) spec.param_domain = box_from_json(*d);
            if (auto r = it->find("res"); r != it->end()) spec.resolution = count_from_json(*r, "level_set.res");
            if (options.grid_resolution) spec.resolution = *options.grid_resolution;
            if (auto q = it->find("quotient"); q != it->end()) spec.quotient = polymap_from_json(*q);
            if (auto i = it->find("inclusion"); i != it->end()) spec.inclusion = polymap_from_json(*i);
            if (spec.param && spec.param->target_dim() != n) {
                throw DimensionMismatch("level_set.param must land in the ambient space");
            }
            scene.level = std::move(spec);
        }
        return scene;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed scene: ") + e.what());
    }
}

} // namespace dirackit::tools
