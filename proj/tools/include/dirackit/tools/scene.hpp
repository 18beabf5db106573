#pragma once

#include "dirackit/obstruction.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace dirackit::tools {

using Json = nlohmann::json;

// Value codecs. Rationals are "p/q" strings (plain integers are accepted on input).
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
Poly poly_from_json(const Json& j);
Json to_json(const Poly& p);
PolyMap polymap_from_json(const Json& j);
Json to_json(const PolyMap& m);
VectorField vector_field_from_json(const Json& j, std::size_t dim);
KForm one_form_from_json(const Json& j, std::size_t dim);
Box box_from_json(const Json& j);
Json to_json(const RationalPoint& p);
/// Row-reduced basis so that equal subspaces serialize identically.
Json canonical_basis_json(const LinearDirac& l);

/// Rounds to 12 significant digits so reports are stable across platforms.
double round12(double v);

struct LevelSetSpec {
    RationalPoint c;
    std::optional<PolyMap> param;
    std::optional<Box> param_domain;
    std::optional<std::size_t> resolution;
    std::optional<PolyMap> quotient;
    std::optional<PolyMap> inclusion;
};

struct ObstructionSpec {
    Poly f;
    Rational r_min;
    Rational r_max;
    double curvature_scale = 1.0;
    std::size_t quadrature_order = 12;
    SphereRegion region = SphereRegion::full();
    double theta0 = 1.5707963267948966;
    double step = 1e-2;
};

struct Scene {
    std::string name;
    std::optional<DiracSpan> dirac;
    std::optional<ActionSpec> action;
    std::optional<MomentMap> moment;
    std::optional<QuotientPresentation> quotient;
    std::optional<LevelSetSpec> level;
    std::size_t grid_resolution = 8;
    std::optional<Box> grid_domain;
    std::optional<ObstructionSpec> obstruction;

    [[nodiscard]] SampleGrid grid() const;
    /// Level set with its parameter grid; requires a parametrization.
    [[nodiscard]] LevelSet level_set() const;
};

struct LoadOptions {
    std::optional<std::size_t> grid_resolution;
    std::optional<std::size_t> quadrature_order;
    std::uint64_t seed = 0x5eed;
};

/// Builds a scene; throws ParseError on malformed input and the library's errors
/// (NotIsotropic, DimensionMismatch, ...) when the data is inconsistent.
Scene load_scene(const Json& doc, const LoadOptions& options = {});

/// JSON Schema (draft 2020-12) for scene files.
const char* scene_schema();

} // namespace dirackit::tools
