#include "dirackit/tools/scene.hpp"

namespace dirackit::tools {

const char* scene_schema() {
    return R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "https://dirackit.invalid/scene.schema.json",
  "title": "dirackit scene",
  "type": "object",
  "$defs": {
    "rational": {
      "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
      ]
    },
    "number": {"oneOf": [{"type": "number"}, {"$ref": "#/$defs/rational"}]},
    "point": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
    "box": {
      "type": "object",
      "required": ["min", "max"],
      "properties": {"min": {"$ref": "#/$defs/point"}, "max": {"$ref": "#/$defs/point"}}
    },
    "poly": {
      "type": "object",
      "required": ["vars", "terms"],
      "properties": {
        "vars": {"type": "integer", "minimum": 0},
        "terms": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["exp", "num"],
            "properties": {
              "exp": {"type": "array", "items": {"type": "integer", "minimum": 0}},
              "num": {"$ref": "#/$defs/rational"},
              "den": {"$ref": "#/$defs/rational"}
            }
          }
        }
      }
    },
    "polys": {"type": "array", "items": {"$ref": "#/$defs/poly"}},
    "map": {
      "type": "object",
      "required": ["source", "components"],
      "properties": {"source": {"type": "integer", "minimum": 0}, "components": {"$ref": "#/$defs/polys"}}
    },
    "dirac": {
      "type": "object",
      "required": ["dim", "kind", "domain", "data"],
      "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "kind": {"enum": ["2form", "bivector", "distribution", "span"]},
        "domain": {"$ref": "#/$defs/box"},
        "data": {
          "type": "object",
          "properties": {
            "coeffs": {
              "type": "array",
              "items": {
                "type": "object",
                "required": ["idx", "poly"],
                "properties": {
                  "idx": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
                  "poly": {"$ref": "#/$defs/poly"}
                }
              }
            },
            "vectors": {"type": "array", "items": {"$ref": "#/$defs/polys"}},
            "annihilator": {"type": "array", "items": {"$ref": "#/$defs/polys"}},
            "max_degree": {"type": "integer", "minimum": 0},
            "sections": {
              "type": "array",
              "items": {
                "type": "object",
                "required": ["X", "alpha"],
                "properties": {"X": {"$ref": "#/$defs/polys"}, "alpha": {"$ref": "#/$defs/polys"}}
              }
            },
            "degeneracy_locus": {"type": "string"}
          }
        }
      }
    },
    "action": {
      "type": "object",
      "required": ["group", "generators"],
      "properties": {
        "group": {
          "type": "object",
          "required": ["kind", "k"],
          "properties": {"kind": {"enum": ["R", "T"]}, "k": {"type": "integer", "minimum": 1}}
        },
        "generators": {"type": "array", "items": {"$ref": "#/$defs/polys"}},
        "periodicity": {
          "type": "object",
          "properties": {"description": {"type": "string"}, "period": {"$ref": "#/$defs/number"}}
        },
        "moment": {"$ref": "#/$defs/polys"}
      }
    },
    "level_set": {
      "type": "object",
      "required": ["c"],
      "properties": {
        "c": {"$ref": "#/$defs/point"},
        "param": {"$ref": "#/$defs/map"},
        "domain": {"$ref": "#/$defs/box"},
        "res": {"type": "integer", "minimum": 1},
        "quotient": {"$ref": "#/$defs/map"},
        "inclusion": {"$ref": "#/$defs/map"}
      }
    },
    "obstruction": {
      "type": "object",
      "required": ["f", "interval"],
      "properties": {
        "f": {"$ref": "#/$defs/poly"},
        "interval": {"type": "array", "items": {"$ref": "#/$defs/rational"}, "minItems": 2, "maxItems": 2},
        "curvature_scale": {"$ref": "#/$defs/number"},
        "quadrature_order": {"type": "integer", "minimum": 4},
        "theta0": {"$ref": "#/$defs/number"},
        "step": {"$ref": "#/$defs/number"},
        "region": {
          "type": "object",
          "required": ["kind"],
          "properties": {"kind": {"enum": ["full", "cap"]}, "theta0": {"$ref": "#/$defs/number"}}
        }
      }
    }
  },
  "properties": {
    "name": {"type": "string"},
    "dirac": {"$ref": "#/$defs/dirac"},
    "action": {"$ref": "#/$defs/action"},
    "quotient": {"type": "object", "required": ["map"], "properties": {"map": {"$ref": "#/$defs/map"}}},
    "level_set": {"$ref": "#/$defs/level_set"},
    "grid": {
      "type": "object",
      "properties": {
        "res": {"type": "integer", "minimum": 1},
        "min": {"$ref": "#/$defs/point"},
        "max": {"$ref": "#/$defs/point"}
      }
    },
    "obstruction": {"$ref": "#/$defs/obstruction"},
    "f": {"$ref": "#/$defs/poly"},
    "interval": {"type": "array", "items": {"$ref": "#/$defs/rational"}, "minItems": 2, "maxItems": 2},
    "curvature_scale": {"$ref": "#/$defs/number"},
    "quadrature_order": {"type": "integer", "minimum": 4}
  }
}
)json";
}

} // namespace dirackit::tools
