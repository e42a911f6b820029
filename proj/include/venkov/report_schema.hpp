#ifndef VENKOV_REPORT_SCHEMA_HPP
#define VENKOV_REPORT_SCHEMA_HPP

namespace venkov {

// JSON Schema for the per-form report documents. The copy shipped in
// docs/report.schema.json must stay byte-identical to this text; a unit test
// compares them.
inline const char* reportSchemaText() {
  return R"JSON({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Voronoi parallelohedron check report",
  "type": "object",
  "required": [
    "formId",
    "dim",
    "gram",
    "facetPairs",
    "cellVertices",
    "ridgeCounts",
    "dual3Census",
    "venkov",
    "graph",
    "ordine3Irreducible",
    "skeletonMatch",
    "triangleSpanHolds"
  ],
  "additionalProperties": false,
  "properties": {
    "formId": { "type": "string" },
    "dim": { "type": "integer", "minimum": 2, "maximum": 6 },
    "gram": {
      "type": "array",
      "items": { "type": "array", "items": { "type": "string" } }
    },
    "facetPairs": { "type": "integer", "minimum": 0 },
    "cellVertices": { "type": ["integer", "null"], "minimum": 0 },
    "ridgeCounts": {
      "type": ["object", "null"],
      "required": ["primitive", "nonPrimitive"],
      "additionalProperties": false,
      "properties": {
        "primitive": { "type": "integer", "minimum": 0 },
        "nonPrimitive": { "type": "integer", "minimum": 0 }
      }
    },
    "dual3Census": {
      "type": ["object", "null"],
      "required": ["tetrahedron", "pyramid", "octahedron", "prism", "cube"],
      "additionalProperties": false,
      "properties": {
        "tetrahedron": { "type": "integer", "minimum": 0 },
        "pyramid": { "type": "integer", "minimum": 0 },
        "octahedron": { "type": "integer", "minimum": 0 },
        "prism": { "type": "integer", "minimum": 0 },
        "cube": { "type": "integer", "minimum": 0 }
      }
    },
    "venkov": {
      "type": ["object", "null"],
      "required": ["f0", "f1", "f2", "rankDelta0", "rankDelta1", "h1Trivial"],
      "additionalProperties": false,
      "properties": {
        "f0": { "type": "integer", "minimum": 0 },
        "f1": { "type": "integer", "minimum": 0 },
        "f2": { "type": "integer", "minimum": 0 },
        "rankDelta0": { "type": "integer", "minimum": 0 },
        "rankDelta1": { "type": "integer", "minimum": 0 },
        "h1Trivial": { "type": "boolean" }
      }
    },
    "graph": {
      "type": ["object", "null"],
      "required": [
        "v",
        "redEdges",
        "blueEdges",
        "components",
        "isolated",
        "cyclomatic",
        "basicCycleRank",
        "basicCycleRankNoPyramidTc",
        "ggmHolds"
      ],
      "additionalProperties": false,
      "properties": {
        "v": { "type": "integer", "minimum": 0 },
        "redEdges": { "type": "integer", "minimum": 0 },
        "blueEdges": { "type": "integer", "minimum": 0 },
        "components": { "type": "integer", "minimum": 0 },
        "isolated": { "type": "integer", "minimum": 0 },
        "cyclomatic": { "type": "integer", "minimum": 0 },
        "basicCycleRank": { "type": "integer", "minimum": 0 },
        "basicCycleRankNoPyramidTc": { "type": "integer", "minimum": 0 },
        "ggmHolds": { "type": "boolean" }
      }
    },
    "ordine3Irreducible": { "type": ["boolean", "null"] },
    "skeletonMatch": { "type": ["boolean", "null"] },
    "triangleSpanHolds": { "type": ["boolean", "null"] },
    "timings": {
      "type": "object",
      "additionalProperties": { "type": "integer", "minimum": 0 }
    }
  }
}
)JSON";
}

}  // namespace venkov

#endif  // VENKOV_REPORT_SCHEMA_HPP
