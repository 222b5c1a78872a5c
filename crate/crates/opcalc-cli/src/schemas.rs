//! JSON Schema documents for the on-disk formats.
//!
//! The schemas pin the structural layer; semantic invariants (bijectivity
//! of actions, exponent sums, exact rational sums) are enforced by the core
//! parsers on top.

use std::fs;
use std::path::Path;

use serde_json::{json, Value};

const FRACTION_PATTERN: &str = "^-?[0-9]+(/[0-9]+)?$";

pub fn symseq_schema() -> Value {
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": "opcalc/symseq.schema.json",
        "title": "SymSeq",
        "description": "Symmetric sequence of finite pointed sets; level n lists non-basepoint labels and the action of each adjacent transposition",
        "type": "object",
        "required": ["levels"],
        "additionalProperties": false,
        "properties": {
            "levels": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "required": ["n", "elements"],
                    "additionalProperties": false,
                    "properties": {
                        "n": {"type": "integer", "minimum": 1},
                        "elements": {"type": "array", "items": {"type": "string"}},
                        "action": {
                            "type": "object",
                            "additionalProperties": {
                                "type": "object",
                                "additionalProperties": {"type": "string"}
                            }
                        }
                    }
                }
            }
        }
    })
}

pub fn operad_schema() -> Value {
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": "opcalc/operad.schema.json",
        "title": "OperadData",
        "description": "A symmetric sequence with a unit element and composition tables, one table per shape (k; j_1..j_k)",
        "type": "object",
        "required": ["levels", "unit", "gamma"],
        "additionalProperties": false,
        "properties": {
            "levels": symseq_schema()["properties"]["levels"].clone(),
            "unit": {"type": "string"},
            "gamma": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["k", "parts", "table"],
                    "additionalProperties": false,
                    "properties": {
                        "k": {"type": "integer", "minimum": 1},
                        "parts": {
                            "type": "array",
                            "minItems": 1,
                            "items": {"type": "integer", "minimum": 1}
                        },
                        "table": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "required": ["outer", "inner", "out"],
                                "additionalProperties": false,
                                "properties": {
                                    "outer": {"type": "string"},
                                    "inner": {"type": "array", "items": {"type": "string"}},
                                    "out": {"type": ["string", "null"]}
                                }
                            }
                        }
                    }
                }
            }
        }
    })
}

pub fn polyfunseq_schema() -> Value {
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": "opcalc/polyfunseq.schema.json",
        "title": "PolyFunSeq",
        "description": "Symbolic symmetric functor sequence: level n is a wedge of monomials with pointed coefficient sets (elements are *-joined atom multisets, \"1\" is the unit element) and one exponent per variable",
        "type": "object",
        "required": ["levels"],
        "additionalProperties": false,
        "properties": {
            "levels": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "required": ["n", "terms"],
                    "additionalProperties": false,
                    "properties": {
                        "n": {"type": "integer", "minimum": 1},
                        "terms": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "required": ["coeff", "exp"],
                                "additionalProperties": false,
                                "properties": {
                                    "coeff": {"type": "array", "items": {"type": "string"}},
                                    "exp": {
                                        "type": "array",
                                        "minItems": 1,
                                        "items": {"type": "integer", "minimum": 0}
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    })
}

pub fn sphere_point_schema() -> Value {
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": "opcalc/sphere-point.schema.json",
        "title": "SpherePoint",
        "description": "A point of a compactified simplex: exact fraction strings summing to 1, or the basepoint \"inf\"",
        "oneOf": [
            {"const": "inf"},
            {
                "type": "array",
                "minItems": 1,
                "items": {"type": "string", "pattern": FRACTION_PATTERN}
            }
        ]
    })
}

pub fn report_schema() -> Value {
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": "opcalc/report.schema.json",
        "title": "Report",
        "description": "Envelope emitted by every subcommand",
        "type": "object",
        "required": ["command", "status"],
        "properties": {
            "command": {"type": "string"},
            "status": {"enum": ["pass", "fail", "not-established"]},
            "checked": {"type": "integer", "minimum": 0},
            "failures": {"type": "integer", "minimum": 0},
            "witness": {},
            "counterexample": {}
        }
    })
}

/// Writes all five schema files.
pub fn emit_all(out_dir: &Path) -> anyhow::Result<Vec<String>> {
    fs::create_dir_all(out_dir)?;
    let docs = [
        ("symseq.schema.json", symseq_schema()),
        ("operad.schema.json", operad_schema()),
        ("polyfunseq.schema.json", polyfunseq_schema()),
        ("sphere-point.schema.json", sphere_point_schema()),
        ("report.schema.json", report_schema()),
    ];
    let mut written = Vec::new();
    for (name, doc) in docs {
        let mut text = serde_json::to_string_pretty(&doc)?;
        text.push('\n');
        fs::write(out_dir.join(name), text)?;
        written.push(name.to_string());
    }
    Ok(written)
}
