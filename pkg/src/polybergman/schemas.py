"""JSON Schemas (draft 2020-12) for the CLI's machine-readable output."""
from __future__ import annotations

_NUMBER = {"type": "number"}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _NUMBER}}
_COMPLEX = {
    "type": "object",
    "properties": {"re": _NUMBER, "im": _NUMBER},
    "required": ["re", "im"],
}

MATRIX_SEQUENCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "MatrixSequence",
    "type": "object",
    "properties": {
        "alpha": _NUMBER,
        "n": {"type": "integer", "minimum": 1},
        "xi_max": {"type": "integer"},
        "quad_order": {"type": ["integer", "null"]},
        "symbol": {"type": "string"},
        "blocks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "xi": {"type": "integer"},
                    "dim": {"type": "integer", "minimum": 1},
                    "row_labels": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "col_labels": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "entries_re": _MATRIX,
                    "entries_im": _MATRIX,
                },
                "required": ["xi", "dim", "row_labels", "col_labels", "entries_re", "entries_im"],
            },
        },
    },
    "required": ["alpha", "n", "xi_max", "quad_order", "blocks"],
}

JACOBI_TABLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "JacobiTable",
    "type": "object",
    "properties": {
        "command": {"const": "jacobi"},
        "n": {"type": "integer", "minimum": 0},
        "alpha": _NUMBER,
        "beta": _NUMBER,
        "columns": {"const": ["point", "R", "J", "Q", "P"]},
        "rows": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [_NUMBER, _NUMBER, {"type": ["number", "null"]}, _NUMBER, _NUMBER],
                "minItems": 5,
                "maxItems": 5,
            },
        },
    },
    "required": ["command", "n", "alpha", "beta", "columns", "rows"],
}

SPECTRUM_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Spectrum",
    "type": "object",
    "properties": {
        "command": {"const": "spectrum"},
        "alpha": _NUMBER,
        "n": {"type": "integer", "minimum": 1},
        "p_max": {"type": "integer", "minimum": 0},
        "quad_order": {"type": "integer", "minimum": 1},
        "symbol": {"type": "string"},
        "lambda": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"p": {"type": "integer"}, "re": _NUMBER, "im": _NUMBER},
                "required": ["p", "re", "im"],
            },
        },
        "max_gamma_deviation": _NUMBER,
        "passed": {"type": "boolean"},
    },
    "required": ["command", "alpha", "n", "p_max", "lambda", "passed"],
}

BEREZIN_DEMO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "BerezinDemo",
    "type": "object",
    "properties": {
        "command": {"const": "berezin-demo"},
        "alpha": _NUMBER,
        "n": {"type": "integer", "minimum": 2},
        "max_p": {"type": "integer", "minimum": 1},
        "forms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "symbol": {"type": "string"},
                    "form_f": _COMPLEX,
                    "form_fbar": _COMPLEX,
                    "diff": _NUMBER,
                },
                "required": ["symbol", "form_f", "form_fbar", "diff"],
            },
        },
        "max_form_diff": _NUMBER,
        "separating_form_f": _COMPLEX,
        "separating_form_fbar": _COMPLEX,
        "englis_norm": _NUMBER,
        "max_abs_berezin": _NUMBER,
        "grid_points": {"type": "integer"},
        "max_kernel_tail": _NUMBER,
        "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "passed": {"type": "boolean"},
    },
    "required": [
        "command", "alpha", "n", "max_p", "forms", "max_form_diff", "separating_form_f",
        "separating_form_fbar", "max_abs_berezin", "checks", "passed",
    ],
}
