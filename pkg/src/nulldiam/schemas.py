"""JSON Schemas for the stable machine-readable outputs.

The CLI's JSON lines and the sweep report validate against these; text
output is for humans and carries no compatibility promise.
"""

from __future__ import annotations

_PARAMS = {
    "type": ["object", "null"],
    "properties": {
        "b": {"type": "integer", "minimum": 0},
        "A": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
    "required": ["b", "A"],
    "additionalProperties": False,
}

INVARIANT_RECORD = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "graph6": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "connected": {"type": "boolean"},
        "d": {"type": ["integer", "null"], "minimum": 0},
        "rank": {"type": "integer", "minimum": 0},
        "nullity": {"type": "integer", "minimum": 0},
        "e": {"type": "integer", "minimum": 0},
        "reduced": {"type": "boolean"},
    },
    "required": ["graph6", "n", "connected", "d", "rank", "nullity", "e", "reduced"],
    "additionalProperties": False,
}

RECOGNITION_RESULT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "graph6": {"type": "string"},
        "verdict": {
            "enum": ["NotExtremal", "OddExtremal", "EvenExtremal", "Mismatch", "Inconclusive"]
        },
        "n": {"type": "integer", "minimum": 1},
        "d": {"type": "integer", "minimum": 0},
        "nullity": {"type": "integer", "minimum": 0},
        "params": _PARAMS,
        "variant": {"enum": ["G2", "G3", None]},
        "witness": {"type": ["object", "null"]},
    },
    "required": ["graph6", "verdict", "n", "d", "nullity", "params", "variant", "witness"],
    "additionalProperties": False,
}

VIOLATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "lemma": {"type": "string"},
        "graph6": {"type": "string"},
        "witness": {"type": "object"},
        "expected": {"type": "string"},
        "observed": {"type": "string"},
        "severity": {"enum": ["violation", "high"]},
    },
    "required": ["lemma", "graph6", "witness", "expected", "observed", "severity"],
    "additionalProperties": False,
}

VIOLATION_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "lemma": {"type": "string"},
        "graph6": {"type": "string"},
        "checked": {"type": "integer", "minimum": 0},
        "violations": {"type": "array", "items": VIOLATION},
        "skipped": {"type": ["string", "null"]},
        "truncated": {"type": "boolean"},
        "notes": {"type": "object"},
    },
    "required": ["lemma", "graph6", "checked", "violations", "skipped", "truncated", "notes"],
    "additionalProperties": False,
}

SWEEP_TOTALS = {
    "type": "object",
    "properties": {
        "connected": {"type": "integer", "minimum": 0},
        "reduced": {"type": "integer", "minimum": 0},
        "extremal": {"type": "integer", "minimum": 0},
        "odd_extremal": {"type": "integer", "minimum": 0},
        "even_extremal": {"type": "integer", "minimum": 0},
        "recognized": {"type": "integer", "minimum": 0},
    },
    "required": ["connected", "reduced", "extremal", "odd_extremal", "even_extremal", "recognized"],
    "additionalProperties": False,
}

SWEEP_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "n_min": {"type": "integer"},
        "n_max": {"type": "integer"},
        "suites": {"type": "array", "items": {"type": "string"}},
        "per_n": {"type": "object", "additionalProperties": SWEEP_TOTALS},
        "mismatches": {"type": "array", "items": {"type": "string"}},
        "inconclusive": {"type": "array", "items": {"type": "string"}},
        "recognized": {"type": "array", "items": {"type": "object"}},
        "unreduced_failures": {"type": "array", "items": {"type": "string"}},
        "lemma_summaries": {"type": "object"},
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
    "required": [
        "n_min",
        "n_max",
        "suites",
        "per_n",
        "mismatches",
        "inconclusive",
        "recognized",
        "unreduced_failures",
        "lemma_summaries",
    ],
    "additionalProperties": False,
}
