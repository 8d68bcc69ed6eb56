"""Lee weight distributions of Z2[u]-linear codes built from simplicial complexes."""

import json

from ._leecode import (
    brute_force_distribution,
    code_length,
    distribution_formula,
    enumerator,
    gray_parameters,
    lee_weight_brute,
    lee_weight_formula,
    minimality_predicate,
)

__all__ = [
    "analyze",
    "brute_force_distribution",
    "code_length",
    "distribution_formula",
    "enumerator",
    "gray_parameters",
    "lee_weight_brute",
    "lee_weight_formula",
    "minimality_predicate",
]


def analyze(m, D, E, F, engine="analyze", budget_bytes=64 << 20, workers=0):
    """Full report for one instance, as the dict the CLI prints with --format json."""
    from ._leecode import analyze_json

    return json.loads(analyze_json(m, list(D), list(E), list(F), engine, budget_bytes, workers))
