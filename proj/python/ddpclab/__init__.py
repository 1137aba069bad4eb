"""Disjoint directed path cover laboratory.

Thin wrapper over the compiled core. Campaign reports come back as JSON
strings; ``theorem_report`` and ``sharpness_report`` parse them.
"""

import json

from ._core import (
    Digraph,
    PreconditionError,
    complete_bipartite_digraph,
    complete_digraph,
    degree_summary,
    find_cover_exact,
    find_hamiltonian_path,
    generate_extremal,
    glued_cliques,
    one_to_many_cover,
    one_to_one_cover,
    paired_two_cover,
    run_sharpness_check,
    run_theorem_check,
    unpaired_mtm_cover,
    verify_cover,
)

__all__ = [
    "Digraph",
    "PreconditionError",
    "complete_bipartite_digraph",
    "complete_digraph",
    "degree_summary",
    "find_cover_exact",
    "find_hamiltonian_path",
    "generate_extremal",
    "glued_cliques",
    "one_to_many_cover",
    "one_to_one_cover",
    "paired_two_cover",
    "sharpness_report",
    "theorem_report",
    "unpaired_mtm_cover",
    "verify_cover",
]


def theorem_report(theorem, **kwargs):
    """Run a theorem-checking campaign and return the parsed report."""
    return json.loads(run_theorem_check(theorem, **kwargs))


def sharpness_report(family, a, b):
    """Validate one extremal family and return the parsed report."""
    return json.loads(run_sharpness_check(family, a, b))
