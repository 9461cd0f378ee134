"""Exact invariants, equivalence searches and certificate checks for shifts of finite type.

Matrices are passed as lists of integer rows or as catalog ids such as ``"E1_8"``.
"""

from ._core import (
    catalog_ids,
    char_poly,
    cone_contains,
    delta_claim_verify,
    graph,
    is_primitive,
    is_small,
    k0,
    kgr,
    matrix,
    minimal_polynomial,
    period,
    pf_eigenvalue,
    run_cli,
    search_esse,
    search_intertwiner,
    search_sse,
    small_ids,
    verify,
)

__all__ = [
    "catalog_ids",
    "char_poly",
    "cone_contains",
    "delta_claim_verify",
    "graph",
    "is_primitive",
    "is_small",
    "k0",
    "kgr",
    "matrix",
    "minimal_polynomial",
    "period",
    "pf_eigenvalue",
    "run_cli",
    "search_esse",
    "search_intertwiner",
    "search_sse",
    "small_ids",
    "verify",
]
