"""Axiom checks, hypothesis verification and alternating fixed-point
iteration on quasi-partial b-metric spaces.

Thin wrapper over the compiled ``_qpb`` module: the JSON-returning entry
points are decoded into plain dicts/lists here.
"""

import json as _json

try:
    from ._qpb import (  # installed wheel: extension lives inside the package
        ConfigError,
        EvaluationError,
        ball,
        check_json,
        distance,
        guard,
        list_scenarios_json,
        majorant,
        psi_iterate,
        solve_json,
        verify_tables_json,
    )
except ImportError:  # development tree: extension sits on sys.path
    from _qpb import (
        ConfigError,
        EvaluationError,
        ball,
        check_json,
        distance,
        guard,
        list_scenarios_json,
        majorant,
        psi_iterate,
        solve_json,
        verify_tables_json,
    )

__all__ = [
    "ConfigError",
    "EvaluationError",
    "ball",
    "check",
    "distance",
    "guard",
    "list_scenarios",
    "majorant",
    "psi_iterate",
    "solve",
    "verify_tables",
]


def list_scenarios():
    """Catalog listing: one dict per scenario."""
    return _json.loads(list_scenarios_json())


def check(name, resolution=41, j_max=64):
    """Composite check report for a catalog scenario."""
    return _json.loads(check_json(name, resolution, j_max))


def solve(name, tol=1e-9, max_iter=10000):
    """Alternating-iteration result, including the full trace."""
    return _json.loads(solve_json(name, tol, max_iter))


def verify_tables(name):
    """Cell-by-cell re-derivation of the worked example's tables."""
    return _json.loads(verify_tables_json(name))
