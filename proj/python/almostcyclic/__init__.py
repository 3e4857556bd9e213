"""Python bindings for the almostcyclic library and the acyc command line."""

import json

from ._core import (
    AcycError,
    e60_quadruples,
    run_cli,
    weight_multiplicities,
    weyl_dimension,
    zsigmondy,
)

__all__ = [
    "AcycError",
    "cli",
    "e60_quadruples",
    "run_cli",
    "weight_multiplicities",
    "weyl_dimension",
    "zsigmondy",
]


def cli(*args):
    """Run an acyc command with JSON output; returns (status, parsed report)."""
    status, out, _ = run_cli([str(a) for a in args])
    return status, json.loads(out)
