"""Integral G-lattices, Tate cohomology and isomorphism certificates."""

import json

from ._glattice import (
    ContainmentError,
    ExpressionError,
    Group,
    Lattice,
    PreconditionError,
    SizeLimitError,
    bar_oracle,
    character,
    ext1,
    group,
    is_faithful,
    iso_certificate,
    lattice,
    tate,
)
from . import _glattice

__all__ = [
    "ContainmentError",
    "ExpressionError",
    "Group",
    "Lattice",
    "PreconditionError",
    "SizeLimitError",
    "bar_oracle",
    "bounds",
    "character",
    "crossed_bound",
    "ext1",
    "group",
    "is_faithful",
    "iso_certificate",
    "lattice",
    "run",
    "tate",
]

_COMMANDS = {
    "fp": _glattice.run_fp,
    "prop-ll": _glattice.run_prop_ll,
    "ext": _glattice.run_ext,
    "prop31": _glattice.run_prop31,
}


def run(command, n=None, seed=0, iso_search_bound=2):
    """Runs a report command and returns the decoded JSON report."""
    if command == "section6":
        return json.loads(_glattice.run_section6(seed, iso_search_bound))
    if command not in _COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    if n is None:
        raise ValueError(f"{command} needs n")
    return json.loads(_COMMANDS[command](n, seed, iso_search_bound))


def crossed_bound(group_spec, degree, gens):
    """Returns (report, bound) for Z[G]^r -> A_{n-1}."""
    report, bound = _glattice.run_crossed_bound(group_spec, degree, gens)
    return json.loads(report), json.loads(bound)


def bounds(n_max):
    return json.loads(_glattice.bounds_table(n_max))
