"""State-sum invariants and discrete holonomy on triangulated spaces.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports its surface unchanged.
"""

from ._core import (
    Complex,
    DisconnectedError,
    MalformedInputError,
    NoSolutionError,
    PreconditionError,
    UnsupportedError,
    build_complex,
    characteristic_class,
    count_homs,
    dw_invariant,
    fixture,
    fixture_names,
    gerbe_roundtrip,
    holonomy_roundtrip,
    homology,
    pi1,
    two_cycle_holonomy,
    verify_labeled,
    yetter_invariant,
)

__all__ = [
    "Complex",
    "DisconnectedError",
    "MalformedInputError",
    "NoSolutionError",
    "PreconditionError",
    "UnsupportedError",
    "build_complex",
    "characteristic_class",
    "count_homs",
    "dw_invariant",
    "fixture",
    "fixture_names",
    "gerbe_roundtrip",
    "holonomy_roundtrip",
    "homology",
    "pi1",
    "two_cycle_holonomy",
    "verify_labeled",
    "yetter_invariant",
]

__version__ = "0.1.0"
