"""Quantum CSS codes from combinatorial hypermaps."""

from ._hypercode import (
    CellComplex,
    ClassDistance,
    CssCode,
    CycleParseError,
    DistanceResult,
    Hypermap,
    InvariantError,
    ParseError,
    Permutation,
    check_nabla_identity,
    code,
    parse_hypermap,
    random_hypermap,
    reduce,
    verify,
)

__all__ = [
    "CellComplex",
    "ClassDistance",
    "CssCode",
    "CycleParseError",
    "DistanceResult",
    "Hypermap",
    "InvariantError",
    "ParseError",
    "Permutation",
    "check_nabla_identity",
    "code",
    "parse_hypermap",
    "random_hypermap",
    "reduce",
    "verify",
]
