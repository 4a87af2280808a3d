"""Character groups of graded Hopf algebras at finite truncation.

Thin dict-based wrappers around the C++ extension. Exact rational values
travel as "p/q" strings; character dumps are plain dicts in the same schema
the CLI reads and writes.
"""

import json
from typing import Any, Dict, List, Optional, Union

from . import _hopfchar

__all__ = [
    "trees",
    "check",
    "order_of",
    "char_op",
    "exp",
    "log",
    "inv",
    "conv",
    "bch",
    "compose",
    "exact_flow",
    "rk_character",
    "evolve",
    "is_character",
    "is_infinitesimal",
]

Dump = Dict[str, Any]
Cutoff = Union[int, str]


def trees(max_order: int) -> List[Dict[str, Any]]:
    """Rooted trees up to ``max_order`` with tree factorial and symmetry."""
    return json.loads(_hopfchar.trees_json(max_order))


def check(instance: str = "ck", cutoff: Cutoff = 4, seed: int = 0) -> Dict[str, Any]:
    """Axiom and estimate report for ``ck | findim:<file> | tensor:<sel>``."""
    return json.loads(_hopfchar.check_json(instance, str(cutoff), seed))


def order_of(tableau: Dict[str, Any], max_order: int = 5) -> Dict[str, Any]:
    """Order audit of a Butcher tableau given as ``{"A": .., "b": .., "c": ..}``."""
    return json.loads(_hopfchar.order_json(json.dumps(tableau), max_order))


def char_op(op: str, a: Dump, b: Optional[Dump] = None) -> Dump:
    return json.loads(
        _hopfchar.char_op_json(op, json.dumps(a), "" if b is None else json.dumps(b))
    )


def exp(a: Dump) -> Dump:
    return char_op("exp", a)


def log(a: Dump) -> Dump:
    return char_op("log", a)


def inv(a: Dump) -> Dump:
    return char_op("inv", a)


def conv(a: Dump, b: Dump) -> Dump:
    return char_op("conv", a, b)


def bch(a: Dump, b: Dump) -> Dump:
    return char_op("bch", a, b)


def compose(a: Dump, b: Dump) -> Dump:
    """Composition of integrators: step with ``a``, then with ``b``."""
    return char_op("compose", a, b)


def exact_flow(cutoff: Cutoff) -> Dump:
    return json.loads(_hopfchar.exact_flow_json(str(cutoff)))


def rk_character(tableau: Dict[str, Any], cutoff: Cutoff) -> Dump:
    return json.loads(_hopfchar.rk_character_json(json.dumps(tableau), str(cutoff)))


def evolve(curve: Dict[str, Any]) -> Dump:
    """Solve the left-logarithmic IVP from a curve description dict."""
    return json.loads(_hopfchar.evolve_json(json.dumps(curve)))


def is_character(dump: Dump, tol: float = 1e-9) -> bool:
    return json.loads(_hopfchar.is_character_json(json.dumps(dump), tol))


def is_infinitesimal(dump: Dump, tol: float = 1e-9) -> bool:
    return json.loads(_hopfchar.is_infinitesimal_json(json.dumps(dump), tol))
