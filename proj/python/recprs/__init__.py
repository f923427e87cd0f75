"""Exact recursive PRS, recursive subresultants and real-root counting.

Polynomials are accepted as expression strings ("(x+2)^2*(x-3)") or as
low-degree-first coefficient sequences of ints, Fractions or "num/den"
strings. Results use lists of Fraction in the same order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence, Union

from . import _core
from ._core import ParseError, RecprsError

PolyLike = Union[str, Sequence[Union[int, Fraction, str]]]

__all__ = [
    "ParseError",
    "RecprsError",
    "parse",
    "to_string",
    "derivative",
    "prs",
    "rprs",
    "recursive_sturm",
    "count_real_roots",
    "subresultant",
    "subres_matrix",
    "rec_subresultant",
    "rec_subres_matrix",
    "similarity_factors",
    "verify_fundamental",
    "verify_similarity",
    "verify_recursive_fundamental",
    "determinant",
]


def _coeffs(p: PolyLike) -> list[str]:
    if isinstance(p, str):
        return _core.parse_polynomial(p)
    return [str(Fraction(c)) for c in p]


def _fractions(cs: Sequence[str]) -> list[Fraction]:
    return [Fraction(c) for c in cs]


def _decode(value):
    # Report JSON keeps every rational as a "num/den" string.
    if isinstance(value, str) and "/" in value:
        try:
            return Fraction(value)
        except ValueError:
            return value
    if isinstance(value, list):
        return [_decode(v) for v in value]
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    return value


def _report(text: str) -> dict:
    return _decode(json.loads(text))


def parse(text: str) -> list[Fraction]:
    return _fractions(_core.parse_polynomial(text))


def to_string(p: PolyLike) -> str:
    return _core.to_string(_coeffs(p))


def derivative(p: PolyLike) -> list[Fraction]:
    return _fractions(_core.derivative(_coeffs(p)))


def prs(F: PolyLike, G: PolyLike, rule: str = "sturm") -> dict:
    return _report(_core.prs(_coeffs(F), _coeffs(G), rule))


def rprs(F: PolyLike, G: PolyLike, rule: str = "sturm") -> dict:
    return _report(_core.rprs(_coeffs(F), _coeffs(G), rule))


def recursive_sturm(P: PolyLike) -> dict:
    c = _coeffs(P)
    return _report(_core.rprs(c, _core.derivative(c), "sturm"))


def count_real_roots(P: PolyLike) -> tuple[int, list[int]]:
    """Real roots counted with multiplicity: (total, per-level counts)."""
    total, per_level = _core.count_real_roots(_coeffs(P))
    return total, list(per_level)


def subresultant(F: PolyLike, G: PolyLike, j: int) -> list[Fraction]:
    return _fractions(_core.subresultant(_coeffs(F), _coeffs(G), j))


def subres_matrix(F: PolyLike, G: PolyLike, j: int) -> list[list[Fraction]]:
    return [_fractions(r) for r in _core.subres_matrix(_coeffs(F), _coeffs(G), j)]


def _pair(F: PolyLike, G: PolyLike | None) -> tuple[list[str], list[str]]:
    f = _coeffs(F)
    return f, (_core.derivative(f) if G is None else _coeffs(G))


def rec_subresultant(F: PolyLike, k: int, j: int, G: PolyLike | None = None, rule: str = "sturm") -> list[Fraction]:
    """With G omitted the recursion runs on (F, F')."""
    return _fractions(_core.rec_subresultant(*_pair(F, G), k, j, rule))


def rec_subres_matrix(F: PolyLike, k: int, j: int, G: PolyLike | None = None, rule: str = "sturm") -> list[list[Fraction]]:
    return [_fractions(r) for r in _core.rec_subres_matrix(*_pair(F, G), k, j, rule)]


def similarity_factors(F: PolyLike, k: int, j: int, G: PolyLike | None = None, rule: str = "sturm") -> dict:
    return _report(_core.similarity_factors(*_pair(F, G), k, j, rule))


def verify_fundamental(F: PolyLike, G: PolyLike, rule: str = "sturm") -> dict:
    return _report(_core.verify_fundamental(_coeffs(F), _coeffs(G), rule))


def verify_similarity(F: PolyLike, G: PolyLike | None = None, rule: str = "sturm") -> dict:
    return _report(_core.verify_similarity_all(*_pair(F, G), rule))


def verify_recursive_fundamental(F: PolyLike, k: int, G: PolyLike | None = None, rule: str = "sturm") -> dict:
    return _report(_core.verify_recursive_fundamental(*_pair(F, G), k, rule))


def determinant(rows: Sequence[Sequence[Union[int, Fraction, str]]]) -> Fraction:
    return Fraction(_core.determinant([[str(Fraction(v)) for v in r] for r in rows]))
