"""The JSON wire form shared by every command.

A polynomial file is a single JSON object

    {"n": 4, "terms": [{"m": [8,4,2,0], "c": ["3", "1"]}, ...], "meta": {...}}

where "m" is the exponent multiset (weakly decreasing; rejected otherwise)
and "c" is the coefficient as a [numerator, denominator] pair of decimal
strings, so arbitrarily large echelon intermediates survive the round trip.
"meta" is optional and passed through untouched.  Raw polynomials use the
same shape with "m" an ordered exponent vector (any order allowed).

Writers emit terms in descending lexicographic order with sorted keys, so
identical inputs always serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .core import RawPolynomial, SymmetricPolynomial


class MalformedInput(ValueError):
    """Input that does not parse to a valid polynomial file."""


def _coeff_to_json(c: Fraction) -> list[str]:
    return [str(c.numerator), str(c.denominator)]


def _coeff_from_json(obj: Any) -> Fraction:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise MalformedInput(f"coefficient must be a [num, den] pair, got {obj!r}")
    try:
        num, den = int(str(obj[0])), int(str(obj[1]))
    except ValueError as exc:
        raise MalformedInput(f"non-integer coefficient part in {obj!r}") from exc
    if den == 0:
        raise MalformedInput("zero denominator")
    return Fraction(num, den)


def _terms_from_json(obj: Any, n: int) -> list[tuple[tuple[int, ...], Fraction]]:
    if not isinstance(obj, list):
        raise MalformedInput('"terms" must be a list')
    out = []
    for item in obj:
        if not isinstance(item, dict) or "m" not in item or "c" not in item:
            raise MalformedInput(f'term must have "m" and "c", got {item!r}')
        m = item["m"]
        if (
            not isinstance(m, list)
            or len(m) != n
            or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in m)
        ):
            raise MalformedInput(f"bad exponent vector {m!r} for n={n}")
        out.append((tuple(m), _coeff_from_json(item["c"])))
    return out


def _arity_from_json(obj: Any) -> int:
    if not isinstance(obj, dict):
        raise MalformedInput("polynomial file must be a JSON object")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedInput(f'"n" must be a positive integer, got {n!r}')
    return n


def symmetric_to_obj(p: SymmetricPolynomial, meta: Optional[dict] = None) -> dict:
    obj: dict[str, Any] = {
        "n": p.n,
        "terms": [
            {"m": list(m), "c": _coeff_to_json(p.terms[m])} for m in p.support
        ],
    }
    if meta is not None:
        obj["meta"] = meta
    return obj


def symmetric_from_obj(obj: Any) -> SymmetricPolynomial:
    n = _arity_from_json(obj)
    terms: dict[tuple[int, ...], Fraction] = {}
    for m, c in _terms_from_json(obj.get("terms", []), n):
        if list(m) != sorted(m, reverse=True):
            raise MalformedInput(f"exponent multiset {list(m)} is not weakly decreasing")
        if m in terms:
            raise MalformedInput(f"duplicate multiset {list(m)}")
        terms[m] = c
    return SymmetricPolynomial(n, terms)


def raw_to_obj(r: RawPolynomial, meta: Optional[dict] = None) -> dict:
    obj: dict[str, Any] = {
        "n": r.nvars,
        "terms": [
            {"m": list(v), "c": _coeff_to_json(c)}
            for v, c in sorted(r.terms.items(), reverse=True)
        ],
    }
    if meta is not None:
        obj["meta"] = meta
    return obj


def raw_from_obj(obj: Any) -> RawPolynomial:
    n = _arity_from_json(obj)
    terms: dict[tuple[int, ...], Fraction] = {}
    for v, c in _terms_from_json(obj.get("terms", []), n):
        if v in terms:
            raise MalformedInput(f"duplicate exponent vector {list(v)}")
        terms[v] = c
    return RawPolynomial(n, terms)


def dumps(obj: dict) -> str:
    """Pretty deterministic JSON for files."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dumps_line(obj: dict) -> str:
    """Compact deterministic JSON for line-oriented output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads_polynomial(text: str) -> SymmetricPolynomial:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc
    return symmetric_from_obj(obj)
