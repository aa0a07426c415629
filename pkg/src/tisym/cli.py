"""Command-line surface.

Exit codes: 0 on success, 1 when a requested check ran and failed, 2 when the
input could not be parsed or the check could not run at all.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .antisym import to_antisymmetric
from .basis import dimension, graded_basis, echelonize
from .core import SymmetricPolynomial
from .fixtures import minimal_counterexample
from .invariance import is_translation_invariant, translate_expand
from .squeeze import (
    EmptySupport,
    NotHomogeneous,
    conjecture_status,
    construct_counterexample,
    hasse_dot,
    is_haldane,
    lex_maxima_set,
    maximal_elements,
    support_poset,
)
from .serialize import (
    MalformedInput,
    dumps,
    dumps_line,
    loads_polynomial,
    raw_to_obj,
    symmetric_to_obj,
)


def _read_polynomial(path: str) -> SymmetricPolynomial:
    if path == "-":
        return loads_polynomial(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return loads_polynomial(fh.read())


def _cmd_dim(args) -> int:
    print(dimension(args.n, args.d))
    return 0


def _cmd_basis(args) -> int:
    gb = graded_basis(args.n, args.d)
    for label, elt in zip(gb.labels, gb.elements):
        meta = {"partition": list(label), "degree": args.d}
        print(dumps_line(symmetric_to_obj(elt, meta)))
    return 0


def _cmd_special_basis(args) -> int:
    if args.d == 0:
        return 0
    ech = echelonize(graded_basis(args.n, args.d))
    for pivot, row in zip(ech.leading, ech.rows):
        meta = {"leading": list(pivot), "degree": args.d, "haldane": is_haldane(row)}
        print(dumps_line(symmetric_to_obj(row, meta)))
    return 0


def _cmd_lexmax(args) -> int:
    lm = lex_maxima_set(args.n, args.d)
    print(
        dumps_line(
            {
                "n": args.n,
                "d": args.d,
                "count": len(lm.maxima),
                "maxima": [list(m) for m in lm.maxima],
            }
        )
    )
    return 0


def _cmd_haldane_check(args) -> int:
    p = _read_polynomial(args.file)
    try:
        poset = support_poset(p)
    except (EmptySupport, NotHomogeneous) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    maxima = sorted(maximal_elements(poset), reverse=True)
    haldane = len(maxima) == 1
    print(dumps_line({"haldane": haldane, "maximal": [list(m) for m in maxima]}))
    return 0 if haldane else 1


def _cmd_invariance_check(args) -> int:
    p = _read_polynomial(args.file)
    expansion = translate_expand(p)
    first_bad = next(
        (i for i, piece in enumerate(expansion.pieces) if i > 0 and not piece.is_zero),
        None,
    )
    print(
        dumps_line(
            {
                "translation_invariant": first_bad is None,
                "first_nonzero_piece": first_bad,
            }
        )
    )
    return 0 if first_bad is None else 1


def _cmd_counterexample(args) -> int:
    q = construct_counterexample(args.n, args.d)
    if q is None:
        print(dumps_line({"n": args.n, "d": args.d, "found": False}))
        return 0
    maxima = sorted(maximal_elements(support_poset(q)), reverse=True)
    meta = {
        "found": True,
        "degree": args.d,
        "maximal": [list(m) for m in maxima],
    }
    sys.stdout.write(dumps(symmetric_to_obj(q, meta)))
    return 0


def _cmd_hasse(args) -> int:
    p = _read_polynomial(args.file)
    try:
        poset = support_poset(p)
    except (EmptySupport, NotHomogeneous) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.dot:
        sys.stdout.write(hasse_dot(poset))
        return 0
    maxima = sorted(maximal_elements(poset), reverse=True)
    print(f"nodes: {len(poset.nodes)}")
    print(f"covers: {len(poset.covers)}")
    print("maximal: " + " ".join("[" + ",".join(map(str, m)) + "]" for m in maxima))
    return 0


def _cmd_antisymmetrize(args) -> int:
    p = _read_polynomial(args.file)
    r = to_antisymmetric(p)
    homogeneous, degree = r.degree_info()
    meta = {"antisymmetric": True}
    if homogeneous and degree is not None:
        meta["degree"] = degree
    sys.stdout.write(dumps(raw_to_obj(r, meta)))
    return 0


def _cmd_scan(args) -> int:
    if args.n_max < 2 or args.d_max < 0:
        print("error: need --n-max >= 2 and --d-max >= 0", file=sys.stderr)
        return 2
    for n in range(2, args.n_max + 1):
        for d in range(0, args.d_max + 1):
            dim = dimension(n, d)
            status = conjecture_status(n, d)
            count = len(lex_maxima_set(n, d).maxima)
            pair = status.incomparable_pair
            print(
                dumps_line(
                    {
                        "n": n,
                        "d": d,
                        "dim": dim,
                        "lex_count": count,
                        "status": status.status,
                        "pair": None if pair is None else [list(pair[0]), list(pair[1])],
                    }
                )
            )
            if d > 0 and count != dim:
                print(
                    f"counterobservation: |L_{n}^{d}| = {count} != dim = {dim}",
                    file=sys.stderr,
                )
    return 0


def verify_report(p: Optional[SymmetricPolynomial] = None) -> tuple[bool, list[str]]:
    """Re-derive every property of the bundled counterexample from scratch.

    Returns (all_passed, report_lines).  A different polynomial may be passed
    in to diff a perturbed candidate against the expected properties.
    """
    if p is None:
        p = minimal_counterexample()
    lines: list[str] = []
    ok = True

    def check(name: str, passed: bool, detail: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        tag = "PASS" if passed else "FAIL"
        lines.append(f"{tag}  {name}" + (f": {detail}" if detail else ""))

    homogeneous, degree = p.degree_info()
    check("homogeneous of degree 14", homogeneous and degree == 14, f"degree={degree}")
    check("translation invariant", is_translation_invariant(p))
    expected_maxima = {(8, 4, 2, 0), (7, 7, 0, 0)}
    try:
        maxima = maximal_elements(support_poset(p))
        check(
            "support poset lacks a maximum (not Haldane)",
            len(maxima) > 1,
            f"{len(maxima)} maximal elements",
        )
        check(
            "maximal elements are [8,4,2,0] and [7,7,0,0]",
            maxima == expected_maxima,
            f"got {sorted(maxima, reverse=True)}",
        )
    except (EmptySupport, NotHomogeneous) as exc:
        check("support poset analysis", False, str(exc))
    failing = [d for d in range(0, 14) if not conjecture_status(4, d).holds_by_lemma]
    check(
        "quadrivariate degrees 0..13 all hold by lemma",
        not failing,
        f"failing degrees: {failing}" if failing else "",
    )
    for n in (2, 3):
        pairs = [
            (d, conjecture_status(n, d).incomparable_pair) for d in range(0, 21)
        ]
        bad = [(d, pr) for d, pr in pairs if pr is not None]
        check(
            f"arity {n} degrees 0..20 show no incomparable pair",
            not bad,
            f"pairs: {bad}" if bad else "",
        )
    return ok, lines


def _cmd_verify_counterexample(args) -> int:
    ok, lines = verify_report()
    for line in lines:
        print(line)
    print("OK" if ok else "FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tisym",
        description=(
            "Exact tools for translation-invariant symmetric polynomials: "
            "graded bases, lexicographic maxima of squeezing posets, Haldane "
            "checks, and counterexample construction."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("dim", _cmd_dim, "dimension of the graded piece (arity N, degree D)")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)

    sp = add("basis", _cmd_basis, "graded basis, one JSON polynomial per line")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)

    sp = add(
        "special-basis",
        _cmd_special_basis,
        "fully reduced basis, one row per lexicographic maximum",
    )
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)

    sp = add("lexmax", _cmd_lexmax, "lexicographic maxima of the graded piece")
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)

    sp = add("haldane-check", _cmd_haldane_check, "exit 0 iff the polynomial is Haldane")
    sp.add_argument("file", help="polynomial JSON file, or - for stdin")

    sp = add(
        "invariance-check",
        _cmd_invariance_check,
        "exit 0 iff the polynomial is translation invariant",
    )
    sp.add_argument("file", help="polynomial JSON file, or - for stdin")

    sp = add(
        "counterexample",
        _cmd_counterexample,
        "construct a non-Haldane translation-invariant polynomial if one exists",
    )
    sp.add_argument("n", type=int)
    sp.add_argument("d", type=int)

    sp = add("hasse", _cmd_hasse, "Hasse diagram of the support poset")
    sp.add_argument("file", help="polynomial JSON file, or - for stdin")
    sp.add_argument("--dot", action="store_true", help="emit a DOT digraph")

    sp = add("antisymmetrize", _cmd_antisymmetrize, "multiply by the Vandermonde determinant")
    sp.add_argument("file", help="polynomial JSON file, or - for stdin")

    sp = add("scan", _cmd_scan, "conjecture status per (arity, degree) cell, JSON lines")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--d-max", type=int, required=True)

    add(
        "verify-counterexample",
        _cmd_verify_counterexample,
        "re-derive every property of the bundled degree-14 counterexample",
    )

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
