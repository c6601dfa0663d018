"""Command-line interface: enumerators, symmetry groups, tables, transforms.

Exit codes: 0 success, 2 table diff mismatch, 3 enumeration budget
exceeded, 4 precision exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classify import analyze_infinite
from .codes import (DEFAULT_BUDGET, EnumeratorCache, LinearCode, TooLargeError,
                    WeightEnumerator, divisibility, dual, macwilliams,
                    named_code, read_code_file, reed_muller,
                    projective_reed_muller, weight_enumerator_smart)
from .fields import field_from_order
from .homopoly import HomPoly
from .invariants import (DegreeMismatchError, NotMemberError,
                         dihedral_generators, decompose, gleason_generators)
from .roots import PrecisionExhaustedError
from .symmetry import classify_finiteness, group_to_json, symmetry_group
from .tables import render_table, reproduce_table

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_BUDGET = 3
EXIT_PRECISION = 4

MAX_BUDGET = 1 << 40


@dataclass
class RunConfig:
    precision: int = 256
    budget: int = DEFAULT_BUDGET
    threads: int = os.cpu_count() or 1
    format: str = "text"
    cache_dir: Optional[str] = None
    seed: int = 0

    def __post_init__(self):
        if not 64 <= self.precision <= 4096:
            raise ValueError("precision must be in [64, 4096]")
        if self.budget > MAX_BUDGET:
            raise ValueError(f"budget cap is {MAX_BUDGET}")
        if self.format not in ("text", "json"):
            raise ValueError("format must be text or json")


def _env_default(name: str, cast, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    return cast(raw)


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--precision", type=int,
                   default=_env_default("PRECISION", int, 256))
    p.add_argument("--budget", type=int,
                   default=_env_default("BUDGET", int, DEFAULT_BUDGET))
    p.add_argument("--threads", type=int,
                   default=_env_default("THREADS", int, os.cpu_count() or 1))
    p.add_argument("--format", choices=("text", "json"),
                   default=_env_default("FORMAT", str, "text"))
    p.add_argument("--cache-dir",
                   default=_env_default("CACHE_DIR", str, None))
    p.add_argument("--seed", type=int, default=_env_default("SEED", int, 0))


def _config(args) -> RunConfig:
    return RunConfig(precision=args.precision, budget=args.budget,
                     threads=args.threads, format=args.format,
                     cache_dir=args.cache_dir, seed=args.seed)


# -- code-spec and polynomial parsing -------------------------------------------


def parse_code_spec(tokens: list[str]) -> LinearCode:
    """Grammar: 'rm q= r= m=', 'prm q= r= m=', 'repetition q= n=',
    a catalog name, or 'file=PATH'."""
    if not tokens:
        raise ValueError("empty code spec")
    head, params = tokens[0].lower(), {}
    for tok in tokens[1:]:
        if "=" not in tok:
            raise ValueError(f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        params[key] = val
    if head.startswith("file="):
        return read_code_file(head.split("=", 1)[1])
    if head == "file":
        raise ValueError("use file=PATH")
    if head in ("rm", "prm"):
        q, r, m = int(params["q"]), int(params["r"]), int(params["m"])
        fld = field_from_order(q)
        builder = reed_muller if head == "rm" else projective_reed_muller
        return builder(fld, r, m)
    if head == "repetition":
        return named_code("repetition", q=int(params["q"]), n=int(params["n"]))
    return named_code(head)


def write_poly_file(hp: HomPoly, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"{hp.n}\n")
        for c in hp.coeffs:
            fh.write(f"{c}\n")


def read_poly_file(path: str) -> HomPoly:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh.read().splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}:1: empty polynomial file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"{path}:1: expected the degree") from None
    if len(lines) != n + 2:
        raise ValueError(f"{path}: expected {n + 1} coefficients, "
                         f"found {len(lines) - 1}")
    coeffs = []
    for lineno, raw in enumerate(lines[1:], start=2):
        try:
            coeffs.append(Fraction(raw))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: bad rational {raw!r}") from None
    return HomPoly(coeffs)


def parse_poly_spec(tokens: list[str]) -> tuple[HomPoly, Optional[int]]:
    """A polynomial file path, or one of the shorthands
    'zero-code n=', 'full-space q= n=', 'pairs q= n='."""
    head = tokens[0]
    params = {}
    for tok in tokens[1:]:
        key, val = tok.split("=", 1)
        params[key] = int(val)
    if head == "zero-code":
        n = params["n"]
        return HomPoly([1] + [0] * n), params.get("q")
    if head == "full-space":
        q, n = params["q"], params["n"]
        return HomPoly([1, q - 1]) ** n, q
    if head == "pairs":
        q, n = params["q"], params["n"]
        if n % 2:
            raise ValueError("pairs needs even n")
        return HomPoly([1, 0, q - 1]) ** (n // 2), q
    if os.path.exists(head):
        return read_poly_file(head), params.get("q")
    raise ValueError(f"no such polynomial file or shorthand: {head!r}")


# -- serialization helpers -------------------------------------------------------


def enumerator_to_json(w: WeightEnumerator) -> dict:
    return {"n": w.n, "coeffs": [str(c) for c in w.coeffs],
            "q": w.q, "k": w.k}


def enumerator_from_json(obj: dict) -> WeightEnumerator:
    return WeightEnumerator(obj["n"], tuple(int(c) for c in obj["coeffs"]),
                            q=obj.get("q"), k=obj.get("k"))


def _emit(args, payload_text: str, payload_json: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload_json, indent=2))
    else:
        print(payload_text)


# -- subcommands -------------------------------------------------------------------


def cmd_enum(args) -> int:
    cfg = _config(args)
    code = parse_code_spec(args.code_spec)
    cache = EnumeratorCache(cfg.cache_dir)
    try:
        w = weight_enumerator_smart(code, cfg.budget, cache=cache,
                                    workers=cfg.threads)
    except TooLargeError as exc:
        print(f"error: {exc}; try a larger --budget or the dual code",
              file=sys.stderr)
        return EXIT_BUDGET
    _emit(args, " ".join(str(c) for c in w.coeffs), enumerator_to_json(w))
    return EXIT_OK


def _group_for(args, cfg: RunConfig):
    if args.poly:
        hp, q = parse_poly_spec(args.poly)
        w = hp
    else:
        code = parse_code_spec(args.code_spec)
        cache = EnumeratorCache(cfg.cache_dir)
        w = weight_enumerator_smart(code, cfg.budget, cache=cache,
                                    workers=cfg.threads)
        q = w.q
    return symmetry_group(w, q=q, prec=cfg.precision, seed=cfg.seed), w, q


def cmd_sym(args) -> int:
    cfg = _config(args)
    try:
        group, _, _ = _group_for(args, cfg)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PrecisionExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    payload = group_to_json(group)
    if group.kind == "infinite":
        text = f"infinite symmetry group (case: {group.case})"
    else:
        text = (f"{group.iso.label}: projective order {group.proj_order}, "
                f"full order {group.full_order} at degree {group.degree}")
    _emit(args, text, payload)
    return EXIT_OK


def cmd_tables(args) -> int:
    cfg = _config(args)
    cache = EnumeratorCache(cfg.cache_dir)
    try:
        results = reproduce_table(args.field, args.max_m, cfg.budget,
                                  cfg.precision, cfg.seed, cache=cache,
                                  workers=cfg.threads)
    except PrecisionExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    text = render_table(args.field, results)
    payload = {
        "field": args.field,
        "cells": [{"r": c.r, "m": c.m,
                   "expected": str(c.expected) if c.expected != "empty" else None,
                   "computed": None if c.computed is None else str(c.computed),
                   "status": c.status} for c in results],
    }
    _emit(args, text, payload)
    if any(c.status == "mismatch" for c in results):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_macwilliams(args) -> int:
    hp, q = parse_poly_spec(args.poly)
    q = args.q if args.q is not None else q
    coeffs = []
    for c in hp.coeffs:
        if c.denominator != 1 or c < 0:
            print("error: MacWilliams input must have nonnegative integer "
                  "coefficients", file=sys.stderr)
            return 1
        coeffs.append(int(c))
    w = WeightEnumerator(hp.n, tuple(coeffs))
    out = macwilliams(w, q, args.k)
    _emit(args, " ".join(str(c) for c in out.coeffs), enumerator_to_json(out))
    return EXIT_OK


def cmd_dual(args) -> int:
    code = parse_code_spec(args.code_spec)
    d = dual(code)
    lines = [f"{d.field.q} {d.k} {d.n}"]
    lines += [" ".join(str(int(x)) for x in row) for row in d.gen]
    _emit(args, "\n".join(lines),
          {"q": d.field.q, "k": d.k, "n": d.n,
           "rows": [[int(x) for x in row] for row in d.gen]})
    return EXIT_OK


def cmd_decompose(args) -> int:
    hp, _ = parse_poly_spec(args.poly)
    if args.gleason:
        f1, f2 = gleason_generators()
    elif args.dihedral is not None:
        f1, f2 = dihedral_generators(args.dihedral)
    else:
        f1 = read_poly_file(args.gen1)
        f2 = read_poly_file(args.gen2)
    try:
        dec = decompose(hp, f1, f2)
    except NotMemberError:
        _emit(args, "not a member", {"member": False})
        return EXIT_OK
    except DegreeMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = {"member": True, "unique": dec.unique,
               "terms": [{"a": a, "b": b, "coeff": str(c)}
                         for a, b, c in dec.terms]}
    text = " + ".join(f"({c}) f1^{a} f2^{b}" for a, b, c in dec.terms) or "0"
    _emit(args, text, payload)
    return EXIT_OK


def cmd_classify(args) -> int:
    hp, q = parse_poly_spec(args.poly)
    q = args.q if args.q is not None else q
    kind, case = classify_finiteness(hp, q)
    if kind == "finite":
        payload = {"kind": "finite", "case": None, "structure": None,
                   "notes": "three or more distinct roots"}
        _emit(args, "finite symmetry group", payload)
        return EXIT_OK
    coeffs = [int(c) for c in hp.coeffs] if all(
        c.denominator == 1 for c in hp.coeffs) else None
    if coeffs is not None and q is not None and min(coeffs) >= 0:
        rep = analyze_infinite(WeightEnumerator(hp.n, tuple(coeffs)), q)
        payload = {"kind": "infinite", "case": rep.case,
                   "structure": rep.structure_claim,
                   "notes": rep.notes or
                   ("classification open" if rep.classification_open else "")}
    else:
        payload = {"kind": "infinite", "case": case, "structure": None,
                   "notes": ""}
    _emit(args, f"infinite symmetry group (case: {payload['case']}) "
          f"{payload['notes']}".strip(), payload)
    return EXIT_OK


def cmd_divisibility(args) -> int:
    hp, _ = parse_poly_spec(args.poly)
    coeffs = [int(c) for c in hp.coeffs]
    w = WeightEnumerator(hp.n, tuple(coeffs))
    _emit(args, str(divisibility(w)), {"divisibility": divisibility(w)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wesym",
        description="Weight enumerators of linear codes and their "
                    "symmetry groups in PGL2(C)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enum", help="compute a weight enumerator")
    sp.add_argument("code_spec", nargs="+")
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_enum)

    sp = sub.add_parser("sym", help="compute the symmetry group")
    sp.add_argument("code_spec", nargs="*")
    sp.add_argument("--poly", nargs="+",
                    help="polynomial file or shorthand instead of a code")
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_sym)

    sp = sub.add_parser("tables", help="reproduce a Reed-Muller group table")
    sp.add_argument("--field", type=int, choices=(2, 3, 4), required=True)
    sp.add_argument("--max-m", type=int, default=None)
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("macwilliams", help="dual enumerator via MacWilliams")
    sp.add_argument("--poly", nargs="+", required=True)
    sp.add_argument("--q", type=int)
    sp.add_argument("--k", type=int, required=True)
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_macwilliams)

    sp = sub.add_parser("dual", help="dual code generator matrix")
    sp.add_argument("code_spec", nargs="+")
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("decompose", help="invariant-ring decomposition")
    sp.add_argument("--poly", nargs="+", required=True)
    sp.add_argument("--gleason", action="store_true")
    sp.add_argument("--dihedral", type=int, default=None,
                    help="use the order-2^(i+1) dihedral generators")
    sp.add_argument("--gen1")
    sp.add_argument("--gen2")
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("classify", help="finite/infinite classification")
    sp.add_argument("--poly", nargs="+", required=True)
    sp.add_argument("--q", type=int)
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("divisibility", help="gcd of nonzero weights")
    sp.add_argument("--poly", nargs="+", required=True)
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_divisibility)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PrecisionExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
