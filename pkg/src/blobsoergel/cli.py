"""Command-line front end. Every command prints JSON (CSV for matrices with --csv).

Exit codes: 0 success, 1 domain error (JSON ``{"error", "message"}``), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bridge, cellular, dotline, grid, lightleaves, symmetric, tableaux
from .dihedral import DihedralElement
from .errors import BlobSoergelError
from .params import Params, validate_params


def _bipartition(text: str) -> tableaux.OneLineBipartition:
    try:
        return tableaux.OneLineBipartition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a,b with non-negative integers: {exc}")


def _tableau(text: str) -> tableaux.StandardBitableau:
    try:
        return tableaux.StandardBitableau.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated sequence of 1s and 2s: {exc}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _range(text: str) -> list[int]:
    """``"7"``, ``"1-20"`` or ``"3,5,8"``."""
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-"))
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N, A-B or a comma list, got {text!r}")


def _element(text: str) -> DihedralElement:
    try:
        return DihedralElement.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _params(args) -> Params:
    return validate_params(args.l, args.m)


def _require(args, parser, *names):
    for name in names:
        if getattr(args, name, None) is None:
            parser.error(f"--{name.replace('_', '-')} is required for {args.command}")


def cmd_params_check(args, parser):
    return _params(args).to_json()


def cmd_residues(args, parser):
    p = _params(args)
    if args.tableau is not None:
        t = args.tableau
    else:
        _require(args, parser, "lam")
        t = tableaux.tmax(args.lam)
    return list(tableaux.residue_sequence(t, p))


def cmd_std_enum(args, parser):
    if args.lam is not None:
        ts = list(tableaux.enumerate_std(args.lam, args.bound))
    else:
        _require(args, parser, "n")
        ts = list(tableaux.enumerate_std_n(args.n, args.bound))
    return {"count": len(ts), "tableaux": [str(t) for t in ts]}


def cmd_isp(args, parser):
    _require(args, parser, "seq")
    witness = tableaux.is_residue_sequence(args.seq, _params(args))
    return {"residue_sequence": witness is not None, "witness": None if witness is None else str(witness)}


def cmd_class(args, parser):
    _require(args, parser, "lam")
    p = _params(args)
    data = tableaux.lambda_data(args.lam, p)
    walks = sorted(tableaux.equivalence_class(tableaux.walk_of(tableaux.tmax(args.lam)), p))
    return {
        "lambda_data": data.to_json(),
        "size": len(walks),
        "tableaux": sorted(str(tableaux.tableau_of(w)) for w in walks),
    }


def cmd_dtab(args, parser):
    _require(args, parser, "tableau")
    perm = symmetric.d_of(args.tableau)
    return {
        "tableau": str(args.tableau),
        "shape": args.tableau.shape.to_json(),
        "one_line": list(perm.one_line),
        "word": list(perm.word),
        "length": perm.length(),
        "reduced": perm.length() == len(perm.word),
        "avoids_321": symmetric.is_321_avoiding(perm),
    }


def cmd_blocks(args, parser):
    _require(args, parser, "lam")
    p = _params(args)
    data = tableaux.lambda_data(args.lam, p)
    blocks = symmetric.block_decomposition(args.lam, p)
    d = symmetric.d_of(data.t_lambda)
    return {
        "lambda_data": data.to_json(),
        "blocks": [b.to_json() for b in blocks],
        "d_t_lambda": list(d.word),
        "staircase_problems": grid.staircase_problems(blocks, data, p),
    }


def cmd_dotline(args, parser):
    _require(args, parser, "n")
    n = args.n
    if args.word is not None:
        x = dotline.normal_form(dotline.parse_monomial(args.word, n))
        return {"n": n, "input": args.word, "normal_form": x.to_json(), "text": str(x)}
    out: dict = {"n": n, "basis_size": 2 ** n}
    if n <= dotline.ORACLE_BOUND:
        out["oracle_dimension"] = dotline.dimension_oracle(n)
    if n <= dotline.ANNIHILATION_BOUND:
        out["annihilation_check"] = dotline.ordering_annihilation_check(n)
    return out


def _word(args, parser) -> DihedralElement:
    _require(args, parser, "word")
    return _element(args.word)


def cmd_leaves(args, parser):
    w = _word(args, parser)
    leaves = list(lightleaves.enumerate_leaves(w, args.bound or lightleaves.DEFAULT_BOUND))
    tops = lightleaves.top_multiset(w, args.bound or lightleaves.DEFAULT_BOUND)
    return {
        "w": str(w),
        "count": len(leaves),
        "tops": {str(x): c for x, c in sorted(tops.items())},
        "leaves": [leaf.to_json() for leaf in leaves],
    }


def cmd_gdim_soergel(args, parser):
    w = _word(args, parser)
    g = lightleaves.graded_dim_A(w, args.bound or lightleaves.DEFAULT_BOUND)
    return {"w": str(w), "dimension": g.eval_at_one(), "graded": g.to_json(), "text": str(g)}


def cmd_gdim_blob(args, parser):
    _require(args, parser, "lam")
    p = _params(args)
    g = cellular.graded_dim_b(args.lam, p)
    return {
        "lambda": args.lam.to_json(),
        "dimension": g.eval_at_one(),
        "graded": g.to_json(),
        "text": str(g),
        "central_element_degree": cellular.central_element_degree(args.lam, p),
        "y_model": cellular.y_model(args.lam, p).to_json(),
    }


def cmd_verify_bijection(args, parser):
    _require(args, parser, "lam")
    return bridge.verify_bijection(args.lam, _params(args), args.bound or lightleaves.DEFAULT_BOUND).to_json()


def cmd_decomp(args, parser):
    _require(args, parser, "n")
    matrix = bridge.decomposition_matrix(args.n, _params(args))
    return matrix.to_csv() if args.csv else matrix.to_json()


def cmd_grid(args, parser):
    ls = args.l or sorted({l for l, _ in grid.DEFAULT_GRID})
    ms = args.m
    if args.l is None and args.m is None:
        pairs = list(grid.DEFAULT_GRID)
    else:
        pairs = []
        for l in ls:
            for m in ms or range(2, l - 1):
                try:
                    validate_params(l, m)
                except BlobSoergelError:
                    continue
                pairs.append((l, m))
    ns = args.n or list(range(1, 21))
    results = grid.run_grid(pairs, ns, args.checks or grid.CHECKS, args.jobs, args.bound)
    failed = [r for r in results if not r.ok]
    return {
        "pairs": [list(p) for p in pairs],
        "n": [min(ns), max(ns)],
        "checks": list(args.checks or grid.CHECKS),
        "cells": len(results),
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "failures": [r.to_json() for r in failed],
    }


COMMANDS = {
    "params-check": (cmd_params_check, "validate (l, m) and solve for k"),
    "residues": (cmd_residues, "residue sequence of t^lambda or of --tableau"),
    "std-enum": (cmd_std_enum, "list Std(lambda) or Std(n)"),
    "isp": (cmd_isp, "decide whether --seq is a residue sequence"),
    "class": (cmd_class, "equivalence class of the walk of t^lambda"),
    "dtab": (cmd_dtab, "reduced word for d(t)"),
    "blocks": (cmd_blocks, "block factorisation of d(t_lambda)"),
    "dotline": (cmd_dotline, "Dot-Line normal form (--word) or dimension checks"),
    "leaves": (cmd_leaves, "light leaves of --word"),
    "gdim-soergel": (cmd_gdim_soergel, "graded dimension of A_w"),
    "gdim-blob": (cmd_gdim_blob, "graded dimension of b_n(lambda)"),
    "verify-bijection": (cmd_verify_bijection, "match cellular data with double leaves"),
    "decomp": (cmd_decomp, "predicted graded decomposition matrix"),
    "grid": (cmd_grid, "sweep a parameter grid and aggregate the checks"),
}

_LIST_L = {"grid"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blobsoergel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name in _LIST_L:
            p.add_argument("--l", type=_int_list, help="odd l values, comma separated")
            p.add_argument("--m", type=_int_list, help="m values, comma separated")
            p.add_argument("--n", type=_range, help="n range, e.g. 1-20")
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--checks", type=lambda s: s.split(","), help=f"subset of {','.join(grid.CHECKS)}")
            p.add_argument("--bound", type=int, help="skip cells with l(w) above this")
        else:
            needs_lm = name not in {"std-enum", "dtab", "dotline", "leaves", "gdim-soergel"}
            p.add_argument("--l", type=int, required=needs_lm)
            p.add_argument("--m", type=int, required=needs_lm)
            p.add_argument("--n", type=int)
            p.add_argument("--bound", type=int)
            p.add_argument("--jobs", type=int, default=1, help="accepted for uniformity; unused")
        p.add_argument("--lambda", dest="lam", type=_bipartition, metavar="A,B")
        p.add_argument("--tableau", type=_tableau, metavar="C1,C2,...")
        p.add_argument("--word")
        p.add_argument("--seq", type=_int_list)
        p.add_argument("--csv", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "std-enum" and args.bound is None:
        args.bound = tableaux.DEFAULT_BOUND
    handler = COMMANDS[args.command][0]
    try:
        result = handler(args, parser)
    except BlobSoergelError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}))
        return 1
    except ValueError as exc:
        print(json.dumps({"error": "InvalidInput", "message": str(exc)}))
        return 1
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        print(json.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
