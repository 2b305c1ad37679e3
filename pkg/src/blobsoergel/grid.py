"""Per-cell consistency checks and parameter-grid sweeps."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .bridge import verify_bijection
from .cellular import central_element_degree
from .errors import BlobSoergelError
from .params import Params, validate_params
from .symmetric import Block, Permutation, block_decomposition, d_of
from .tableaux import (
    LambdaData,
    OneLineBipartition,
    equivalence_class,
    is_residue_sequence,
    lambda_data,
    permute_sequence,
    residue_sequence,
    tmax,
    valid_bipartitions,
    walk_of,
)

DEFAULT_GRID = ((5, 2), (5, 3), (7, 2), (7, 3), (7, 4), (9, 2))
CHECKS = ("bijection", "central", "blocks", "class", "wall-claim")


def wall_claim_violations(lam: OneLineBipartition, params: Params) -> list[int]:
    """Levels r > 2 mu with s_r i^lambda a residue sequence but r not = a_lambda (mod l)."""
    data = lambda_data(lam, params)
    seq = residue_sequence(tmax(lam), params)
    bad = []
    for r in range(2 * lam.mu + 1, lam.n):
        if is_residue_sequence(permute_sequence(seq, r), params) is not None:
            if (r - data.a_lambda) % params.l:
                bad.append(r)
    return bad


def staircase_problems(blocks: list[Block], data: LambdaData, params: Params) -> list[str]:
    problems = []
    for a, block in enumerate(blocks, start=1):
        rows = block.rows
        if not rows or rows[0][0] != data.j_levels[a - 1]:
            problems.append(f"block {a} does not start at level {data.j_levels[a - 1]}")
            continue
        for (k0, j0), (k1, j1) in zip(rows, rows[1:]):
            if k1 != k0 + 1 or j1 != j0 + 2:
                problems.append(f"block {a} breaks the staircase at s_{k1}..s_{j1}")
        # row i of a staircase has width bound l - (i + 2)
        for i, (k, j) in enumerate(rows, start=1):
            if not j <= k or k - j > params.l - (i + 2):
                problems.append(f"block {a}, row {i}: k - j = {k - j} exceeds l - (i+2) = {params.l - i - 2}")
    for i, x in enumerate(blocks):
        for y in blocks[i + 1 :]:
            if any(abs(g - h) < 2 for g in x.support for h in y.support):
                problems.append(f"blocks at levels {x.level} and {y.level} do not commute")
    n = data.lam.n
    product = Permutation.identity(n)
    for block in blocks:
        product = product * Permutation.from_word(block.word, n)
    if product != d_of(data.t_lambda):
        problems.append("product of blocks differs from d(t_lambda)")
    return problems


@dataclass
class CellResult:
    l: int
    m: int
    lam: OneLineBipartition
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def key(self) -> tuple:
        return (self.l, self.m, self.lam.n, -self.lam.point)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        out = {
            "l": self.l,
            "m": self.m,
            "n": self.lam.n,
            "lambda": self.lam.to_json(),
            "checks": self.checks,
            "ok": self.ok,
        }
        if self.details:
            out["details"] = self.details
        return out


def check_cell(l: int, m: int, lam: OneLineBipartition, checks: Iterable[str] = CHECKS) -> CellResult:
    params = validate_params(l, m)
    data = lambda_data(lam, params)
    res = CellResult(l, m, lam)
    for name in checks:
        if name == "bijection":
            report = verify_bijection(lam, params)
            res.checks[name] = report.ok
            if not report.ok:
                res.details[name] = report.mismatches
        elif name == "central":
            deg = central_element_degree(lam, params)
            res.checks[name] = deg == 2 * (data.q_lambda + 1)
            if not res.checks[name]:
                res.details[name] = deg
        elif name == "blocks":
            problems = staircase_problems(block_decomposition(lam, params), data, params)
            res.checks[name] = not problems
            if problems:
                res.details[name] = problems
        elif name == "class":
            size = len(equivalence_class(walk_of(tmax(lam)), params))
            res.checks[name] = size == 2 ** (data.q_lambda + 1) and data.q_lambda + 1 == data.w.length
            if not res.checks[name]:
                res.details[name] = size
        elif name == "wall-claim":
            bad = wall_claim_violations(lam, params)
            res.checks[name] = not bad
            if bad:
                res.details[name] = bad
        else:
            raise ValueError(f"unknown check {name!r}")
    return res


def _run(args) -> CellResult:
    return check_cell(*args)


def grid_cells(
    pairs: Iterable[tuple[int, int]], ns: Iterable[int], max_length: int | None = None
) -> list[tuple[int, int, OneLineBipartition]]:
    cells = []
    ns = list(ns)
    for l, m in pairs:
        params = validate_params(l, m)
        for n in ns:
            for lam in valid_bipartitions(n, params):
                if max_length is not None and lambda_data(lam, params).w.length > max_length:
                    continue
                cells.append((l, m, lam))
    return cells


def run_grid(
    pairs: Iterable[tuple[int, int]],
    ns: Iterable[int],
    checks: Iterable[str] = CHECKS,
    jobs: int = 1,
    max_length: int | None = None,
) -> list[CellResult]:
    checks = tuple(checks)
    tasks = [(l, m, lam, checks) for l, m, lam in grid_cells(pairs, ns, max_length)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks, chunksize=16))
    else:
        results = [_run(t) for t in tasks]
    return sorted(results, key=lambda r: r.key)


__all__ = [
    "BlobSoergelError",
    "CHECKS",
    "CellResult",
    "DEFAULT_GRID",
    "check_cell",
    "grid_cells",
    "run_grid",
    "staircase_problems",
    "wall_claim_violations",
]
