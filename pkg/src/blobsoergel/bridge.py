"""Matching the cellular basis of b_n(lambda) with the double leaves of A_w,
and the predicted graded decomposition matrix.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cellular import tableau_degree, tableaux_of_class
from .dihedral import DihedralElement, alcove_of, bruhat_ideal, kl_h, on_wall, same_orbit
from .errors import ResidueMismatch
from .laurent import LaurentPoly
from .lightleaves import DEFAULT_BOUND, LightLeaf, graded_dim_A, leaf_from_bits, leaves_by_top
from .params import Params
from .tableaux import (
    OneLineBipartition,
    StandardBitableau,
    lambda_data,
    residue_sequence,
    tmax,
    walk_of,
)

CONVENTION = (
    "at each wall contact: U if the walk arrives moving away from the fundamental alcove, "
    "D if moving toward it; bit 1 if it crosses the wall, 0 if it bounces back"
)


def F(lam: OneLineBipartition, params: Params) -> dict[OneLineBipartition, DihedralElement]:
    """``mu -> x`` with mu in A^x, over the shapes mu admitting a tableau with residues i^lambda."""
    return {mu: alcove_of(mu.point, params) for mu in tableaux_of_class(lam, params)}


def wall_behaviour(t: StandardBitableau, lam: OneLineBipartition, params: Params) -> tuple[str, ...]:
    """Decoration read from the walk of t at the levels where the maximal walk meets a wall."""
    data = lambda_data(lam, params)
    pos = walk_of(t).positions
    centre = Fraction(params.l - 2 * params.m, 2)
    steps = []
    for level in data.j_levels:
        p = pos[level]
        if not params.is_wall(p):
            raise ResidueMismatch(f"walk of {t} is off the wall at level {level}")
        outward = 1 if p > centre else -1
        incoming = pos[level] - pos[level - 1]
        outgoing = pos[level + 1] - pos[level]
        direction = "U" if incoming == outward else "D"
        steps.append(f"{direction}{int(outgoing == incoming)}")
    return tuple(steps)


def F_mu(t: StandardBitableau, lam: OneLineBipartition, params: Params) -> LightLeaf:
    if residue_sequence(t, params) != residue_sequence(tmax(lam), params):
        raise ResidueMismatch(f"{t} does not have the residue sequence of {lam}")
    data = lambda_data(lam, params)
    steps = wall_behaviour(t, lam, params)
    leaf = leaf_from_bits(data.w, [int(s[1]) for s in steps])
    if leaf.steps != steps:
        raise ResidueMismatch(f"walk decoration {steps} is not a light leaf of {data.w}")
    return leaf


@dataclass
class BijectionReport:
    lam: OneLineBipartition
    params: Params
    w: DihedralElement
    count_b: int
    count_A: int
    graded_b: LaurentPoly
    graded_A: LaurentPoly
    F_table: dict[OneLineBipartition, DihedralElement]
    F_bijective: bool
    F_mu_bijective: bool
    degree_preserving: bool
    convention: str = CONVENTION
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.F_bijective
            and self.F_mu_bijective
            and self.degree_preserving
            and self.count_b == self.count_A
            and self.graded_b == self.graded_A
            and not self.mismatches
        )

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "params": self.params.to_json(),
            "w": str(self.w),
            "count_b": self.count_b,
            "count_A": self.count_A,
            "graded_b": self.graded_b.to_json(),
            "graded_A": self.graded_A.to_json(),
            "graded_equal": self.graded_b == self.graded_A,
            "F_table": {str(mu): str(x) for mu, x in self.F_table.items()},
            "F_bijective": self.F_bijective,
            "F_mu_bijective": self.F_mu_bijective,
            "degree_preserving": self.degree_preserving,
            "convention": self.convention,
            "mismatches": self.mismatches,
            "ok": self.ok,
        }


def verify_bijection(lam: OneLineBipartition, params: Params, bound: int = DEFAULT_BOUND) -> BijectionReport:
    data = lambda_data(lam, params)
    w = data.w
    classes = tableaux_of_class(lam, params)
    table = F(lam, params)
    leaves = leaves_by_top(w, bound=bound)
    mismatches: list[dict] = []

    ideal = set(bruhat_ideal(w))
    F_bijective = len(set(table.values())) == len(table) and set(table.values()) == ideal
    if not F_bijective:
        mismatches.append({"check": "F", "image": sorted(map(str, table.values())), "ideal": sorted(map(str, ideal))})

    F_mu_bijective = True
    degree_preserving = True
    graded_b = LaurentPoly.zero()
    for mu, ts in classes.items():
        degs = [tableau_degree(t, params) for t in ts]
        half = sum((LaurentPoly.monomial(d) for d in degs), LaurentPoly.zero())
        graded_b = graded_b + half * half
        x = table[mu]
        images = []
        for t, deg in zip(ts, degs):
            try:
                leaf = F_mu(t, lam, params)
            except ResidueMismatch as exc:
                F_mu_bijective = False
                mismatches.append({"check": "F_mu", "tableau": str(t), "error": str(exc)})
                continue
            images.append(leaf)
            if leaf.top != x:
                F_mu_bijective = False
                mismatches.append({"check": "top", "tableau": str(t), "leaf": str(leaf), "top": str(leaf.top), "expected": str(x)})
            if leaf.degree != deg:
                degree_preserving = False
                mismatches.append({"check": "degree", "tableau": str(t), "leaf": str(leaf), "leaf_degree": leaf.degree, "tableau_degree": deg})
        if sorted(images, key=str) != sorted(leaves.get(x, []), key=str):
            F_mu_bijective = False
            mismatches.append({"check": "F_mu_image", "mu": str(mu), "top": str(x)})

    graded_A = graded_dim_A(w, bound)
    count_b = graded_b.eval_at_one()
    count_A = graded_A.eval_at_one()
    if graded_b != graded_A:
        mismatches.append({"check": "graded", "graded_b": graded_b.to_json(), "graded_A": graded_A.to_json()})
    return BijectionReport(
        lam=lam,
        params=params,
        w=w,
        count_b=count_b,
        count_A=count_A,
        graded_b=graded_b,
        graded_A=graded_A,
        F_table=table,
        F_bijective=F_bijective,
        F_mu_bijective=F_mu_bijective,
        degree_preserving=degree_preserving,
        mismatches=mismatches,
    )


@dataclass
class DecompositionMatrix:
    """Rows lambda, columns mu, both running over Bip_1(n) by decreasing lambda1 - lambda2."""

    n: int
    params: Params
    labels: list[OneLineBipartition]
    alcoves: list[DihedralElement | None]
    entries: dict[tuple[OneLineBipartition, OneLineBipartition], LaurentPoly | None]

    @property
    def on_wall(self) -> list[OneLineBipartition]:
        return [lab for lab, x in zip(self.labels, self.alcoves) if x is None]

    def entry(self, lam: OneLineBipartition, mu: OneLineBipartition) -> LaurentPoly | None:
        return self.entries[(lam, mu)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "params": self.params.to_json(),
            "labels": [str(lab) for lab in self.labels],
            "alcoves": [None if x is None else str(x) for x in self.alcoves],
            "on_wall": [str(lab) for lab in self.on_wall],
            "matrix": [
                [_cell_json(self.entries[(a, b)]) for b in self.labels] for a in self.labels
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda"] + [str(lab) for lab in self.labels])
        for a in self.labels:
            row = [str(a)]
            for b in self.labels:
                cell = _cell_json(self.entries[(a, b)])
                row.append("wall" if cell is None else json.dumps(cell, separators=(",", ":")))
            writer.writerow(row)
        return buf.getvalue()


def _cell_json(poly: LaurentPoly | None):
    return None if poly is None else poly.to_json()


def decomposition_matrix(n: int, params: Params) -> DecompositionMatrix:
    labels = [OneLineBipartition(n - l2, l2) for l2 in range(n + 1)]
    alcoves = [None if on_wall(lab.point, params) else alcove_of(lab.point, params) for lab in labels]
    entries = {}
    for a, x in zip(labels, alcoves):
        for b, y in zip(labels, alcoves):
            if x is None or y is None:
                entries[(a, b)] = None
            elif same_orbit(a.point, b.point, params):
                entries[(a, b)] = kl_h(x, y)
            else:
                entries[(a, b)] = LaurentPoly.zero()
    return DecompositionMatrix(n, params, labels, alcoves, entries)
