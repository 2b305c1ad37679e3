"""The graded cellular basis of the idempotent truncation b_n(lambda).

Basis elements are indexed by pairs of same-shape tableaux whose residue
sequence is ``i^lambda``; their degree is read from reduced words of
``d(s)`` and ``d(t)`` with the KLR degree table.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .dotline import DotLineElement
from .laurent import LaurentPoly
from .params import Params
from .symmetric import d_of, klr_degree
from .tableaux import (
    OneLineBipartition,
    StandardBitableau,
    equivalence_class,
    lambda_data,
    residue_sequence,
    tableau_of,
    tmax,
    walk_of,
)


@dataclass(frozen=True)
class CellDatum:
    mu: OneLineBipartition
    s: StandardBitableau
    t: StandardBitableau
    degree: int

    def to_json(self) -> dict:
        return {"mu": self.mu.to_json(), "s": str(self.s), "t": str(self.t), "degree": self.degree}


def tableau_degree(t: StandardBitableau, params: Params) -> int:
    """Half of a cellular degree: ``deg psi_{d(t)} e(i^mu)`` with mu = Shape(t)."""
    return _tableau_degree(t, params)


@lru_cache(maxsize=None)
def _tableau_degree(t: StandardBitableau, params: Params) -> int:
    return klr_degree(d_of(t).word, residue_sequence(tmax(t.shape), params), params)


def tableaux_of_class(lam: OneLineBipartition, params: Params) -> dict[OneLineBipartition, list[StandardBitableau]]:
    """``mu -> Std_lambda(mu)``: tableaux of shape mu with residue sequence i^lambda."""
    groups: dict[OneLineBipartition, list[StandardBitableau]] = defaultdict(list)
    for w in equivalence_class(walk_of(tmax(lam)), params):
        t = tableau_of(w)
        groups[t.shape].append(t)
    return {mu: sorted(ts) for mu, ts in sorted(groups.items())}


def basis_of(lam: OneLineBipartition, params: Params) -> list[CellDatum]:
    lambda_data(lam, params)  # raises on invalid lambda
    out = []
    for mu, ts in tableaux_of_class(lam, params).items():
        degs = {t: tableau_degree(t, params) for t in ts}
        for s in ts:
            for t in ts:
                out.append(CellDatum(mu, s, t, degs[s] + degs[t]))
    return out


def graded_dim_b(lam: OneLineBipartition, params: Params) -> LaurentPoly:
    total = LaurentPoly.zero()
    for datum in basis_of(lam, params):
        total = total + LaurentPoly.monomial(datum.degree)
    return total


def central_element_degree(lam: OneLineBipartition, params: Params) -> int:
    """Degree of the diagonal datum (mu_lambda, t_lambda, t_lambda)."""
    data = lambda_data(lam, params)
    return 2 * tableau_degree(data.t_lambda, params)


@dataclass(frozen=True)
class YModel:
    """Y_n(lambda) presented as a Dot-Line algebra of rank q_lambda + 1.

    ``levels[j-1]`` is the index r with ``Y_j = (y_r - y_{r-1}) e(i^lambda)``.
    """

    lam: OneLineBipartition
    levels: tuple[int, ...]
    labels: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(f"Y{j}" for j in range(1, self.rank + 1)))

    @property
    def rank(self) -> int:
        return len(self.levels)

    @property
    def dimension(self) -> int:
        return 2 ** self.rank

    def generator(self, j: int) -> DotLineElement:
        return DotLineElement.generator(self.rank, j)

    def one(self) -> DotLineElement:
        return DotLineElement.one(self.rank)

    def format(self, x: DotLineElement) -> str:
        return str(x).replace("X", "Y")

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "rank": self.rank,
            "dimension": self.dimension,
            "generators": [
                {"label": lab, "y_index": lev} for lab, lev in zip(self.labels, self.levels)
            ],
        }


def y_model(lam: OneLineBipartition, params: Params) -> YModel:
    data = lambda_data(lam, params)
    return YModel(lam, tuple(j + 1 for j in data.j_levels))
