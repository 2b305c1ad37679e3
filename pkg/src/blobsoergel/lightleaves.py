"""Light leaves and double leaves of a reduced word in the infinite dihedral group.

A light leaf is stored as its decoration string: at step i, ``U`` or ``D``
according to whether the next letter lengthens the current top, followed by
the choice bit (1 moves the top, 0 keeps it). Diagrams are never built; only
tops and degrees are tracked.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence

from .dihedral import DihedralElement, E
from .errors import BoundExceeded
from .laurent import LaurentPoly

DEFAULT_BOUND = 24

# degrees read off the Hecke-module stroll  H_x b_s = H_xs + v^{+-1} H_x
STEP_DEGREE: dict[str, int] = {"U0": 1, "U1": 0, "D0": -1, "D1": 0}

# the alternative table (trivalent on D1, trivalent plus dot on D0); kept for comparison
ALT_STEP_DEGREE: dict[str, int] = {"U0": 1, "U1": 0, "D0": 0, "D1": -1}


@dataclass(frozen=True)
class LightLeaf:
    steps: tuple[str, ...]
    top: DihedralElement
    degree: int

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(int(s[1]) for s in self.steps)

    def __str__(self) -> str:
        return " ".join(self.steps)

    def to_json(self) -> dict:
        return {"steps": str(self), "top": str(self.top), "degree": self.degree}


@dataclass(frozen=True)
class DoubleLeaf:
    lower: LightLeaf
    upper: LightLeaf

    def __post_init__(self):
        if self.lower.top != self.upper.top:
            raise ValueError("double leaf halves must share their top")

    @property
    def degree(self) -> int:
        return self.lower.degree + self.upper.degree

    def to_json(self) -> dict:
        return {"lower": self.lower.to_json(), "upper": self.upper.to_json(), "degree": self.degree}


def _check(w: DihedralElement, bound: int) -> None:
    if w.length > bound:
        raise BoundExceeded(f"l(w)={w.length} exceeds the light-leaf bound {bound}")


def leaf_from_bits(
    w: DihedralElement, bits: Sequence[int], degrees: Mapping[str, int] = STEP_DEGREE
) -> LightLeaf:
    word = w.word
    if len(bits) != len(word):
        raise ValueError(f"need {len(word)} decoration bits, got {len(bits)}")
    top = ""
    steps = []
    degree = 0
    for letter, bit in zip(word, bits):
        direction = "D" if top and top[-1] == letter else "U"
        step = f"{direction}{int(bit)}"
        steps.append(step)
        degree += degrees[step]
        if bit:
            top = top[:-1] if direction == "D" else top + letter
    return LightLeaf(tuple(steps), DihedralElement.from_word(top), degree)


def enumerate_leaves(
    w: DihedralElement, bound: int = DEFAULT_BOUND, degrees: Mapping[str, int] = STEP_DEGREE
) -> Iterator[LightLeaf]:
    _check(w, bound)
    for bits in product((0, 1), repeat=w.length):
        yield leaf_from_bits(w, bits, degrees)


def leaves_by_top(
    w: DihedralElement, x: DihedralElement | None = None, bound: int = DEFAULT_BOUND,
    degrees: Mapping[str, int] = STEP_DEGREE,
):
    """Light leaves grouped by top; with ``x`` given, only the leaves in L_w(x)."""
    groups: dict[DihedralElement, list[LightLeaf]] = {}
    for leaf in enumerate_leaves(w, bound, degrees):
        groups.setdefault(leaf.top, []).append(leaf)
    if x is not None:
        return groups.get(x, [])
    return dict(sorted(groups.items()))


def top_multiset(w: DihedralElement, bound: int = DEFAULT_BOUND) -> Counter:
    return Counter(leaf.top for leaf in enumerate_leaves(w, bound))


def double_leaves(
    w: DihedralElement, bound: int = DEFAULT_BOUND, degrees: Mapping[str, int] = STEP_DEGREE
) -> Iterator[DoubleLeaf]:
    for leaves in leaves_by_top(w, bound=bound, degrees=degrees).values():
        for lower in leaves:
            for upper in leaves:
                yield DoubleLeaf(lower, upper)


def leaf_polynomials(
    w: DihedralElement, bound: int = DEFAULT_BOUND, degrees: Mapping[str, int] = STEP_DEGREE
) -> dict[DihedralElement, LaurentPoly]:
    """``x -> sum over L_w(x) of v^degree``."""
    out: dict[DihedralElement, LaurentPoly] = {}
    for x, leaves in leaves_by_top(w, bound=bound, degrees=degrees).items():
        out[x] = sum((LaurentPoly.monomial(leaf.degree) for leaf in leaves), LaurentPoly.zero())
    return out


def graded_dim_A(
    w: DihedralElement, bound: int = DEFAULT_BOUND, degrees: Mapping[str, int] = STEP_DEGREE
) -> LaurentPoly:
    """Graded dimension of A_w: each top contributes the square of its leaf polynomial."""
    total = LaurentPoly.zero()
    for poly in leaf_polynomials(w, bound, degrees).values():
        total = total + poly * poly
    return total


def dim_A(w: DihedralElement, bound: int = DEFAULT_BOUND) -> int:
    return sum(c * c for c in top_multiset(w, bound).values())


def max_degree_double_leaves(w: DihedralElement, bound: int = DEFAULT_BOUND) -> list[DoubleLeaf]:
    """Double leaves of the largest degree; computed from the leaf polynomials, not by listing all pairs."""
    best: list[LightLeaf] = []
    best_deg = None
    for leaves in leaves_by_top(w, bound=bound).values():
        top_deg = max(leaf.degree for leaf in leaves)
        tops = [leaf for leaf in leaves if leaf.degree == top_deg]
        if best_deg is None or 2 * top_deg > best_deg:
            best_deg = 2 * top_deg
            best = [DoubleLeaf(a, b) for a in tops for b in tops]
        elif 2 * top_deg == best_deg:
            best.extend(DoubleLeaf(a, b) for a in tops for b in tops)
    return best


__all__ = [
    "ALT_STEP_DEGREE",
    "DEFAULT_BOUND",
    "DoubleLeaf",
    "E",
    "LightLeaf",
    "STEP_DEGREE",
    "dim_A",
    "double_leaves",
    "enumerate_leaves",
    "graded_dim_A",
    "leaf_from_bits",
    "leaf_polynomials",
    "leaves_by_top",
    "max_degree_double_leaves",
    "top_multiset",
]
