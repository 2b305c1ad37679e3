"""The arithmetic frame (l, m, k) and the Cartan matrix on residues mod l."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenL, ForbiddenCongruence, MOutOfRange

Residue = int


@dataclass(frozen=True)
class Params:
    """Validated parameters.

    ``k`` is the canonical representative in ``range(l)`` of the unique
    residue with ``2k = m (mod l)``.
    """

    l: int
    m: int
    k: int

    @property
    def inv2(self) -> int:
        return (self.l + 1) // 2

    def residue(self, value: int) -> Residue:
        return value % self.l

    def is_wall(self, position: int) -> bool:
        return (position + self.m) % self.l == 0

    @property
    def fundamental_alcove(self) -> tuple[int, int]:
        """Walls bounding the alcove that contains 0."""
        return (-self.m, self.l - self.m)

    def to_json(self) -> dict:
        return {"l": self.l, "m": self.m, "k": self.k}


def validate_params(l: int, m: int) -> Params:
    if l % 2 == 0:
        raise EvenL(f"l must be odd, got {l}")
    if not 1 <= m < l:
        raise MOutOfRange(f"m must satisfy 1 <= m < l, got m={m}, l={l}")
    if m % l in (0, 1, l - 1):
        raise ForbiddenCongruence(f"m={m} is congruent to 0, 1 or -1 mod {l}")
    k = (m * (l + 1) // 2) % l
    return Params(l=l, m=m, k=k)


def cartan(i: Residue, j: Residue, l: int) -> int:
    d = (i - j) % l
    if d == 0:
        return 2
    if d == 1 or d == l - 1:
        return -1
    return 0
