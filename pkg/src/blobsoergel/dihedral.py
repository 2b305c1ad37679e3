"""The infinite dihedral group W = <s, t>, its Bruhat order, Kazhdan-Lusztig
polynomials, and the action of W on the real line by reflections in the walls
``j = -m (mod l)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import OnWall
from .laurent import LaurentPoly
from .params import Params

Number = Union[int, Fraction]

_OTHER = {"s": "t", "t": "s"}


@dataclass(frozen=True, order=True)
class DihedralElement:
    """An element ``k_s = sts...`` or ``k_t = tst...`` (k letters).

    The identity is ``length == 0`` with ``first is None``.
    """

    length: int
    first: Optional[str] = None

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if (self.length == 0) != (self.first is None):
            raise ValueError("the identity is exactly the element without a first letter")
        if self.first is not None and self.first not in _OTHER:
            raise ValueError(f"unknown generator {self.first!r}")

    @classmethod
    def identity(cls) -> "DihedralElement":
        return cls(0, None)

    @classmethod
    def from_word(cls, word: str) -> "DihedralElement":
        """Reduce an arbitrary word in ``s``/``t`` (``"e"`` and ``""`` are the identity)."""
        stack: list[str] = []
        for ch in word.replace(" ", "").replace("*", ""):
            if ch == "e":
                continue
            if ch not in _OTHER:
                raise ValueError(f"invalid letter {ch!r} in {word!r}")
            if stack and stack[-1] == ch:
                stack.pop()
            else:
                stack.append(ch)
        if not stack:
            return cls.identity()
        return cls(len(stack), stack[0])

    parse = from_word

    @property
    def word(self) -> str:
        if self.length == 0:
            return ""
        other = _OTHER[self.first]
        return "".join(self.first if i % 2 == 0 else other for i in range(self.length))

    @property
    def last(self) -> Optional[str]:
        return self.word[-1] if self.length else None

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        return DihedralElement.from_word(self.word + other.word)

    def inverse(self) -> "DihedralElement":
        return DihedralElement.from_word(self.word[::-1])

    def __str__(self) -> str:
        return self.word or "e"

    def __repr__(self) -> str:
        return f"DihedralElement({str(self)!r})"


E = DihedralElement.identity()
S = DihedralElement(1, "s")
T = DihedralElement(1, "t")


def elements_up_to(max_length: int) -> Iterator[DihedralElement]:
    yield E
    for k in range(1, max_length + 1):
        yield DihedralElement(k, "s")
        yield DihedralElement(k, "t")


def bruhat_leq(x: DihedralElement, y: DihedralElement) -> bool:
    return x == y or x.length < y.length


def bruhat_ideal(w: DihedralElement) -> list[DihedralElement]:
    return [x for x in elements_up_to(w.length) if bruhat_leq(x, w)]


def kl_h(x: DihedralElement, y: DihedralElement) -> LaurentPoly:
    """Kazhdan-Lusztig polynomial h_{x,y} (Soergel's normalisation)."""
    if not bruhat_leq(x, y):
        return LaurentPoly.zero()
    return LaurentPoly.monomial(y.length - x.length)


def reflect(letter: str, point: Number, params: Params) -> Number:
    if letter == "s":
        return -2 * params.m - point
    if letter == "t":
        return 2 * (params.l - params.m) - point
    raise ValueError(f"unknown generator {letter!r}")


def act(x: DihedralElement, point: Number, params: Params) -> Number:
    for letter in reversed(x.word):
        point = reflect(letter, point, params)
    return point


def on_wall(point: Number, params: Params) -> bool:
    p = Fraction(point)
    return p.denominator == 1 and params.is_wall(int(p))


def alcove_of(point: Number, params: Params) -> DihedralElement:
    """The unique x with ``point`` in x . A^0."""
    if on_wall(point, params):
        raise OnWall(f"{point} lies on a wall (= -{params.m} mod {params.l})")
    lo, hi = params.fundamental_alcove
    letters = []
    while not lo < point < hi:
        letter = "t" if point > hi else "s"
        point = reflect(letter, point, params)
        letters.append(letter)
    return DihedralElement.from_word("".join(letters))


def same_orbit(p: int, q: int, params: Params) -> bool:
    """Whether integer points p and q lie in the same W-orbit."""
    period = 2 * params.l
    return (p - q) % period == 0 or (p + q + 2 * params.m) % period == 0
