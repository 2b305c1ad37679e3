"""The Dot-Line algebra DL_n.

Commutative algebra on X_1..X_n with ``X_1^2 = 0`` and
``X_i^2 = -2 X_i (X_1 + ... + X_{i-1})``. Elements are kept in the basis of
square-free monomials, encoded as bitmasks (bit ``i-1`` set iff X_i divides).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import BoundExceeded, RankMismatch

ORACLE_BOUND = 6
ANNIHILATION_BOUND = 10


@lru_cache(maxsize=1 << 20)
def _reduce(exponents: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Normal form of X^exponents as sorted (mask, coeff) pairs."""
    n = len(exponents)
    # square-free monomials have degree <= n and the relations are homogeneous
    if sum(exponents) > n:
        return ()
    top = max((i for i, e in enumerate(exponents) if e >= 2), default=None)
    if top is None:
        mask = sum(1 << i for i, e in enumerate(exponents) if e)
        return ((mask, 1),)
    if top == 0:
        return ()
    acc: dict[int, int] = {}
    base = list(exponents)
    base[top] -= 1
    for j in range(top):
        beta = base.copy()
        beta[j] += 1
        for mask, c in _reduce(tuple(beta)):
            acc[mask] = acc.get(mask, 0) - 2 * c
    return tuple(sorted((m, c) for m, c in acc.items() if c))


class DotLineElement:
    """An element of DL_n in normal form."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        self.n = n
        acc: dict[int, int] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for mask, c in pairs:
            if mask >> n:
                raise ValueError(f"monomial mask {mask:b} uses more than {n} generators")
            acc[mask] = acc.get(mask, 0) + c
        self._terms = tuple(sorted((m, c) for m, c in acc.items() if c))

    @classmethod
    def one(cls, n: int) -> "DotLineElement":
        return cls(n, {0: 1})

    @classmethod
    def generator(cls, n: int, i: int) -> "DotLineElement":
        if not 1 <= i <= n:
            raise ValueError(f"X_{i} is not a generator of DL_{n}")
        return cls(n, {1 << (i - 1): 1})

    @classmethod
    def monomial(cls, n: int, mask: int) -> "DotLineElement":
        return cls(n, {mask: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_set(self) -> set[int]:
        """Degrees (each generator counts 2) of the monomials present."""
        return {2 * bin(m).count("1") for m, _ in self._terms}

    def _check(self, other: "DotLineElement") -> None:
        if self.n != other.n:
            raise RankMismatch(f"DL_{self.n} and DL_{other.n} elements cannot be combined")

    def __add__(self, other):
        if isinstance(other, int):
            other = DotLineElement(self.n, {0: other})
        self._check(other)
        return DotLineElement(self.n, self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return DotLineElement(self.n, ((m, -c) for m, c in self._terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DotLineElement(self.n, ((m, c * other) for m, c in self._terms))
        self._check(other)
        acc: dict[int, int] = {}
        for ma, ca in self._terms:
            for mb, cb in other._terms:
                for mask, c in multiply_monomials(self.n, ma, mb):
                    acc[mask] = acc.get(mask, 0) + ca * cb * c
        return DotLineElement(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = DotLineElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = DotLineElement(self.n, {0: other})
        if not isinstance(other, DotLineElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, self._terms))

    def to_json(self) -> list[list[int]]:
        return [[m, c] for m, c in self._terms]

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for mask, c in self._terms:
            mono = monomial_text(mask)
            sign = "-" if c < 0 else "+"
            body = mono if abs(c) == 1 and mono != "1" else (f"{abs(c)}" if mono == "1" else f"{abs(c)}*{mono}")
            out += (f" {sign} " if out else ("-" if c < 0 else "")) + body
        return out

    def __repr__(self):
        return f"DotLineElement(n={self.n}, {self})"


def monomial_text(mask: int) -> str:
    idx = [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]
    return "*".join(f"X{i}" for i in idx) if idx else "1"


def parse_monomial(text: str, n: int) -> tuple[int, ...]:
    """``"X1*X3^2*X3"`` -> exponent vector of length n."""
    exps = [0] * n
    text = text.replace(" ", "")
    if text in ("", "1"):
        return tuple(exps)
    for factor in text.split("*"):
        match = re.fullmatch(r"X(\d+)(?:\^(\d+))?", factor)
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i, e = int(match.group(1)), int(match.group(2) or 1)
        if not 1 <= i <= n:
            raise ValueError(f"X{i} is not a generator of DL_{n}")
        exps[i - 1] += e
    return tuple(exps)


def normal_form(exponents: Sequence[int]) -> DotLineElement:
    exps = tuple(int(e) for e in exponents)
    if any(e < 0 for e in exps):
        raise ValueError("exponents must be non-negative")
    return DotLineElement(len(exps), _reduce(exps))


def multiply_monomials(n: int, a: int, b: int) -> tuple[tuple[int, int], ...]:
    exps = tuple((a >> i & 1) + (b >> i & 1) for i in range(n))
    return _reduce(exps)


def multiply(a: DotLineElement, b: DotLineElement) -> DotLineElement:
    return a * b


def add(a: DotLineElement, b: DotLineElement) -> DotLineElement:
    return a + b


def _exact_rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of sparse integer rows."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        vec = {c: Fraction(x) for c, x in row.items() if x}
        while vec:
            col = min(vec)
            if col not in pivots:
                lead = vec[col]
                pivots[col] = {c: x / lead for c, x in vec.items()}
                rank += 1
                break
            factor = vec[col]
            for c, x in pivots[col].items():
                val = vec.get(c, 0) - factor * x
                if val:
                    vec[c] = val
                else:
                    vec.pop(c, None)
    return rank


def _monomials(n: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def dimension_oracle(n: int) -> int:
    """dim Q[X_1..X_n] / (relations), degree by degree, by exact linear algebra.

    Works only with the defining relations; the normal-form reducer is never
    consulted. The graded piece of degree d is spanned by monomials of total
    degree d, and the ideal in that degree by monomial multiples of the
    relations. Once a graded piece vanishes every higher one does too.
    """
    if n > ORACLE_BOUND:
        raise BoundExceeded(f"dimension oracle supports n <= {ORACLE_BOUND}, got {n}")
    relations = []
    for i in range(n):
        rel: dict[tuple[int, ...], int] = {}
        sq = [0] * n
        sq[i] = 2
        rel[tuple(sq)] = 1
        for j in range(i):
            e = [0] * n
            e[i] += 1
            e[j] += 1
            rel[tuple(e)] = rel.get(tuple(e), 0) + 2
        relations.append(rel)
    total = 0
    degree = 0
    while True:
        basis = _monomials(n, degree)
        index = {mono: c for c, mono in enumerate(basis)}
        rows = []
        if degree >= 2:
            for mult in _monomials(n, degree - 2):
                for rel in relations:
                    row: dict[int, int] = {}
                    for mono, c in rel.items():
                        key = tuple(x + y for x, y in zip(mono, mult))
                        row[index[key]] = row.get(index[key], 0) + c
                    rows.append(row)
        piece = len(basis) - _exact_rank(rows)
        if piece == 0:
            return total
        total += piece
        degree += 1


def precedes(beta: int, alpha: int, n: int) -> bool:
    """``X^beta |> X^alpha``: higher degree, or equal degree and beta lexicographically larger."""
    db, da = bin(beta).count("1"), bin(alpha).count("1")
    if db != da:
        return db > da
    vb = tuple(beta >> i & 1 for i in range(n))
    va = tuple(alpha >> i & 1 for i in range(n))
    return vb > va


def ordering_annihilation_check(n: int) -> bool:
    """X^beta X^(complement of alpha) = 0 whenever X^beta |> X^alpha, while X^alpha X^(complement) != 0."""
    if n > ANNIHILATION_BOUND:
        raise BoundExceeded(f"annihilation check supports n <= {ANNIHILATION_BOUND}, got {n}")
    full = (1 << n) - 1
    for alpha in range(1 << n):
        hat = full ^ alpha
        if multiply_monomials(n, alpha, hat) != ((full, 1),):
            return False
        for beta in range(1 << n):
            if precedes(beta, alpha, n) and multiply_monomials(n, beta, hat):
                return False
    return True


def span_dimension(n: int) -> int:
    """Rank of the normal forms of every monomial with exponents in {0, 1, 2}."""
    rows = []
    for code in range(3 ** n):
        exps, c = [], code
        for _ in range(n):
            exps.append(c % 3)
            c //= 3
        rows.append(dict(_reduce(tuple(exps))))
    return _exact_rank(rows)
