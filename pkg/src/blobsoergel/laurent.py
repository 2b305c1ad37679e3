"""Laurent polynomials in one variable ``v`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Scalar = int


class LaurentPoly:
    """Immutable element of Z[v, v^-1].

    Stored as a sorted tuple of ``(exponent, coefficient)`` pairs with every
    coefficient nonzero, so equality and hashing are structural.
    """

    __slots__ = ("_items",)

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        acc: dict[int, int] = {}
        if coeffs is not None:
            pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, c in pairs:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._items = tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._items)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def coeff(self, exponent: int) -> int:
        return dict(self._items).get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._items

    def min_degree(self) -> int | None:
        return self._items[0][0] if self._items else None

    def max_degree(self) -> int | None:
        return self._items[-1][0] if self._items else None

    def eval_at_one(self) -> int:
        return sum(c for _, c in self._items)

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        return LaurentPoly((-e, c) for e, c in self._items)

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self._items + other._items)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._items)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(
            (e1 + e2, c1 * c2) for e1, c1 in self._items for e2, c2 in other._items
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __bool__(self):
        return bool(self._items)

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._items]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls((e, c) for e, c in data)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._items:
            return "0"
        parts = []
        for e, c in reversed(self._items):
            if e == 0:
                mono = str(abs(c))
            else:
                power = "v" if e == 1 else f"v^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


v = LaurentPoly.monomial(1)
