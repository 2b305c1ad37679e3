"""One-line bipartitions, standard bitableaux, walks on the Pascal triangle and
residue sequences.

A standard bitableau is stored as its component sequence: entry ``i`` sits in
component ``components[i-1]`` (1 or 2). Entries of a component increase from
left to right, so the sequence determines the tableau. The associated walk
steps +1 for component 1 and -1 for component 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .dihedral import DihedralElement, alcove_of
from .errors import BoundExceeded, InsideFundamentalAlcove, OnWall
from .params import Params, Residue

DEFAULT_BOUND = 22


@dataclass(frozen=True, order=True)
class OneLineBipartition:
    lambda1: int
    lambda2: int

    def __post_init__(self):
        if self.lambda1 < 0 or self.lambda2 < 0:
            raise ValueError("bipartition parts must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "OneLineBipartition":
        a, b = (int(x) for x in text.split(","))
        return cls(a, b)

    @classmethod
    def from_point(cls, n: int, point: int) -> "OneLineBipartition":
        if (n + point) % 2 or abs(point) > n:
            raise ValueError(f"{point} is not in Lambda_{n}")
        return cls((n + point) // 2, (n - point) // 2)

    @property
    def n(self) -> int:
        return self.lambda1 + self.lambda2

    @property
    def point(self) -> int:
        return self.lambda1 - self.lambda2

    @property
    def mu(self) -> int:
        return min(self.lambda1, self.lambda2)

    def __str__(self) -> str:
        return f"{self.lambda1},{self.lambda2}"

    def to_json(self) -> list[int]:
        return [self.lambda1, self.lambda2]


@dataclass(frozen=True, order=True)
class StandardBitableau:
    components: tuple[int, ...]

    def __post_init__(self):
        if any(c not in (1, 2) for c in self.components):
            raise ValueError("components must be 1 or 2")

    @classmethod
    def parse(cls, text: str) -> "StandardBitableau":
        text = text.strip()
        return cls(tuple(int(x) for x in text.split(","))) if text else cls(())

    @classmethod
    def from_rows(cls, first: Iterable[int], second: Iterable[int]) -> "StandardBitableau":
        first, second = sorted(first), sorted(second)
        n = len(first) + len(second)
        comps = [0] * n
        for e in first:
            comps[e - 1] = 1
        for e in second:
            comps[e - 1] = 2
        if sorted(first + second) != list(range(1, n + 1)):
            raise ValueError("rows must partition 1..n")
        return cls(tuple(comps))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def shape(self) -> OneLineBipartition:
        ones = self.components.count(1)
        return OneLineBipartition(ones, self.n - ones)

    def rows(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        first = tuple(i + 1 for i, c in enumerate(self.components) if c == 1)
        second = tuple(i + 1 for i, c in enumerate(self.components) if c == 2)
        return first, second

    def boxes(self) -> list[tuple[int, int, int]]:
        """The box ``(1, column, component)`` holding each entry 1..n."""
        seen = {1: 0, 2: 0}
        out = []
        for c in self.components:
            seen[c] += 1
            out.append((1, seen[c], c))
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self.components))


@dataclass(frozen=True, order=True)
class Walk:
    positions: tuple[int, ...]

    def __post_init__(self):
        if not self.positions or self.positions[0] != 0:
            raise ValueError("a walk starts at 0")
        for a, b in zip(self.positions, self.positions[1:]):
            if abs(a - b) != 1:
                raise ValueError("walk steps must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.positions) - 1

    def step(self, i: int) -> int:
        return self.positions[i] - self.positions[i - 1]

    def reflect_after(self, i: int, wall: int) -> "Walk":
        """Reflect every vertex after level ``i`` in the wall at ``wall``."""
        head = self.positions[: i + 1]
        tail = tuple(2 * wall - p for p in self.positions[i + 1 :])
        return Walk(head + tail)

    def wall_contacts(self, params: Params) -> list[int]:
        return [i for i in range(1, self.n + 1) if params.is_wall(self.positions[i])]


def walk_of(t: StandardBitableau) -> Walk:
    pos = [0]
    for c in t.components:
        pos.append(pos[-1] + (1 if c == 1 else -1))
    return Walk(tuple(pos))


def tableau_of(w: Walk) -> StandardBitableau:
    return StandardBitableau(tuple(1 if w.step(i) == 1 else 2 for i in range(1, w.n + 1)))


def tmax(lam: OneLineBipartition) -> StandardBitableau:
    """The distinguished tableau t^lambda."""
    mu = lam.mu
    rest = 1 if lam.lambda1 > lam.lambda2 else 2
    comps = []
    for i in range(1, lam.n + 1):
        if i <= 2 * mu:
            comps.append(2 if i % 2 else 1)
        else:
            comps.append(rest)
    return StandardBitableau(tuple(comps))


def residue_sequence(t: StandardBitableau, params: Params) -> tuple[Residue, ...]:
    """Residues read box by box: ``k + (c-1)`` in component 1, ``-k + (c-1)`` in component 2."""
    k, l = params.k, params.l
    return tuple(
        (k + col - 1) % l if comp == 1 else (-k + col - 1) % l for _, col, comp in t.boxes()
    )


def residue_sequence_from_walk(w: Walk, params: Params) -> tuple[Residue, ...]:
    """Residues via ``2 rho(i) = i - 2 + (w_i - w_{i-1})(w_i + m) (mod l)``."""
    out = []
    for i in range(1, w.n + 1):
        twice = i - 2 + w.step(i) * (w.positions[i] + params.m)
        out.append((twice * params.inv2) % params.l)
    return tuple(out)


def _step_residue(level: int, position: int, step: int, params: Params) -> Residue:
    return ((level - 2 + step * (position + params.m)) * params.inv2) % params.l


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")


def enumerate_std_n(n: int, bound: int = DEFAULT_BOUND) -> Iterator[StandardBitableau]:
    _check_bound(n, bound)
    for comps in product((1, 2), repeat=n):
        yield StandardBitableau(comps)


def enumerate_std(lam: OneLineBipartition, bound: int = DEFAULT_BOUND) -> Iterator[StandardBitableau]:
    n = lam.n
    _check_bound(n, bound)

    def rec(prefix: list[int], ones: int, twos: int):
        if ones == 0 and twos == 0:
            yield StandardBitableau(tuple(prefix))
            return
        if ones:
            prefix.append(1)
            yield from rec(prefix, ones - 1, twos)
            prefix.pop()
        if twos:
            prefix.append(2)
            yield from rec(prefix, ones, twos - 1)
            prefix.pop()

    yield from rec([], lam.lambda1, lam.lambda2)


def is_residue_sequence(seq: Sequence[Residue], params: Params) -> Optional[StandardBitableau]:
    """Return a standard bitableau with residue sequence ``seq``, or ``None``.

    Forward search over walk endpoints: at level i only the positions whose
    incoming step realises ``seq[i-1]`` survive.
    """
    l = params.l
    frontier: dict[int, None] = {0: None}
    parents: list[dict[int, int]] = []
    for level, target in enumerate(seq, start=1):
        target %= l
        nxt: dict[int, int] = {}
        for pos in frontier:
            for step in (1, -1):
                new = pos + step
                if new not in nxt and _step_residue(level, new, step, params) == target:
                    nxt[new] = pos
        if not nxt:
            return None
        parents.append(nxt)
        frontier = nxt  # type: ignore[assignment]
    if not parents:
        return StandardBitableau(())
    pos = next(iter(frontier))
    path = [pos]
    for back in reversed(parents):
        pos = back[pos]
        path.append(pos)
    return tableau_of(Walk(tuple(reversed(path))))


def equivalence_class(w: Walk, params: Params) -> frozenset[Walk]:
    """Closure of ``{w}`` under reflecting the tail of a walk at a wall contact."""
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for i in cur.wall_contacts(params):
            if i == cur.n:
                continue
            nxt = cur.reflect_after(i, cur.positions[i])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def hook_at(t: StandardBitableau, k: int) -> bool:
    """Whether the walk of ``t`` has a hook at position k (1 <= k < n)."""
    if not 1 <= k < t.n:
        raise ValueError(f"hook position {k} out of range for n={t.n}")
    w = walk_of(t).positions
    return w[k - 1] == w[k + 1]


def apply_transposition(t: StandardBitableau, k: int) -> Optional[StandardBitableau]:
    """``s_k t`` if it is standard, else ``None``."""
    if not hook_at(t, k):
        return None
    comps = list(t.components)
    comps[k - 1], comps[k] = comps[k], comps[k - 1]
    return StandardBitableau(tuple(comps))


def permute_sequence(seq: Sequence, k: int) -> tuple:
    """``s_k`` acting on a sequence by swapping coordinates k and k+1."""
    out = list(seq)
    out[k - 1], out[k] = out[k], out[k - 1]
    return tuple(out)


@dataclass(frozen=True)
class LambdaData:
    lam: OneLineBipartition
    a_lambda: int
    q_lambda: int
    r_lambda: int
    j_levels: tuple[int, ...]
    mu_lambda: OneLineBipartition
    t_lambda: StandardBitableau
    w: DihedralElement

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "a_lambda": self.a_lambda,
            "q_lambda": self.q_lambda,
            "r_lambda": self.r_lambda,
            "j_levels": list(self.j_levels),
            "mu_lambda": self.mu_lambda.to_json(),
            "t_lambda": str(self.t_lambda),
            "w": str(self.w),
        }


def a_lambda(lam: OneLineBipartition, params: Params) -> int:
    mu = lam.mu
    if mu == lam.lambda1:
        return 2 * mu + params.m
    return 2 * mu + params.l - params.m


def central_reflection_walk(lam: OneLineBipartition, params: Params) -> Walk:
    """The walk equivalent to that of t^lambda that stays in the closed fundamental alcove."""
    lo, hi = params.fundamental_alcove
    pos = list(walk_of(tmax(lam)).positions)
    for i in range(1, len(pos) - 1):
        if pos[i] in (lo, hi) and not lo <= pos[i + 1] <= hi:
            wall = pos[i]
            pos[i + 1 :] = [2 * wall - p for p in pos[i + 1 :]]
    return Walk(tuple(pos))


def lambda_data(lam: OneLineBipartition, params: Params) -> LambdaData:
    n = lam.n
    a = a_lambda(lam, params)
    if n <= a:
        raise InsideFundamentalAlcove(f"lambda={lam}: n={n} <= a_lambda={a}")
    if (n - a) % params.l == 0:
        raise OnWall(f"lambda={lam}: n = a_lambda (mod {params.l})")
    q, r = divmod(n - a, params.l)
    t_lam = tableau_of(central_reflection_walk(lam, params))
    return LambdaData(
        lam=lam,
        a_lambda=a,
        q_lambda=q,
        r_lambda=r,
        j_levels=tuple(a + j * params.l for j in range(q + 1)),
        mu_lambda=t_lam.shape,
        t_lambda=t_lam,
        w=alcove_of(lam.point, params),
    )


def valid_bipartitions(n: int, params: Params) -> list[OneLineBipartition]:
    """All lambda in Bip_1(n) satisfying the technical conditions."""
    out = []
    for l1 in range(n + 1):
        lam = OneLineBipartition(l1, n - l1)
        a = a_lambda(lam, params)
        if n > a and (n - a) % params.l:
            out.append(lam)
    return out
