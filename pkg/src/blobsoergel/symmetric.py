"""Permutations as reduced words, the hook algorithm for d(t), block
factorisation of d(t_lambda), and the KLR degree of a word.

Words are read as products ``s_{w[0]} s_{w[1]} ... s_{w[-1]}`` of simple
transpositions acting on the left; ``word[-1]`` is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import IndexOutOfRange
from .params import Params, Residue, cartan
from .tableaux import (
    LambdaData,
    OneLineBipartition,
    StandardBitableau,
    Walk,
    lambda_data,
    permute_sequence,
    tmax,
    walk_of,
)


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation, optionally with a reduced word."""

    one_line: tuple[int, ...]
    word: Optional[tuple[int, ...]] = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)), ())

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        perm = list(range(1, n + 1))
        # left multiplication by s_k swaps the values k and k+1
        for k in reversed(word):
            if not 1 <= k < n:
                raise IndexOutOfRange(f"generator s_{k} does not exist for n={n}")
            perm = [k + 1 if x == k else k if x == k + 1 else x for x in perm]
        return cls(tuple(perm), tuple(word))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)), word)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.one_line, start=1):
            inv[x - 1] = i
        word = tuple(reversed(self.word)) if self.word is not None else None
        return Permutation(tuple(inv), word)

    def length(self) -> int:
        p = self.one_line
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def to_json(self) -> dict:
        return {"one_line": list(self.one_line), "word": list(self.word or ())}


def is_321_avoiding(p: Permutation) -> bool:
    # a 3-2-1 pattern exists iff some entry has a larger value to its left and a smaller one to its right
    seq = p.one_line
    n = len(seq)
    prefix_max = [0] * n
    best = 0
    for i, x in enumerate(seq):
        prefix_max[i] = best
        best = max(best, x)
    suffix_min = n + 1
    for i in range(n - 1, -1, -1):
        if prefix_max[i] > seq[i] > suffix_min:
            return False
        suffix_min = min(suffix_min, seq[i])
    return True


def act_on_tableau(p: Permutation, t: StandardBitableau) -> StandardBitableau:
    """``p t``: relabel entry ``i`` of t as ``p(i)``. Raises if the result is not standard."""
    for row in t.rows():
        images = [p(i) for i in row]
        if images != sorted(images):
            raise ValueError("permutation does not produce a standard bitableau")
    comps = [0] * t.n
    for i, c in enumerate(t.components, start=1):
        comps[p(i) - 1] = c
    return StandardBitableau(tuple(comps))


def hook_word(start: Walk, target: Walk) -> tuple[int, ...]:
    """Hooks taking ``start`` to ``target``, always flipping the largest available position.

    Returned in product order: the last letter is the first hook made.
    """
    if start.n != target.n or start.positions[-1] != target.positions[-1]:
        raise ValueError("walks must have the same length and endpoint")
    cur = list(start.positions)
    goal = target.positions
    n = start.n
    applied: list[int] = []
    while True:
        for k in range(n - 1, 0, -1):
            if cur[k] == goal[k] or cur[k - 1] != cur[k + 1]:
                continue
            flipped = 2 * cur[k - 1] - cur[k]
            if abs(flipped - goal[k]) < abs(cur[k] - goal[k]):
                cur[k] = flipped
                applied.append(k)
                break
        else:
            break
    if tuple(cur) != goal:
        raise RuntimeError("hook algorithm stalled")  # unreachable for same-endpoint walks
    return tuple(reversed(applied))


def walk_area(a: Walk, b: Walk) -> int:
    return sum(abs(x - y) for x, y in zip(a.positions, b.positions))


@lru_cache(maxsize=None)
def d_of(t: StandardBitableau) -> Permutation:
    """The permutation with ``t = d(t) t^{Shape(t)}`` together with a reduced word."""
    word = hook_word(walk_of(tmax(t.shape)), walk_of(t))
    return Permutation.from_word(word, t.n)


def d_of_direct(t: StandardBitableau) -> Permutation:
    """d(t) computed by matching entries box by box, without any word."""
    base = tmax(t.shape)
    perm = [0] * t.n
    for row_base, row_t in zip(base.rows(), t.rows()):
        for a, b in zip(row_base, row_t):
            perm[a - 1] = b
    return Permutation(tuple(perm))


def klr_degree(word: Sequence[int], residues: Sequence[Residue], params: Params) -> int:
    """Degree of ``psi_{word[0]} ... psi_{word[-1]} e(residues)``."""
    n = len(residues)
    seq = tuple(residues)
    total = 0
    for r in reversed(word):
        if not 1 <= r < n:
            raise IndexOutOfRange(f"psi_{r} does not exist for n={n}")
        total -= cartan(seq[r - 1], seq[r], params.l)
        seq = permute_sequence(seq, r)
    return total


@dataclass(frozen=True)
class Block:
    """One commuting factor ``d(B_a)`` of d(t_lambda) in staircase form."""

    level: int
    rows: tuple[tuple[int, int], ...]  # (k_i, j_i) for the factor s_{k_i} s_{k_i - 1} ... s_{j_i}

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(g for k, j in self.rows for g in range(k, j - 1, -1))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)

    def to_json(self) -> dict:
        return {"level": self.level, "rows": [list(r) for r in self.rows], "word": list(self.word)}


def block_supports(data: LambdaData) -> list[tuple[int, ...]]:
    """Maximal runs of levels where the walks of t^{mu_lambda} and t_lambda differ."""
    a = walk_of(tmax(data.mu_lambda)).positions
    b = walk_of(data.t_lambda).positions
    runs: list[tuple[int, ...]] = []
    cur: list[int] = []
    for i in range(1, len(a)):
        if a[i] != b[i]:
            cur.append(i)
        elif cur:
            runs.append(tuple(cur))
            cur = []
    if cur:
        runs.append(tuple(cur))
    return runs


def block_decomposition(lam: OneLineBipartition, params: Params) -> list[Block]:
    """Staircase factors of d(t_lambda), one per wall-contact level of t^lambda."""
    data = lambda_data(lam, params)
    n = lam.n
    runs = block_supports(data)
    if len(runs) != len(data.j_levels):
        raise RuntimeError(
            f"expected {len(data.j_levels)} regions between the walks, found {len(runs)}"
        )
    blocks = []
    for level, run in zip(data.j_levels, runs):
        k, j = level, run[0]
        rows = []
        while j <= k and k <= n - 1:
            rows.append((k, j))
            k, j = k + 1, j + 2
        blocks.append(Block(level=level, rows=tuple(rows)))
    return blocks
