"""Acceptance gate: eleven exact checks, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py`` for a plain report.
"""

from __future__ import annotations

import random
import sys
import time
from collections import defaultdict
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from blobsoergel.bridge import decomposition_matrix, verify_bijection  # noqa: E402
from blobsoergel.cellular import central_element_degree  # noqa: E402
from blobsoergel.dihedral import DihedralElement, alcove_of, elements_up_to, kl_h, same_orbit  # noqa: E402
from blobsoergel.dotline import dimension_oracle, normal_form, ordering_annihilation_check, span_dimension  # noqa: E402
from blobsoergel.grid import staircase_problems, wall_claim_violations  # noqa: E402
from blobsoergel.laurent import LaurentPoly  # noqa: E402
from blobsoergel.lightleaves import dim_A, enumerate_leaves, graded_dim_A, max_degree_double_leaves, top_multiset  # noqa: E402
from blobsoergel.params import validate_params  # noqa: E402
from blobsoergel.symmetric import (  # noqa: E402
    Permutation,
    act_on_tableau,
    block_decomposition,
    d_of,
    is_321_avoiding,
)
from blobsoergel.tableaux import (  # noqa: E402
    OneLineBipartition as B,
    StandardBitableau,
    equivalence_class,
    is_residue_sequence,
    lambda_data,
    residue_sequence,
    residue_sequence_from_walk,
    tmax,
    valid_bipartitions,
    walk_of,
)
from oracles import inversions, kl_basis, random_order_reduce, residue_classes  # noqa: E402

GRID = ((5, 2), (5, 3), (7, 2), (7, 3), (7, 4), (9, 2))
MAX_N = 40
MAX_LENGTH = 12

I_6_3 = (4, 1, 0, 2, 1, 3, 4, 0, 1)
I_18_3 = (4, 1, 0, 2, 1, 3, 4, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 0, 1, 2, 3)


def _grid_cells(max_n=MAX_N):
    for l, m in GRID:
        p = validate_params(l, m)
        for n in range(1, max_n + 1):
            for lam in valid_bipartitions(n, p):
                yield p, lam


def criterion_1():
    p = validate_params(5, 2)
    ok = residue_sequence(tmax(B(6, 3)), p) == I_6_3 and residue_sequence(tmax(B(18, 3)), p) == I_18_3
    best = float("inf")
    for _ in range(20):
        start = time.perf_counter()
        residue_sequence(tmax(B(6, 3)), p)
        residue_sequence(tmax(B(18, 3)), p)
        best = min(best, time.perf_counter() - start)
    return ok and best < 1e-3, f"golden sequences match, {best * 1e3:.3f} ms"


def criterion_2():
    start = time.perf_counter()
    checked = 0
    for l, m in GRID:
        p = validate_params(l, m)
        for n in range(1, 13):
            groups = defaultdict(set)
            for comps in product((1, 2), repeat=n):
                t = StandardBitableau(comps)
                w = walk_of(t)
                seq = residue_sequence(t, p)
                if seq != residue_sequence_from_walk(w, p):
                    return False, f"box/walk residues disagree on {t} at l={l}, m={m}"
                groups[seq].add(w)
                checked += 1
            for walks in groups.values():
                if equivalence_class(next(iter(walks)), p) != walks:
                    return False, f"residue class differs from the walk class at l={l}, m={m}, n={n}"
    elapsed = time.perf_counter() - start
    return elapsed < 30, f"{checked} tableaux, {elapsed:.1f} s"


def _has_pattern(seq, p):
    l, k = p.l, p.k
    if len(seq) >= 2 and (seq[0], seq[1]) in ((k % l, (k - 1) % l), ((-k) % l, (-k - 1) % l)):
        return True
    for r in range(len(seq) - 2):
        a, b, c = seq[r : r + 3]
        if a == b == (c + 1) % l or b == c == (a - 1) % l:
            return True
    return False


def criterion_3():
    rng = random.Random(3)
    rejected = 0
    for l, m in GRID:
        p = validate_params(l, m)
        for n in range(1, 13):
            real = residue_classes(n, p)
            if any(_has_pattern(seq, p) for seq in real):
                return False, f"a genuine residue sequence carries a forbidden pattern (l={l}, m={m}, n={n})"
            for seq in real:
                if is_residue_sequence(seq, p) is None:
                    return False, f"{seq} rejected although it is a residue sequence"
            # sequences forced to contain each pattern
            for _ in range(150):
                seq = [rng.randrange(l) for _ in range(n)]
                kind = rng.randrange(4)
                if kind < 2 and n >= 3:
                    r = rng.randrange(n - 2)
                    c = rng.randrange(l)
                    seq[r : r + 3] = [(c + 1) % l, (c + 1) % l, c] if kind == 0 else [(c + 1) % l, c, c]
                elif kind >= 2 and n >= 2:
                    k = p.k if kind == 2 else -p.k
                    seq[0:2] = [k % l, (k - 1) % l]
                else:
                    continue
                seq = tuple(seq)
                if is_residue_sequence(seq, p) is not None or seq in real:
                    return False, f"{seq} carries a forbidden pattern but was accepted"
                rejected += 1
            # single-entry mutations of genuine sequences: search agrees with enumeration
            pool = sorted(real)
            for _ in range(150):
                seq = list(rng.choice(pool))
                seq[rng.randrange(n)] = rng.randrange(l)
                seq = tuple(seq)
                if (is_residue_sequence(seq, p) is not None) != (seq in real):
                    return False, f"search and enumeration disagree on {seq}"
    return True, f"{rejected} pattern sequences rejected; enumeration agrees for n <= 12"


def criterion_4():
    t = StandardBitableau.from_rows((5, 7), (1, 2, 3, 4, 6))
    if d_of(t) != Permutation.from_word((4, 3, 2, 6, 5, 4), 7):
        return False, "d(t) differs from s4 s3 s2 s6 s5 s4"
    word15 = (6, 5, 7, 4, 6, 8, 3, 5, 7, 2, 4, 6, 1, 3, 5)
    perm15 = Permutation.from_word(word15, 9)
    if d_of(act_on_tableau(perm15, tmax(B(6, 3)))) != perm15:
        return False, "fifteen-letter example not reproduced"
    count = 0
    for n in range(1, 10):
        for comps in product((1, 2), repeat=n):
            t = StandardBitableau(comps)
            perm = d_of(t)
            if len(perm.word) != inversions(perm.one_line) or not is_321_avoiding(perm):
                return False, f"output for {t} not reduced or not 321-avoiding"
            count += 1
    return True, f"both examples reproduced; {count} tableaux reduced and 321-avoiding"


def criterion_5():
    p = validate_params(7, 3)
    blocks = block_decomposition(B(23, 2), p)
    expected = [
        (8, 7, 6, 5, 9, 8, 7, 10, 9, 11),
        (15, 14, 16),
        (22, 21, 20, 19, 23, 22, 21, 24, 23),
    ]
    if [Permutation.from_word(b.word, 25) for b in blocks] != [Permutation.from_word(w, 25) for w in expected]:
        return False, "block words differ from the worked example"
    cells = 0
    for p, lam in _grid_cells():
        problems = staircase_problems(block_decomposition(lam, p), lambda_data(lam, p), p)
        if problems:
            return False, f"l={p.l}, m={p.m}, lambda={lam}: {problems[0]}"
        cells += 1
    return True, f"example reproduced; staircase, commutation and product hold on {cells} cells"


def criterion_6():
    start = time.perf_counter()
    for n in range(1, 7):
        if dimension_oracle(n) != 2**n or span_dimension(n) != 2**n:
            return False, f"dimension mismatch at n={n}"
    for n in range(1, 11):
        if not ordering_annihilation_check(n):
            return False, f"annihilation ordering fails at n={n}"
    rng = random.Random(6)
    cases = 0
    while cases < 10_000:
        n = rng.randint(1, 8)
        exps = tuple(rng.randint(0, 3) for _ in range(n))
        if sum(exps) > n + 2:
            continue
        if random_order_reduce(exps, rng) != normal_form(exps).terms:
            return False, f"random-order reduction of {exps} differs"
        cases += 1
    elapsed = time.perf_counter() - start
    return elapsed < 60, f"2^n certified, {cases} confluence cases, {elapsed:.1f} s"


def criterion_7():
    for w in elements_up_to(12):
        if sum(1 for _ in enumerate_leaves(w)) != 2**w.length:
            return False, f"wrong number of leaves for {w}"
    for w in (DihedralElement(3, "s"), DihedralElement(3, "t")):
        if dim_A(w) != 12 or sorted(top_multiset(w).values()) != [1, 1, 1, 1, 2, 2]:
            return False, f"dim A_{w} is not 12 with tops (2,2,1,1,1,1)"
    for w in elements_up_to(16):
        tops = max_degree_double_leaves(w)
        if len(tops) != 1 or tops[0].degree != 2 * w.length:
            return False, f"top-degree double leaf of {w} not unique"
    return True, "leaf counts, dim 12 for length 3, unique degree-2l(w) double leaf up to length 16"


def criterion_8():
    start = time.perf_counter()
    cells = 0
    orientations = set()
    for p, lam in _grid_cells():
        if lambda_data(lam, p).w.length > MAX_LENGTH:
            continue
        report = verify_bijection(lam, p)
        if not report.ok:
            return False, f"l={p.l}, m={p.m}, lambda={lam}: {report.mismatches[:1]}"
        orientations.add(lam.lambda1 > lam.lambda2)
        cells += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < 300 and orientations == {True, False}
    return ok, f"{cells} cells, graded dimensions equal, {elapsed:.1f} s"


def criterion_9():
    cells = 0
    for p, lam in _grid_cells():
        bad = wall_claim_violations(lam, p)
        if bad:
            return False, f"l={p.l}, m={p.m}, lambda={lam}: r={bad[0]}"
        cells += 1
    return True, f"{cells} cells"


def criterion_10():
    cells = 0
    for p, lam in _grid_cells():
        deg = central_element_degree(lam, p)
        q = lambda_data(lam, p).q_lambda
        if deg != 2 * (q + 1):
            return False, f"l={p.l}, m={p.m}, lambda={lam}: degree {deg}, expected {2 * (q + 1)}"
        cells += 1
    return True, f"{cells} cells"


def criterion_11():
    basis = kl_basis(8)
    els = list(elements_up_to(8))
    for x, y in product(els, repeat=2):
        if kl_h(x, y) != basis[y].get(x, LaurentPoly.zero()):
            return False, f"h_{{{x},{y}}} disagrees with the recursion"
    for l, m in GRID:
        p = validate_params(l, m)
        for n in range(1, 21):
            mat = decomposition_matrix(n, p)
            for a in mat.labels:
                for b in mat.labels:
                    entry = mat.entry(a, b)
                    if entry is None:
                        continue
                    if a == b and entry != 1:
                        return False, f"diagonal entry at {a} is {entry}"
                    if not same_orbit(a.point, b.point, p) and not entry.is_zero():
                        return False, f"off-orbit entry at ({a}, {b})"
                    if a != b and not entry.is_zero():
                        if alcove_of(a.point, p).length >= alcove_of(b.point, p).length:
                            return False, f"not unitriangular at ({a}, {b})"
    return True, f"{len(els) ** 2} KL pairs; matrices for n <= 20 on the grid"


CRITERIA = {
    1: ("residue sequence golden values", criterion_1),
    2: ("box/walk residues and class equivalence", criterion_2),
    3: ("forbidden residue patterns", criterion_3),
    4: ("reduced words for d(t)", criterion_4),
    5: ("block factorisation", criterion_5),
    6: ("Dot-Line dimension", criterion_6),
    7: ("light leaves", criterion_7),
    8: ("graded bijection", criterion_8),
    9: ("wall-contact claim", criterion_9),
    10: ("central element degree", criterion_10),
    11: ("KL closed form and decomposition matrix", criterion_11),
}


def _line(number: int, passed: bool, detail: str) -> str:
    return f"criterion {number:>2} [{'PASS' if passed else 'FAIL'}] {CRITERIA[number][0]}: {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    from conftest import record_acceptance

    passed, detail = CRITERIA[number][1]()
    line = _line(number, passed, detail)
    print(line)
    record_acceptance(line)
    assert passed, line


def main() -> int:
    failures = 0
    for number, (_, fn) in sorted(CRITERIA.items()):
        passed, detail = fn()
        print(_line(number, passed, detail), flush=True)
        failures += not passed
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
