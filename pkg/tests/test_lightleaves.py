from collections import Counter

import pytest

from blobsoergel.dihedral import DihedralElement, bruhat_ideal, bruhat_leq, elements_up_to
from blobsoergel.errors import BoundExceeded
from blobsoergel.laurent import LaurentPoly, v
from blobsoergel.lightleaves import (
    ALT_STEP_DEGREE,
    dim_A,
    double_leaves,
    enumerate_leaves,
    graded_dim_A,
    leaf_from_bits,
    leaf_polynomials,
    leaves_by_top,
    max_degree_double_leaves,
    top_multiset,
)
from oracles import standard_expansion

D = DihedralElement.parse


def test_small_words():
    leaves = list(enumerate_leaves(D("s")))
    assert {(str(l), str(l.top), l.degree) for l in leaves} == {("U0", "e", 1), ("U1", "s", 0)}
    assert graded_dim_A(D("s")) == 1 + v**2
    (empty,) = enumerate_leaves(D("e"))
    assert empty.steps == () and empty.top == D("e") and empty.degree == 0
    assert graded_dim_A(D("e")) == 1


def test_sts():
    w = D("sts")
    assert Counter({str(x): c for x, c in top_multiset(w).items()}) == Counter(
        {"e": 2, "s": 2, "t": 1, "st": 1, "ts": 1, "sts": 1}
    )
    assert dim_A(w) == 12
    assert len(list(double_leaves(w))) == 12
    assert graded_dim_A(w) == 2 + 5 * v**2 + 4 * v**4 + v**6
    assert sorted(l.degree for l in leaves_by_top(w, D("e"))) == [1, 3]
    assert [l.degree for l in leaves_by_top(w, w)] == [0]
    assert leaves_by_top(w, D("tsts")) == []
    assert str(leaf_from_bits(w, (1, 0, 1))) == "U1 U0 D1"


def test_leaf_polynomials_match_hecke_expansion():
    for w in elements_up_to(9):
        expansion = standard_expansion(w.word)
        polys = leaf_polynomials(w)
        assert {x: p for x, p in polys.items()} == expansion, w


def test_alternative_table_gives_odd_degrees():
    odd = graded_dim_A(D("sts"), degrees=ALT_STEP_DEGREE)
    assert any(e % 2 for e, _ in odd.items())


def test_tops_cover_ideal():
    for w in elements_up_to(12):
        tops = top_multiset(w)
        assert sum(tops.values()) == 2 ** w.length
        assert all(bruhat_leq(x, w) for x in tops)
        assert set(tops) == set(bruhat_ideal(w))


def test_graded_dim_consistency():
    for w in elements_up_to(8):
        g = graded_dim_A(w)
        assert g.eval_at_one() == dim_A(w) == len(list(double_leaves(w)))
        assert g.max_degree() == 2 * w.length and g.coeff(2 * w.length) == 1


def test_unique_top_degree_double_leaf():
    for w in elements_up_to(12):
        (top,) = max_degree_double_leaves(w)
        assert top.degree == 2 * w.length
        assert all(s == "U0" for s in top.lower.steps)


def test_bound():
    with pytest.raises(BoundExceeded):
        next(enumerate_leaves(DihedralElement(25, "s")))
    assert LaurentPoly.zero() != graded_dim_A(DihedralElement(3, "t"))
