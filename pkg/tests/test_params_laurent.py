import pytest
from hypothesis import given, strategies as st

from blobsoergel.errors import EvenL, ForbiddenCongruence, MOutOfRange
from blobsoergel.laurent import LaurentPoly, v
from blobsoergel.params import Params, cartan, validate_params


def test_solved_k():
    assert validate_params(5, 2) == Params(5, 2, 1)
    assert validate_params(7, 3) == Params(7, 3, 5)


@pytest.mark.parametrize(
    "l, m, exc",
    [(4, 2, EvenL), (5, 0, MOutOfRange), (5, 5, MOutOfRange), (5, 1, ForbiddenCongruence), (5, 4, ForbiddenCongruence)],
)
def test_rejections(l, m, exc):
    with pytest.raises(exc):
        validate_params(l, m)


def test_k_unique_for_all_small_params():
    for l in range(3, 31, 2):
        for m in range(2, l - 1):
            p = validate_params(l, m)
            assert [k for k in range(l) if (2 * k - m) % l == 0] == [p.k]


def test_cartan():
    assert cartan(3, 3, 5) == 2
    assert cartan(4, 0, 5) == -1
    assert cartan(0, 4, 5) == -1
    assert cartan(1, 3, 5) == 0


def test_wall_positions(p52):
    assert [x for x in range(-10, 11) if p52.is_wall(x)] == [-7, -2, 3, 8]
    assert p52.fundamental_alcove == (-2, 3)


def test_laurent_examples():
    assert (v + LaurentPoly.monomial(-1)) * v == v**2 + 1
    assert (v**3).eval_at_one() == 1
    p = v**3 + 0 * v
    assert p.coeffs == {3: 1}
    assert (v**2 + 1).to_json() == [[0, 1], [2, 1]]
    assert LaurentPoly.from_json([[0, 1], [2, 1]]) == v**2 + 1
    assert str(v**2 + 1) == "v^2 + 1"
    assert (v - v).is_zero()


def test_bar():
    assert (v**2 + LaurentPoly.monomial(-1)).bar() == LaurentPoly.monomial(-2) + v


polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * LaurentPoly.one() == a
    assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()
    assert 0 not in a.coeffs.values()
