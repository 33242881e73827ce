from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcstructures.exact import GQ, I, ONE, ZERO, Subspace, gq, nullspace, rank, rref

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gqs = st.builds(GQ, small, small)


def as_pair(z):
    return (z.re, z.im)


def mul_pairs(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


@given(gqs, gqs)
def test_arithmetic_matches_fraction_pairs(x, y):
    px, py = as_pair(x), as_pair(y)
    assert as_pair(x + y) == (px[0] + py[0], px[1] + py[1])
    assert as_pair(x - y) == (px[0] - py[0], px[1] - py[1])
    assert as_pair(x * y) == mul_pairs(px, py)
    if y:
        assert (x / y) * y == x


@given(gqs)
def test_conjugate_and_inverse(x):
    assert x.conjugate().conjugate() == x
    assert (x * x.conjugate()).is_real
    if x:
        assert x * x.inverse() == ONE
    else:
        with pytest.raises(ZeroDivisionError):
            x.inverse()


@given(gqs)
def test_string_roundtrip(x):
    assert GQ.from_str(str(x)) == x


def test_normal_form_and_hash():
    assert GQ(Fraction(2, 4), 0) == GQ(Fraction(1, 2))
    assert hash(GQ(3)) == hash(3)
    assert hash(GQ(Fraction(1, 3))) == hash(Fraction(1, 3))
    assert str(I) == "i" and str(-I) == "-i"
    assert str(GQ(Fraction(1, 2), 3)) == "1/2+3i"
    assert GQ(0, 0) == ZERO and not ZERO


def test_gq_rejects_floats():
    with pytest.raises(TypeError):
        gq(0.5)
    with pytest.raises(ValueError):
        gq(0.5 + 1j)
    assert gq(2 + 3j) == GQ(2, 3)


ints = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return c, [[GQ(draw(ints), draw(ints)) for _ in range(c)] for _ in range(r)]


@given(matrices())
def test_rank_nullity_and_kernel(mc):
    c, m = mc
    ker = nullspace(m, c)
    assert rank(m, c) + len(ker) == c
    for v in ker:
        for row in m:
            assert sum((a * b for a, b in zip(row, v)), ZERO) == 0


@given(matrices())
def test_rref_is_canonical(mc):
    c, m = mc
    red, piv = rref(m, c)
    for k, p in enumerate(piv):
        assert red[k][p] == ONE
        assert all(red[j][p] == 0 for j in range(len(red)) if j != k)
    # scaling and reordering rows gives the same subspace
    shuffled = [[x * GQ(2, 1) for x in r] for r in reversed(m)]
    assert Subspace(m, c) == Subspace(shuffled, c)


@given(matrices(), matrices())
def test_sum_and_intersection_dimensions(a, b):
    c = min(a[0], b[0])
    U = Subspace([r[:c] for r in a[1]], c)
    V = Subspace([r[:c] for r in b[1]], c)
    W = U & V
    assert (U + V).dim + W.dim == U.dim + V.dim
    assert W <= U and W <= V
    assert U <= U + V


def test_annihilator_and_coords():
    U = Subspace([[ONE, gq(2), ZERO], [ZERO, ZERO, ONE]], 3)
    ann = U.annihilator()
    assert ann.dim == 1
    assert ann.rows[0] == [ONE, GQ(Fraction(-1, 2)), ZERO]
    v = [gq(3), gq(6), gq(5)]
    assert U.coords(v) == [gq(3), gq(5)]
    assert U.combine(U.coords(v)) == v
    with pytest.raises(ValueError):
        U.coords([ONE, ZERO, ZERO])


def test_serialize_roundtrip():
    U = Subspace([[ONE, I, gq("1/3")]], 3)
    assert Subspace.deserialize(U.serialize(), 3) == U
    assert U.conjugate().rows[0][1] == -I
