import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcstructures.errors import InvalidPartition
from gcstructures.exact import GQ, I, ONE, ZERO, gq
from gcstructures.nilpotent_sl import (
    Partition,
    centralizer_nilpotent,
    certify_pair_centralizer_zero,
    certify_slice_generation,
    commutator,
    gc_params_nilpotent,
    imaginary_part,
    jordan_type,
    matmul,
    partitions,
    probe_prop_ij,
    sl,
    triple_from_partition,
)


def conjugate_partition(parts):
    return [sum(1 for p in parts if p > i) for i in range(max(parts))]


def unit_matrix(n, pairs):
    m = [[ZERO] * n for _ in range(n)]
    for (i, j), c in pairs.items():
        m[i - 1][j - 1] = gq(c)
    return m


def test_partition_parsing():
    assert Partition.parse("2,1").parts == (2, 1)
    assert str(Partition.parse([3, 1])) == "(3,1)"
    with pytest.raises(InvalidPartition):
        Partition.parse([1, 3])
    with pytest.raises(InvalidPartition):
        Partition.parse("3,2", 4)
    with pytest.raises(InvalidPartition):
        Partition.parse("2,0")
    with pytest.raises(InvalidPartition):
        triple_from_partition(4, (3, 2))
    assert [len(partitions(n)) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_triple_examples():
    t = triple_from_partition(2, (2,))
    e, h, f = t.matrices()
    assert e == unit_matrix(2, {(1, 2): 1})
    assert h == unit_matrix(2, {(1, 1): 1, (2, 2): -1})
    assert f == unit_matrix(2, {(2, 1): 1})
    t = triple_from_partition(3, (3,))
    e, h, f = t.matrices()
    assert e == unit_matrix(3, {(1, 2): 1, (2, 3): 1})
    assert h == unit_matrix(3, {(1, 1): 2, (3, 3): -2})
    assert f == unit_matrix(3, {(2, 1): 2, (3, 2): 2})
    t = triple_from_partition(3, (2, 1))
    e, h, f = t.matrices()
    assert commutator(e, f) == h


@pytest.mark.parametrize("n", range(2, 9))
def test_triples_and_jordan_types(n):
    alg = sl(n)
    for p in partitions(n):
        t = triple_from_partition(n, p)
        assert t.relations_hold()
        e, h, f = t.matrices()
        # matrix-level check, independent of the coordinate bracket
        assert commutator(e, f) == h
        assert commutator(h, e) == [[2 * x for x in r] for r in e]
        assert jordan_type(alg, list(t.e)) == p
        power = e
        for _ in range(n - 1):
            power = matmul(power, e)
        assert all(x == 0 for r in power for x in r)


@pytest.mark.parametrize("n", range(2, 7))
def test_centralizer_dimension_formula(n):
    for p in partitions(n):
        d = centralizer_nilpotent(n, p).dim
        assert d == sum(c * c for c in conjugate_partition(p.parts)) - 1
        assert d >= n - 1
        assert (d == n - 1) == (p.parts == (n,))


def test_centralizer_examples():
    assert centralizer_nilpotent(3, (2, 1)).dim == 4
    assert centralizer_nilpotent(2, (1, 1)).dim == 3


@pytest.mark.parametrize("n", range(2, 7))
def test_pair_centralizer_certificate(n):
    assert certify_pair_centralizer_zero(n)


def test_pair_centralizer_nonregular_control():
    # with a non-regular e the joint centralizer with E_{n,1} need not vanish
    alg = sl(4)
    t = triple_from_partition(4, (2, 2))
    assert alg.centralizer([list(t.e), alg.unit(4, 1)]).dim > 0


@pytest.mark.parametrize("n", range(2, 6))
def test_slice_generation(n):
    for p in partitions(n):
        assert certify_slice_generation(n, p)


def test_gc_params_sl2():
    P = gc_params_nilpotent(2, (2,))
    alg = sl(2)
    e = alg.unit(1, 2)
    assert P.double_centralizer.space == alg.span([e])
    for a, b in itertools.product([-1, 0, 2], [-1, 0, 3]):
        t = [GQ(a, b) * x for x in e]
        assert P.predicate(t) == (b != 0)
        assert P.is_gc_direct(t) == P.predicate(t)


def test_gc_params_sl3_regular():
    P = gc_params_nilpotent(3, (3,))
    assert P.double_centralizer.space == P.centralizer.space
    assert len(P.basis) == 2
    z1, z2 = P.basis
    vals = [ZERO, ONE, I, GQ(1, -1)]
    for a, b in itertools.product(vals, repeat=2):
        t = [a * x + b * y for x, y in zip(z1, z2)]
        assert P.is_gc_direct(t) == P.predicate(t)


@pytest.mark.parametrize("n,lam", [(3, (2, 1)), (4, (2, 2)), (4, (3, 1))])
def test_predicate_matches_direct_defect(n, lam):
    P = gc_params_nilpotent(n, lam)
    vals = [ZERO, ONE, I, GQ(2, 1)]
    for coeffs in itertools.islice(itertools.product(vals, repeat=len(P.basis)), 64):
        t = [sum((c * b[k] for c, b in zip(coeffs, P.basis)), ZERO) for k in range(sl(n).dim)]
        assert P.is_gc_direct(t) == P.predicate(t)


def test_predicate_depends_on_imaginary_part_only():
    P = gc_params_nilpotent(3, (3,))
    z1, z2 = P.basis
    t = [GQ(1, 2) * x + GQ(3, -1) * y for x, y in zip(z1, z2)]
    real_shift = [GQ(5) * x - GQ(7) * y for x, y in zip(z1, z2)]
    assert P.predicate(t) == P.predicate([a + b for a, b in zip(t, real_shift)])
    assert not P.predicate([x.re for x in t])
    assert imaginary_part([GQ(1, 2)]) == [GQ(2)]


def test_predicate_rejects_outside_double_centralizer():
    P = gc_params_nilpotent(3, (2, 1))
    with pytest.raises(ValueError):
        P.predicate(sl(3).unit(2, 1))


@pytest.mark.parametrize("n,lam,trials", [(2, (2,), 100), (3, (2, 1), 100), (4, (4,), 50)])
def test_probe(n, lam, trials):
    rep = probe_prop_ij(n, lam, trials=trials, seed=1)
    assert rep["violations"] == 0 and rep["trials"] == trials
    assert rep["considered"] > 0
    assert rep == probe_prop_ij(n, lam, trials=trials, seed=1)


@given(st.integers(min_value=0, max_value=10_000))
def test_probe_is_deterministic(seed):
    assert probe_prop_ij(3, (3,), trials=3, seed=seed) == probe_prop_ij(3, (3,), trials=3, seed=seed)


def test_probe_finds_proper_subalgebras():
    # sanity: some random draws really are proper, so the filter does something
    rep = probe_prop_ij(4, (2, 2), trials=100, seed=0)
    assert rep["proper_subalgebras"] > 0
