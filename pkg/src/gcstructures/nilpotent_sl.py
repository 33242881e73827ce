"""Nilpotent orbits in ``sl_n``: standard triples and computational certificates.

``sl_n`` is realized as a structure-constant algebra on the basis
``H_1..H_{n-1}`` (``H_i = E_ii - E_{i+1,i+1}``) followed by the matrix units
``E_ij`` (``i != j``, row-major).  All basis matrices are real, so
coefficientwise conjugation is entrywise conjugation of matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from .chevalley import LieAlgebra, Subalgebra, conjugation
from .dirac_core import DiracPair, exact_form, is_gc
from .errors import InvalidPartition
from .exact import GQ, I, ONE, ZERO, Subspace, gq, nullspace

Matrix = List[List[GQ]]


# ---------------------------------------------------------------------------
# partitions


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        p = self.parts
        if not p or any((not isinstance(x, int)) or x <= 0 for x in p):
            raise InvalidPartition(f"parts must be positive integers: {p!r}")
        if list(p) != sorted(p, reverse=True):
            raise InvalidPartition(f"parts must be weakly decreasing: {p!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str | Sequence[int], n: int | None = None) -> "Partition":
        if isinstance(text, str):
            try:
                parts = tuple(int(x) for x in text.replace(" ", "").strip("()").split(",") if x)
            except ValueError as exc:
                raise InvalidPartition(f"cannot parse partition {text!r}") from exc
        else:
            parts = tuple(text)
        p = cls(parts)
        if n is not None and p.n != n:
            raise InvalidPartition(f"{parts} does not partition {n}")
        return p

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int) -> List[Partition]:
    """All partitions of ``n``, reverse-lexicographic."""
    out: List[Partition] = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(Partition(tuple(acc)))
            return
        for k in range(min(rem, cap), 0, -1):
            rec(rem - k, k, acc + [k])

    rec(n, n, [])
    return out


# ---------------------------------------------------------------------------
# sl_n as a structure-constant algebra


def _zero_matrix(n: int) -> Matrix:
    return [[ZERO] * n for _ in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = _zero_matrix(n)
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                aik = a[i][k]
                for j in range(n):
                    if b[k][j]:
                        out[i][j] = out[i][j] + aik * b[k][j]
    return out


def commutator(a: Matrix, b: Matrix) -> Matrix:
    ab, ba = matmul(a, b), matmul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


class SLn(LieAlgebra):
    """``sl_n(C)`` with coordinate maps to and from traceless matrices."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("sl_n needs n >= 2")
        self.n = n
        self.offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
        labels = [f"H{i + 1}" for i in range(n - 1)] + [f"E{i + 1}{j + 1}" for i, j in self.offdiag]
        self._pos = {ij: n - 1 + t for t, ij in enumerate(self.offdiag)}
        mats = [self._basis_matrix(a) for a in range(len(labels))]
        table = {}
        for a in range(len(labels)):
            for b in range(a + 1, len(labels)):
                c = self.coords(commutator(mats[a], mats[b]))
                terms = [(k, v) for k, v in enumerate(c) if v]
                if terms:
                    table[(a, b)] = terms
        super().__init__(labels, table)

    def _basis_matrix(self, a: int) -> Matrix:
        n = self.n
        m = _zero_matrix(n)
        if a < n - 1:
            m[a][a] = ONE
            m[a + 1][a + 1] = -ONE
        else:
            i, j = self.offdiag[a - (n - 1)]
            m[i][j] = ONE
        return m

    def coords(self, m: Matrix) -> List[GQ]:
        """Coordinates of a traceless matrix."""
        n = self.n
        tr = ZERO
        for i in range(n):
            tr = tr + m[i][i]
        if tr:
            raise ValueError("matrix is not traceless")
        out = [ZERO] * (n - 1 + len(self.offdiag))
        run = ZERO
        for i in range(n - 1):
            run = run + m[i][i]
            out[i] = run
        for (i, j), p in self._pos.items():
            out[p] = gq(m[i][j])
        return out

    def matrix(self, x: Sequence[GQ]) -> Matrix:
        n = self.n
        m = _zero_matrix(n)
        for i in range(n - 1):
            c = x[i]
            if c:
                m[i][i] = m[i][i] + c
                m[i + 1][i + 1] = m[i + 1][i + 1] - c
        for (i, j), p in self._pos.items():
            m[i][j] = x[p]
        return m

    def unit(self, i: int, j: int) -> List[GQ]:
        """Coordinates of the matrix unit ``E_{i,j}`` (1-based, ``i != j``)."""
        return self.basis_vector(self._pos[(i - 1, j - 1)])


@lru_cache(maxsize=None)
def sl(n: int) -> SLn:
    return SLn(n)


# ---------------------------------------------------------------------------
# standard triples


@dataclass(frozen=True)
class StandardTriple:
    n: int
    partition: Partition
    e: tuple
    h: tuple
    f: tuple

    def matrices(self) -> Tuple[Matrix, Matrix, Matrix]:
        alg = sl(self.n)
        return alg.matrix(self.e), alg.matrix(self.h), alg.matrix(self.f)

    def relations_hold(self) -> bool:
        alg = sl(self.n)
        e, h, f = list(self.e), list(self.h), list(self.f)
        two = gq(2)
        return (
            alg.bracket(e, f) == h
            and alg.bracket(h, e) == [two * x for x in e]
            and alg.bracket(h, f) == [-two * x for x in f]
        )


def triple_from_partition(n: int, lam) -> StandardTriple:
    """Block-Jordan ``e`` with ``h`` from the weight ladders; ``f`` solved exactly."""
    p = Partition.parse(lam, n) if not isinstance(lam, Partition) else lam
    if p.n != n:
        raise InvalidPartition(f"{p} does not partition {n}")
    alg = sl(n)
    E = _zero_matrix(n)
    H = _zero_matrix(n)
    s = 0
    for k in p.parts:
        for j in range(k - 1):
            E[s + j][s + j + 1] = ONE
        for j in range(k):
            H[s + j][s + j] = gq(k - 1 - 2 * j)
        s += k
    e, h = alg.coords(E), alg.coords(H)
    f = _solve_f(alg, e, h)
    return StandardTriple(n, p, tuple(e), tuple(h), tuple(f))


def _solve_f(alg: SLn, e, h) -> List[GQ]:
    """The unique ``f`` with ``[e,f] = h`` and ``[h,f] = -2f``."""
    d = alg.dim
    ade, adh = alg.ad(e), alg.ad(h)
    two = gq(2)
    rows = []
    for c in range(d):
        rows.append(list(ade[c]) + [h[c]])
    for c in range(d):
        r = list(adh[c])
        r[c] = r[c] + two
        rows.append(r + [ZERO])
    sol = nullspace(rows, d + 1)
    # want a null vector with last coordinate -1 (so that M f - h = 0)
    S = Subspace(sol, d + 1)
    cand = [r for r in S.rows if r[d]]
    if not cand:
        raise ArithmeticError("no f completes the triple")
    v = cand[-1]
    scale = -v[d].inverse()
    f = [x * scale for x in v[:d]]
    if alg.bracket(e, f) != list(h):
        raise ArithmeticError("failed to solve for f")
    return f


def jordan_type(alg: SLn, e: Sequence[GQ]) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    n = alg.n
    M = alg.matrix(e)
    ranks = [n]
    P = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for _ in range(n):
        P = matmul(P, M)
        ranks.append(Subspace(P, n).dim)
    # number of blocks of size >= k is rank(e^{k-1}) - rank(e^k)
    ge = [ranks[k - 1] - ranks[k] for k in range(1, n + 1)]
    parts = []
    for k in range(1, n + 1):
        exact = ge[k - 1] - (ge[k] if k < n else 0)
        parts.extend([k] * exact)
    return Partition(tuple(sorted(parts, reverse=True)))


# ---------------------------------------------------------------------------
# certificates


def centralizer_nilpotent(n: int, lam) -> Subalgebra:
    t = triple_from_partition(n, lam)
    return sl(n).centralizer([list(t.e)])


def certify_pair_centralizer_zero(n: int) -> bool:
    """Joint centralizer of the regular ``e`` and ``E_{n,1}`` is zero."""
    alg = sl(n)
    t = triple_from_partition(n, (n,))
    return alg.centralizer([list(t.e), alg.unit(n, 1)]).dim == 0


def certify_slice_generation(n: int, lam) -> bool:
    """``Z(e)`` together with ``e, h, f`` generates ``sl_n``."""
    alg = sl(n)
    t = triple_from_partition(n, lam)
    Z = alg.centralizer([list(t.e)])
    gens = Z.basis + [list(t.e), list(t.h), list(t.f)]
    return alg.generated_subalgebra(gens).dim == alg.dim


def imaginary_part(t: Sequence[GQ]) -> List[GQ]:
    """``(t - conj t) / 2i`` under entrywise conjugation."""
    two_i = 2 * I
    return [(x - x.conjugate()) / two_i for x in t]


@dataclass
class NilpotentGCParams:
    n: int
    partition: Partition
    centralizer: Subalgebra
    double_centralizer: Subalgebra

    @property
    def basis(self) -> List[List[GQ]]:
        return self.double_centralizer.basis

    def predicate(self, t: Sequence[GQ]) -> bool:
        """``Z(t_i) = Z(e)`` for ``t`` in ``Z(Z(e))``."""
        if not self.double_centralizer.space.contains(list(t)):
            raise ValueError("t is not in the double centralizer")
        alg = sl(self.n)
        ti = imaginary_part(t)
        return alg.centralizer([ti]).space == self.centralizer.space

    def realize(self, t: Sequence[GQ]) -> DiracPair:
        """``(g, eps = kappa(t, [,]))`` with isotropy ``Z(e)``."""
        alg = sl(self.n)
        K = alg.killing_matrix
        phi = [sum((gq(t[a]) * K[a][b] for a in range(alg.dim) if t[a]), ZERO) for b in range(alg.dim)]
        g = Subspace.full(alg.dim)
        return DiracPair(g, exact_form(alg, phi, g), self.centralizer.space)

    def is_gc_direct(self, t: Sequence[GQ]) -> bool:
        alg = sl(self.n)
        return is_gc(self.realize(t), conjugation(alg, "matrix_entrywise"))


def gc_params_nilpotent(n: int, lam) -> NilpotentGCParams:
    alg = sl(n)
    t = triple_from_partition(n, lam)
    Z = alg.centralizer([list(t.e)])
    ZZ = alg.centralizer(Z.basis)
    return NilpotentGCParams(n, t.partition, Z, ZZ)


# ---------------------------------------------------------------------------
# falsification probe

_GAUSS = [gq(1), gq(-1), gq(2), I, -I, gq(1) + I, gq(2) - I]


def _random_element(alg: SLn, rng: random.Random) -> List[GQ]:
    n = alg.n
    x = alg.zero()
    mode = rng.random()
    if mode < 0.5:
        # restrict to a random block upper-triangular shape so that proper
        # subalgebras show up
        cut = rng.randrange(1, n)
        pool = [a for a in range(alg.dim) if a < n - 1]
        pool += [alg._pos[(i, j)] for (i, j) in alg.offdiag if i < j or (i >= cut and j >= cut) or (i < cut and j < cut)]
    else:
        pool = list(range(alg.dim))
    for a in rng.sample(pool, min(len(pool), rng.randint(1, 3))):
        x[a] = rng.choice(_GAUSS)
    return x


def probe_prop_ij(n: int, lam, trials: int = 100, seed: int = 0) -> dict:
    """Random subalgebras ``E ⊇ Z(e)`` with ``E + Ē = g`` must equal ``g``."""
    alg = sl(n)
    t = triple_from_partition(n, lam)
    Z = alg.centralizer([list(t.e)])
    sigma = conjugation(alg, "matrix_entrywise")
    considered = proper = violations = 0
    examples = []
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        extra = [_random_element(alg, rng) for _ in range(rng.randint(1, 2))]
        E = alg.generated_subalgebra(Z.basis + extra).space
        if E.dim < alg.dim:
            proper += 1
        if (E + sigma.on_subspace(E)).dim != alg.dim:
            continue
        considered += 1
        if E.dim != alg.dim:
            violations += 1
            examples.append(trial)
    return {
        "n": n,
        "partition": str(t.partition),
        "trials": trials,
        "seed": seed,
        "proper_subalgebras": proper,
        "considered": considered,
        "violations": violations,
        "violating_trials": examples,
    }
