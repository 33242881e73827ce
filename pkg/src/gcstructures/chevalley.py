"""Complex semisimple Lie algebras over the Gaussian rationals.

:class:`LieAlgebra` is a structure-constant algebra with brackets, adjoint
matrices, the Killing form, centralizers and generated subalgebras.
:class:`ChevalleyAlgebra` specializes it to a Chevalley basis
``h_1..h_r, e_alpha`` (roots in canonical order), with structure-constant
signs fixed by the extraspecial-pair rule: for every positive non-simple
root the extraspecial pair gets ``N = +(p + 1)``.

Elements are plain lists of :class:`~gcstructures.exact.GQ`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Sequence

from .errors import DimensionMismatch, NotClosed, NotSubalgebra, UnsupportedKind
from .exact import GQ, ONE, ZERO, Subspace, gq, nullspace
from .rootsys import RootSubset, RootSystem, coroot, is_closed, root_covector

CONVENTION_VERSION = 1

Vector = List[GQ]


class LieAlgebra:
    """Finite-dimensional Lie algebra given by integer (or exact) structure constants.

    Parameters
    ----------
    labels
        Names of the basis vectors.
    table
        ``table[(a, b)] = [(c, coeff), ...]`` meaning
        ``[b_a, b_b] = sum coeff * b_c``.  Only ``a < b`` is needed; the
        other order is filled in by antisymmetry.
    """

    def __init__(self, labels: Sequence[str], table: Dict[tuple, list]):
        self.labels = list(labels)
        self.dim = len(self.labels)
        n = self.dim
        sc: list[list[list]] = [[[] for _ in range(n)] for _ in range(n)]
        for (a, b), terms in table.items():
            clean = [(c, gq(v)) for c, v in terms if v]
            if not clean:
                continue
            if a == b:
                raise ValueError("[x, x] must vanish")
            sc[a][b] = clean
            sc[b][a] = [(c, -v) for c, v in clean]
        self._sc = sc
        self.label_index = {s: k for k, s in enumerate(self.labels)}

    # -- elements --------------------------------------------------------
    def zero(self) -> Vector:
        return [ZERO] * self.dim

    def basis_vector(self, a: int | str) -> Vector:
        if isinstance(a, str):
            a = self.label_index[a]
        v = [ZERO] * self.dim
        v[a] = ONE
        return v

    def element(self, coeffs: dict) -> Vector:
        """Element from ``{label_or_index: scalar}``."""
        v = [ZERO] * self.dim
        for key, val in coeffs.items():
            a = self.label_index[key] if isinstance(key, str) else key
            v[a] = v[a] + gq(val)
        return v

    def _check(self, *xs) -> None:
        for x in xs:
            if len(x) != self.dim:
                raise DimensionMismatch(f"element of length {len(x)} in a {self.dim}-dimensional algebra")

    def describe(self, x: Sequence[GQ]) -> str:
        parts = [f"({c})*{self.labels[a]}" for a, c in enumerate(x) if c]
        return " + ".join(parts) if parts else "0"

    # -- bracket ---------------------------------------------------------
    def bracket(self, x: Sequence[GQ], y: Sequence[GQ]) -> Vector:
        self._check(x, y)
        out = [ZERO] * self.dim
        xs = [(a, c) for a, c in enumerate(x) if c]
        ys = [(b, c) for b, c in enumerate(y) if c]
        sc = self._sc
        for a, ca in xs:
            row = sc[a]
            for b, cb in ys:
                terms = row[b]
                if terms:
                    f = ca * cb
                    for c, v in terms:
                        out[c] = out[c] + f * v
        return out

    def basis_bracket(self, a: int, b: int) -> list:
        """``[(c, coeff)]`` for ``[b_a, b_b]``."""
        return list(self._sc[a][b])

    def ad(self, x: Sequence[GQ]) -> List[Vector]:
        """Matrix of ``ad_x``: ``M[c][b]`` is the ``b_c`` coefficient of ``[x, b_b]``."""
        self._check(x)
        n = self.dim
        m = [[ZERO] * n for _ in range(n)]
        for a, ca in enumerate(x):
            if not ca:
                continue
            row = self._sc[a]
            for b in range(n):
                for c, v in row[b]:
                    m[c][b] = m[c][b] + ca * v
        return m

    # -- Killing form ----------------------------------------------------
    @cached_property
    def killing_matrix(self) -> List[Vector]:
        """``K[a][b] = tr(ad b_a ad b_b)``."""
        n = self.dim
        sc = self._sc
        k = [[ZERO] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                tot = ZERO
                # tr(ad_a ad_b) = sum_d coefficient of b_d in [b_a, [b_b, b_d]]
                for d in range(n):
                    for c, v in sc[b][d]:
                        for e, w in sc[a][c]:
                            if e == d:
                                tot = tot + v * w
                k[a][b] = k[b][a] = tot
        return k

    def killing_form(self, x: Sequence[GQ], y: Sequence[GQ]) -> GQ:
        self._check(x, y)
        km = self.killing_matrix
        tot = ZERO
        for a, ca in enumerate(x):
            if ca:
                row = km[a]
                for b, cb in enumerate(y):
                    if cb and row[b]:
                        tot = tot + ca * cb * row[b]
        return tot

    # -- subspaces -------------------------------------------------------
    def span(self, vectors: Iterable[Sequence[GQ]]) -> Subspace:
        return Subspace(vectors, self.dim)

    def is_subalgebra(self, V: Subspace) -> bool:
        rows = V.rows
        for i, x in enumerate(rows):
            for y in rows[i + 1 :]:
                if not V.contains(self.bracket(x, y)):
                    return False
        return True

    def subalgebra(self, V: Subspace) -> "Subalgebra":
        if not self.is_subalgebra(V):
            raise NotSubalgebra("subspace is not closed under the bracket")
        return Subalgebra(self, V)

    def centralizer(self, elements: Iterable[Sequence[GQ]]) -> "Subalgebra":
        """``{y : [x, y] = 0 for all x}`` as an exact kernel."""
        rows: list = []
        for x in elements:
            rows.extend(r for r in self.ad(x) if any(r))
        return Subalgebra(self, Subspace(nullspace(rows, self.dim), self.dim))

    def generated_subalgebra(self, gens: Iterable[Sequence[GQ]]) -> "Subalgebra":
        """Smallest bracket-closed subspace containing ``gens``."""
        V = Subspace(gens, self.dim)
        while True:
            rows = V.rows
            new = []
            W = V
            for i, x in enumerate(rows):
                for y in rows[i + 1 :]:
                    z = self.bracket(x, y)
                    if any(z) and not W.contains(z):
                        new.append(z)
                        W = Subspace(W.rows + [z], self.dim)
            if not new:
                return Subalgebra(self, V)
            V = W


@dataclass(frozen=True)
class Subalgebra:
    """A subalgebra, held as a canonical echelon basis."""

    parent: LieAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> List[Vector]:
        return self.space.rows

    def __contains__(self, x) -> bool:
        return self.space.contains(x)

    def __eq__(self, other):
        return isinstance(other, Subalgebra) and self.space == other.space

    def __hash__(self):
        return hash(self.space)


# ---------------------------------------------------------------------------
# Chevalley basis


def _structure_constants(rs: RootSystem) -> Dict[tuple, int]:
    """``N[(i, j)]`` for all root pairs with ``root_i + root_j`` a root."""
    roots = rs.roots
    pos = set(rs.positive_indices)
    norm = [rs.norm2(k) for k in range(len(roots))]
    table: Dict[tuple, int] = {}

    def p_value(a: int, b: int) -> int:
        """Largest p with ``root_b - p * root_a`` a root."""
        p = 0
        cur = list(roots[b])
        while True:
            cur = [x - y for x, y in zip(cur, roots[a])]
            if tuple(cur) in rs.index:
                p += 1
            else:
                return p

    def N(i: int, j: int) -> Fraction:
        k = rs.add(i, j)
        if k is None:
            return Fraction(0)
        if i in pos and j in pos:
            if i < j:
                return Fraction(table[(i, j)])
            return -N(j, i)
        if i not in pos and j not in pos:
            return -N(rs.neg[i], rs.neg[j])
        z = rs.neg[k]
        # i + j + z = 0, so N_ij/(z,z) = N_jz/(i,i) = N_zi/(j,j)
        if (i in pos) == (z in pos):
            return norm[z] / norm[j] * N(z, i)
        return norm[z] / norm[i] * N(j, z)

    # positive roots in canonical order; heights are non-decreasing
    order = sorted(pos)
    for xi in order:
        special = [(a, b) for a in order for b in order if a < b and rs.add(a, b) == xi]
        if not special:
            continue
        a0, b0 = special[0]
        table[(a0, b0)] = p_value(a0, b0) + 1
        for a, b in special[1:]:
            ga, gb = rs.neg[a0], rs.neg[b0]
            t = Fraction(0)
            s1 = rs.add(b, ga)
            if s1 is not None:
                t += N(b, ga) * N(a, gb) / norm[s1]
            s2 = rs.add(ga, a)
            if s2 is not None:
                t += N(ga, a) * N(b, gb) / norm[s2]
            val = norm[xi] * t / table[(a0, b0)]
            if val.denominator != 1:
                raise ArithmeticError("non-integral structure constant")
            table[(a, b)] = int(val)
    full: Dict[tuple, int] = {}
    for i in range(len(roots)):
        for j in range(len(roots)):
            if rs.add(i, j) is not None:
                v = N(i, j)
                if v.denominator != 1 or v == 0:
                    raise ArithmeticError("bad structure constant")
                full[(i, j)] = int(v)
    return full


class ChevalleyAlgebra(LieAlgebra):
    """``g_C`` in a Chevalley basis: ``h_1..h_r`` then ``e_alpha`` per root."""

    def __init__(self, rs: RootSystem, constants: Dict[tuple, int] | None = None):
        self.rs = rs
        r = rs.rank
        nroot = len(rs.roots)
        self.N = dict(constants) if constants is not None else _structure_constants(rs)
        labels = [f"h{i + 1}" for i in range(r)] + [f"e({rs.root_name(k)})" for k in range(nroot)]
        table: Dict[tuple, list] = {}
        for k in range(nroot):
            cov = root_covector(rs, k)
            for i in range(r):
                if cov[i]:
                    table[(i, r + k)] = [(r + k, cov[i])]
        for k in range(nroot):
            nk = rs.neg[k]
            if k < nk:
                cv = coroot(rs, k).vector
                table[(r + k, r + nk)] = [(i, int(c)) for i, c in enumerate(cv) if c]
        for (i, j), v in self.N.items():
            if i < j:
                table[(r + i, r + j)] = [(r + rs.add(i, j), v)]
        super().__init__(labels, table)

    @property
    def rank(self) -> int:
        return self.rs.rank

    def root_vector(self, k: int) -> Vector:
        return self.basis_vector(self.rs.rank + k)

    def cartan_vector(self, values: Sequence) -> Vector:
        """Element of the Cartan from coordinates on the simple coroots."""
        v = [ZERO] * self.dim
        for i, c in enumerate(values):
            v[i] = gq(c)
        return v

    def coroot_vector(self, k: int) -> Vector:
        return self.cartan_vector(coroot(self.rs, k).vector)

    @cached_property
    def cartan(self) -> Subspace:
        return Subspace.coordinate(range(self.rs.rank), self.dim)

    def cartan_span(self, covalues: Iterable[Sequence]) -> Subspace:
        return Subspace([self.cartan_vector(v) for v in covalues], self.dim)


def build_chevalley(rs: RootSystem, cache_dir=None) -> ChevalleyAlgebra:
    """Chevalley algebra of ``rs``; structure constants may be read from a cache."""
    if cache_dir is not None:
        from .cache import load_structure_constants, store_structure_constants

        N = load_structure_constants(cache_dir, rs)
        if N is None:
            alg = ChevalleyAlgebra(rs)
            store_structure_constants(cache_dir, rs, alg.N)
            return alg
        return ChevalleyAlgebra(rs, N)
    return ChevalleyAlgebra(rs)


def subalgebra_from_subset(
    alg: ChevalleyAlgebra,
    A: RootSubset,
    cartan: bool | Subspace = True,
    certify: bool = False,
) -> Subalgebra:
    """``(Cartan part) ⊕ span{e_alpha : alpha in A}``.

    ``cartan`` is ``True`` for the full Cartan, ``False`` for none, or an
    explicit subspace of the Cartan.  With ``certify`` the result is checked
    to be bracket-closed (raising :class:`NotClosed` otherwise).
    """
    r = alg.rs.rank
    rows = [alg.root_vector(k) for k in A.indices()]
    if cartan is True:
        rows += [alg.basis_vector(i) for i in range(r)]
    elif isinstance(cartan, Subspace):
        rows += cartan.rows
    V = Subspace(rows, alg.dim)
    if certify:
        if cartan is True and not is_closed(A):
            raise NotClosed(f"{A!r} is not closed")
        if not alg.is_subalgebra(V):
            raise NotClosed(f"{A!r} with the given Cartan part is not a subalgebra")
    return Subalgebra(alg, V)


# ---------------------------------------------------------------------------
# Conjugations


@dataclass(frozen=True)
class Conjugation:
    """Antilinear involution: ``sigma(sum x_a b_a) = sum conj(x_a) images[a]``."""

    kind: str
    images: tuple

    def __call__(self, x: Sequence[GQ]) -> Vector:
        n = len(self.images)
        if len(x) != n:
            raise DimensionMismatch("element and conjugation differ in dimension")
        out = [ZERO] * n
        for a, c in enumerate(x):
            if c:
                cc = c.conjugate()
                for b, v in self.images[a]:
                    out[b] = out[b] + cc * v
        return out

    def on_covector(self, xi: Sequence[GQ]) -> Vector:
        """Induced dual action ``(sigma* xi)(X) = conj(xi(sigma X))``."""
        out = [ZERO] * len(self.images)
        for a, terms in enumerate(self.images):
            tot = ZERO
            for b, v in terms:
                if xi[b]:
                    tot = tot + v * xi[b]
            out[a] = tot.conjugate()
        return out

    def on_subspace(self, V: Subspace) -> Subspace:
        return Subspace([self(r) for r in V.rows], V.ncols)

    def root_permutation(self, alg: ChevalleyAlgebra) -> List[int]:
        """Action on roots induced by ``sigma(g_alpha) = g_{sigma alpha}``."""
        r = alg.rs.rank
        perm = []
        for k in range(len(alg.rs.roots)):
            terms = self.images[r + k]
            if len(terms) != 1 or terms[0][0] < r:
                raise UnsupportedKind("conjugation does not permute root spaces")
            perm.append(terms[0][0] - r)
        return perm


def conjugation(alg: LieAlgebra, kind: str) -> Conjugation:
    """``compact`` (``e_a -> -e_{-a}``, ``h -> -h``), ``split`` (fixes the basis)
    or ``matrix_entrywise`` (coefficientwise conjugation; for algebras whose
    basis consists of real matrices, this is entrywise matrix conjugation)."""
    n = alg.dim
    if kind in ("split", "matrix_entrywise"):
        return Conjugation(kind, tuple(((a, ONE),) for a in range(n)))
    if kind == "compact":
        if not isinstance(alg, ChevalleyAlgebra):
            raise UnsupportedKind("compact conjugation needs a Chevalley algebra")
        r = alg.rs.rank
        imgs = [((i, -ONE),) for i in range(r)]
        imgs += [((r + alg.rs.neg[k], -ONE),) for k in range(len(alg.rs.roots))]
        return Conjugation(kind, tuple(imgs))
    raise UnsupportedKind(f"unknown conjugation kind {kind!r}")


@dataclass(frozen=True)
class PaperBasis:
    """Root vectors ``X_alpha = e_alpha`` (alpha > 0), ``X_{-alpha} = sigma(X_alpha)``
    and their dual covectors, extended by the Cartan coordinates."""

    X: Dict[int, Vector]
    Xdual: Dict[int, Vector]

    def two_form(self, alg: ChevalleyAlgebra, coeffs: Dict[tuple, GQ]) -> List[Vector]:
        """Matrix of ``sum c_{ab} X*_a ∧ X*_b`` on the Chevalley basis."""
        n = alg.dim
        m = [[ZERO] * n for _ in range(n)]
        for (a, b), c in coeffs.items():
            c = gq(c)
            xa, xb = self.Xdual[a], self.Xdual[b]
            for p in range(n):
                if not xa[p] and not xb[p]:
                    continue
                for q in range(n):
                    v = xa[p] * xb[q] - xb[p] * xa[q]
                    if v:
                        m[p][q] = m[p][q] + c * v
        return m


def paper_basis(alg: ChevalleyAlgebra, conj: Conjugation) -> PaperBasis:
    if conj.kind != "compact":
        raise UnsupportedKind("the X_alpha basis is defined for the compact conjugation")
    rs = alg.rs
    X: Dict[int, Vector] = {}
    for k in rs.positive_indices:
        X[k] = alg.root_vector(k)
        X[rs.neg[k]] = conj(X[k])
    r = rs.rank
    Xdual: Dict[int, Vector] = {}
    for k, v in X.items():
        # X_k is a multiple of e_k; its dual is the inverse multiple of e*_k
        c = v[r + k]
        d = [ZERO] * alg.dim
        d[r + k] = c.inverse()
        Xdual[k] = d
    return PaperBasis(X, Xdual)


def sigma_bracket_constants(alg: ChevalleyAlgebra, conj: Conjugation) -> Dict[int, GQ]:
    """``c`` with ``[X_alpha, sigma X_alpha] = c * alpha^vee`` for every root.

    Raises ``ArithmeticError`` if the bracket is not proportional to the coroot.
    """
    out = {}
    for k in range(len(alg.rs.roots)):
        x = alg.root_vector(k)
        u = alg.bracket(x, conj(x))
        cv = alg.coroot_vector(k)
        piv = next(i for i, v in enumerate(cv) if v)
        c = u[piv] / cv[piv]
        if [c * v for v in cv] != u:
            raise ArithmeticError("[X, sigma X] is not a multiple of the coroot")
        out[k] = c
    return out
