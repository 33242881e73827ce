"""The double ``g ⊕ g*`` and linear Dirac structures in it.

A point of the double is stored as one flat vector of length ``2n``: the
first ``n`` coordinates are the vector part ``X`` (Chevalley/structure
basis), the last ``n`` the covector part ``xi`` (dual basis).

Conventions
-----------
* pairing ``<X + xi, Y + eta> = eta(X) + xi(Y)`` (no factor one half);
* bracket ``[X + xi, Y + eta] = [X, Y] + ad*_X eta - ad*_Y xi`` with
  ``(ad*_X eta)(Z) = -eta([X, Z])``;
* ``d_E eps(X, Y, Z) = eps(X, [Y, Z]) + eps(Y, [Z, X]) + eps(Z, [X, Y])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence

from .chevalley import Conjugation, LieAlgebra
from .errors import DimensionMismatch, NotSubalgebra
from .exact import GQ, I, ONE, ZERO, Subspace, gq, nullspace

Vector = List[GQ]


# ---------------------------------------------------------------------------
# elements of the double


@dataclass(frozen=True)
class DoubleElement:
    vec: tuple
    covec: tuple

    def __post_init__(self):
        if len(self.vec) != len(self.covec):
            raise DimensionMismatch("vector and covector parts differ in length")

    @classmethod
    def make(cls, vec=None, covec=None, n: int | None = None) -> "DoubleElement":
        if n is None:
            n = len(vec) if vec is not None else len(covec)
        v = tuple(gq(x) for x in vec) if vec is not None else (ZERO,) * n
        c = tuple(gq(x) for x in covec) if covec is not None else (ZERO,) * n
        return cls(v, c)

    @classmethod
    def from_flat(cls, flat: Sequence[GQ]) -> "DoubleElement":
        n = len(flat) // 2
        return cls(tuple(flat[:n]), tuple(flat[n:]))

    def flat(self) -> Vector:
        return list(self.vec) + list(self.covec)

    def __add__(self, other):
        return DoubleElement(
            tuple(a + b for a, b in zip(self.vec, other.vec)),
            tuple(a + b for a, b in zip(self.covec, other.covec)),
        )

    def __neg__(self):
        return DoubleElement(tuple(-a for a in self.vec), tuple(-a for a in self.covec))


def _dot(u: Sequence[GQ], v: Sequence[GQ]) -> GQ:
    tot = ZERO
    for a, b in zip(u, v):
        if a and b:
            tot = tot + a * b
    return tot


def pairing(u: DoubleElement, v: DoubleElement) -> GQ:
    """``eta(X) + xi(Y)`` for ``u = X + xi``, ``v = Y + eta``."""
    if len(u.vec) != len(v.vec):
        raise DimensionMismatch("pairing elements of different doubles")
    return _dot(v.covec, u.vec) + _dot(u.covec, v.vec)


def _pair_flat(u: Sequence[GQ], v: Sequence[GQ], n: int) -> GQ:
    return _dot(v[n:], u[:n]) + _dot(u[n:], v[:n])


def coadjoint(alg: LieAlgebra, x: Sequence[GQ], eta: Sequence[GQ]) -> Vector:
    """``ad*_x eta``, i.e. ``Z -> -eta([x, Z])``."""
    n = alg.dim
    out = [ZERO] * n
    sc = alg._sc
    for a, xa in enumerate(x):
        if not xa:
            continue
        row = sc[a]
        for k in range(n):
            for c, v in row[k]:
                if eta[c]:
                    out[k] = out[k] - xa * v * eta[c]
    return out


def _bracket_flat(alg: LieAlgebra, u: Sequence[GQ], v: Sequence[GQ]) -> Vector:
    n = alg.dim
    X, xi, Y, eta = u[:n], u[n:], v[:n], v[n:]
    top = alg.bracket(X, Y)
    a = coadjoint(alg, X, eta)
    b = coadjoint(alg, Y, xi)
    return top + [p - q for p, q in zip(a, b)]


def double_bracket(alg: LieAlgebra, u: DoubleElement, v: DoubleElement) -> DoubleElement:
    if len(u.vec) != alg.dim or len(v.vec) != alg.dim:
        raise DimensionMismatch("element does not belong to this double")
    return DoubleElement.from_flat(_bracket_flat(alg, u.flat(), v.flat()))


# ---------------------------------------------------------------------------
# 2-forms on a subalgebra


@dataclass(frozen=True)
class TwoFormOnE:
    """Antisymmetric form ``eps`` on ``E``; ``matrix[i][j] = eps(E_i, E_j)``
    for the echelon basis ``E_i`` of ``E``."""

    E: Subspace
    matrix: tuple

    def __post_init__(self):
        m = self.matrix
        d = self.E.dim
        if len(m) != d or any(len(r) != d for r in m):
            raise DimensionMismatch("form matrix does not match dim E")
        for i in range(d):
            for j in range(i, d):
                if m[i][j] != -m[j][i]:
                    raise ValueError("form is not antisymmetric")

    @classmethod
    def zero(cls, E: Subspace) -> "TwoFormOnE":
        d = E.dim
        return cls(E, tuple(tuple(ZERO for _ in range(d)) for _ in range(d)))

    @classmethod
    def restrict(cls, E: Subspace, global_matrix: Sequence[Sequence]) -> "TwoFormOnE":
        """Restriction to ``E`` of a form given on the whole space."""
        rows = E.rows
        g = [[gq(x) for x in r] for r in global_matrix]
        m = []
        for x in rows:
            gx = [_dot(x, [g[p][q] for p in range(len(x))]) for q in range(len(x))]
            m.append(tuple(_dot(gx, y) for y in rows))
        return cls(E, tuple(m))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def __call__(self, x: Sequence[GQ], y: Sequence[GQ]) -> GQ:
        """``eps(x, y)`` for ``x, y`` in ``E``."""
        cx = self.E.coords(x)
        cy = self.E.coords(y)
        tot = ZERO
        for i, a in enumerate(cx):
            if a:
                row = self.matrix[i]
                for j, b in enumerate(cy):
                    if b and row[j]:
                        tot = tot + a * row[j] * b
        return tot

    def global_matrix(self) -> List[Vector]:
        """Extension by zero on the coordinates that are not pivots of ``E``."""
        n = self.E.ncols
        g = [[ZERO] * n for _ in range(n)]
        piv = self.E.pivots
        for i, p in enumerate(piv):
            for j, q in enumerate(piv):
                g[p][q] = self.matrix[i][j]
        return g

    def sharp(self, x: Sequence[GQ]) -> Vector:
        """``iota_x eps`` as a covector on ``E`` (values on the echelon basis)."""
        cx = self.E.coords(x)
        d = self.E.dim
        return [_dot(cx, [self.matrix[i][j] for i in range(d)]) for j in range(d)]

    def kernel(self) -> Subspace:
        """``Ker eps_sharp`` inside ``E``."""
        d = self.E.dim
        ker = nullspace([list(r) for r in self.matrix], d) if d else []
        return Subspace([self.E.combine(c) for c in ker], self.E.ncols)

    def __add__(self, other: "TwoFormOnE") -> "TwoFormOnE":
        if self.E != other.E:
            raise DimensionMismatch("forms on different subspaces")
        return TwoFormOnE(self.E, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def scale(self, c) -> "TwoFormOnE":
        c = gq(c)
        return TwoFormOnE(self.E, tuple(tuple(c * a for a in r) for r in self.matrix))


def exact_form(alg: LieAlgebra, phi: Sequence, E: Subspace) -> TwoFormOnE:
    """``phi o [,]`` restricted to ``E``; ``phi`` is a covector on ``g``."""
    phi = [gq(x) for x in phi]
    rows = E.rows
    m = []
    for x in rows:
        m.append(tuple(_dot(phi, alg.bracket(x, y)) for y in rows))
    return TwoFormOnE(E, tuple(m))


def d_E(alg: LieAlgebra, eps: TwoFormOnE) -> list:
    """The 3-form ``d_E eps`` on the echelon basis of ``E`` as ``T[i][j][k]``."""
    E = eps.E
    if not alg.is_subalgebra(E):
        raise NotSubalgebra("d_E needs a bracket-closed E")
    rows = E.rows
    d = E.dim
    # brackets in E-coordinates
    br = [[E.coords(alg.bracket(rows[i], rows[j])) for j in range(d)] for i in range(d)]
    m = eps.matrix

    def ev(i, c):
        return _dot([m[i][q] for q in range(d)], c)

    T = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                T[i][j][k] = ev(i, br[j][k]) + ev(j, br[k][i]) + ev(k, br[i][j])
    return T


def is_cocycle(alg: LieAlgebra, eps: TwoFormOnE) -> bool:
    return not any(x for plane in d_E(alg, eps) for row in plane for x in row)


def cocycle_space(alg: LieAlgebra, E: Subspace) -> List[TwoFormOnE]:
    """Basis of the closed 2-forms on ``E`` (kernel of ``d_E``)."""
    if not alg.is_subalgebra(E):
        raise NotSubalgebra("d_E needs a bracket-closed E")
    d = E.dim
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    basis_forms = []
    for i, j in pairs:
        m = [[ZERO] * d for _ in range(d)]
        m[i][j], m[j][i] = ONE, -ONE
        basis_forms.append(TwoFormOnE(E, tuple(tuple(r) for r in m)))
    # columns = d_E of each basis form, rows = triples i<j<k
    triples = [(i, j, k) for i in range(d) for j in range(i + 1, d) for k in range(j + 1, d)]
    cols = []
    for f in basis_forms:
        T = d_E(alg, f)
        cols.append([T[i][j][k] for i, j, k in triples])
    mat = [[cols[c][r] for c in range(len(cols))] for r in range(len(triples))]
    ker = nullspace(mat, len(pairs)) if pairs else []
    out = []
    for coeffs in ker:
        m = [[ZERO] * d for _ in range(d)]
        for (i, j), c in zip(pairs, coeffs):
            m[i][j], m[j][i] = c, -c
        out.append(TwoFormOnE(E, tuple(tuple(r) for r in m)))
    return out


# ---------------------------------------------------------------------------
# Dirac pairs and linear Dirac structures


@dataclass(frozen=True)
class DiracPair:
    """``(E, eps)`` together with the isotropy ``k_C``.

    The pair is not validated on construction: the condition checklists in
    :mod:`gcstructures.classify` report which requirements hold.
    """

    E: Subspace
    eps: TwoFormOnE
    isotropy: Subspace

    def __post_init__(self):
        if self.eps.E != self.E:
            raise DimensionMismatch("eps lives on a different subspace")
        if self.isotropy.ncols != self.E.ncols:
            raise DimensionMismatch("isotropy lives in a different algebra")

    def eps_vanishes_on_isotropy(self) -> bool:
        if not self.isotropy <= self.E:
            return False
        return all(not any(self.eps.sharp(x)) for x in self.isotropy.rows)


@dataclass(frozen=True)
class LinearDirac:
    """Subspace of the double in canonical echelon form."""

    space: Subspace
    n: int = field(default=0)

    def __post_init__(self):
        if self.space.ncols != 2 * self.n:
            raise DimensionMismatch("subspace does not live in a double of the stated size")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def rows(self):
        return self.space.rows

    def __eq__(self, other):
        return isinstance(other, LinearDirac) and self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __contains__(self, u) -> bool:
        flat = u.flat() if isinstance(u, DoubleElement) else u
        return self.space.contains(flat)

    def projection(self) -> Subspace:
        """Image in ``g`` under ``X + xi -> X``."""
        return Subspace([r[: self.n] for r in self.rows], self.n)

    def serialize(self) -> list:
        return self.space.serialize()


def _embed_vec(x: Sequence[GQ], n: int) -> Vector:
    return list(x) + [ZERO] * n


def _embed_covec(xi: Sequence[GQ], n: int) -> Vector:
    return [ZERO] * n + list(xi)


def lift_subspace(V: Subspace) -> Subspace:
    """``V ⊕ 0`` inside the double."""
    return Subspace([_embed_vec(r, V.ncols) for r in V.rows], 2 * V.ncols)


def make_L(pair: DiracPair) -> LinearDirac:
    """``L(E, eps) = {X + xi : X in E, xi|_E = iota_X eps}``."""
    E = pair.E
    n = E.ncols
    rows = []
    for i, x in enumerate(E.rows):
        xi = [ZERO] * n
        for j, p in enumerate(E.pivots):
            xi[p] = pair.eps.matrix[i][j]
        rows.append(list(x) + xi)
    for a in E.annihilator().rows:
        rows.append(_embed_covec(a, n))
    return LinearDirac(Subspace(rows, 2 * n), n)


def is_maximal_isotropic(L: LinearDirac) -> bool:
    if L.dim != L.n:
        return False
    rows = L.rows
    for i, u in enumerate(rows):
        for v in rows[i:]:
            if _pair_flat(u, v, L.n):
                return False
    return True


def is_double_subalgebra(alg: LieAlgebra, L: LinearDirac) -> bool:
    rows = L.rows
    for i, u in enumerate(rows):
        for v in rows[i + 1 :]:
            if not L.space.contains(_bracket_flat(alg, u, v)):
                return False
    return True


def conj_double(L: LinearDirac, sigma: Conjugation) -> LinearDirac:
    """Apply ``sigma`` to vector parts and ``sigma*`` to covector parts."""
    n = L.n
    rows = [sigma(r[:n]) + sigma.on_covector(r[n:]) for r in L.rows]
    return LinearDirac(Subspace(rows, 2 * n), n)


def gc_defect(pair_or_L, sigma: Conjugation) -> Subspace:
    """``L ∩ conj(L)`` as a subspace of the double."""
    L = make_L(pair_or_L) if isinstance(pair_or_L, DiracPair) else pair_or_L
    return L.space & conj_double(L, sigma).space


def is_gc(pair: DiracPair, sigma: Conjugation) -> bool:
    """True iff ``L ∩ conj(L) = k_C ⊕ 0``."""
    return gc_defect(pair, sigma) == lift_subspace(pair.isotropy)


def b_transform(L: LinearDirac, B: Sequence[Sequence]) -> LinearDirac:
    """``{X + xi + iota_X B : X + xi in L}`` for an antisymmetric ``B`` on ``g``."""
    n = L.n
    Bm = [[gq(x) for x in r] for r in B]
    rows = []
    for r in L.rows:
        X = r[:n]
        iota = [_dot(X, [Bm[a][k] for a in range(n)]) for k in range(n)]
        rows.append(list(X) + [a + b for a, b in zip(r[n:], iota)])
    return LinearDirac(Subspace(rows, 2 * n), n)


def _as_matrix(F) -> List[Vector]:
    return [[gq(x) for x in r] for r in F]


def pushforward(F, D: Subspace, n_src: int | None = None) -> Subspace:
    """``F_* D = {F X + xi : X + F^T xi in D}`` for ``F: V -> W``.

    ``F`` is a ``dim W x dim V`` matrix; ``D`` a subspace of ``V ⊕ V*``.
    """
    F = _as_matrix(F)
    m = len(F)
    n = len(F[0]) if m else (n_src or D.ncols // 2)
    if D.ncols != 2 * n:
        raise DimensionMismatch("D does not live in the source double")
    ann = D.annihilator().rows
    # unknowns (X, xi) in V ⊕ W*; constraint a.X + b.(F^T xi) = a.X + (F b).xi
    cons = []
    for row in ann:
        a, b = row[:n], row[n:]
        Fb = [_dot(F[w], b) for w in range(m)]
        cons.append(list(a) + Fb)
    sols = nullspace(cons, n + m)
    out = []
    for s in sols:
        X, xi = s[:n], s[n:]
        out.append([_dot(F[w], X) for w in range(m)] + list(xi))
    return Subspace(out, 2 * m)


def pullback(F, D: Subspace, n_src: int | None = None) -> Subspace:
    """``F^* D = {X + F^T eta : F X + eta in D}`` for ``F: V -> W`` and ``D`` in ``W ⊕ W*``."""
    F = _as_matrix(F)
    m = len(F)
    n = len(F[0]) if m else (n_src or 0)
    if D.ncols != 2 * m:
        raise DimensionMismatch("D does not live in the target double")
    ann = D.annihilator().rows
    cons = []
    for row in ann:
        a, b = row[:m], row[m:]
        FTa = [_dot([F[w][v] for w in range(m)], a) for v in range(n)]
        cons.append(FTa + list(b))
    sols = nullspace(cons, n + m)
    out = []
    for s in sols:
        X, eta = s[:n], s[n:]
        out.append(list(X) + [_dot([F[w][v] for w in range(m)], eta) for v in range(n)])
    return Subspace(out, 2 * n)


def quotient_map(k: Subspace) -> List[Vector]:
    """Matrix of ``g -> g/k`` using the non-pivot coordinates of ``k`` as a basis."""
    n = k.ncols
    piv = set(k.pivots)
    keep = [c for c in range(n) if c not in piv]
    F = [[ZERO] * n for _ in keep]
    for r, c in enumerate(keep):
        F[r][c] = ONE
        # X -> X - sum X[p_i] k_i, then read coordinate c
        for row, p in zip(k.rows, k.pivots):
            if row[c]:
                F[r][p] = F[r][p] - row[c]
    return F


# ---------------------------------------------------------------------------
# interpretation


def conj_form_on(eps: TwoFormOnE, sigma: Conjugation, W: Subspace) -> List[Vector]:
    """Matrix of ``eps_bar(X, Y) = conj(eps(sigma X, sigma Y))`` on the basis of ``W``
    (``W`` must satisfy ``W ⊆ E`` and ``sigma W ⊆ E``)."""
    rows = [sigma(w) for w in W.rows]
    return [[eps(x, y).conjugate() for y in rows] for x in rows]


def _form_on(eps: TwoFormOnE, W: Subspace) -> List[Vector]:
    return [[eps(x, y) for y in W.rows] for x in W.rows]


def _kernel_in(W: Subspace, m: List[Vector]) -> Subspace:
    d = W.dim
    if d == 0:
        return Subspace.zero(W.ncols)
    return Subspace([W.combine(c) for c in nullspace(m, d)], W.ncols)


CLASSES = (
    "Complex",
    "Symplectic",
    "BTransformOfSymplectic",
    "GeneralGC",
    "Presymplectic",
    "RealDirac",
    "NotGC",
)


def interpret(pair: DiracPair, sigma: Conjugation) -> str:
    """Structure class of ``L(E, eps)``.

    GC cases (``L ∩ conj L = k_C``), first match wins: ``Complex``
    (``eps = 0``, ``E ∩ Ē = k``, ``E + Ē = g``), ``Symplectic`` (``E = g``,
    ``eps`` purely imaginary, ``Ker eps_sharp = k``),
    ``BTransformOfSymplectic`` (``E = g``, ``Ker (Im eps)_sharp = k``),
    otherwise ``GeneralGC``.  Non-GC: ``Presymplectic`` if ``L = conj L`` and
    ``E = g``, ``RealDirac`` if ``L = conj L``, otherwise ``NotGC``.
    """
    E, k = pair.E, pair.isotropy
    n = E.ncols
    L = make_L(pair)
    Lbar = conj_double(L, sigma)
    Ebar = sigma.on_subspace(E)
    whole = E.dim == n
    if (L.space & Lbar.space) == lift_subspace(k):
        if pair.eps.is_zero() and (E & Ebar) == k and (E + Ebar).dim == n:
            return "Complex"
        if whole:
            full = Subspace.full(n)
            m = _form_on(pair.eps, full)
            mbar = conj_form_on(pair.eps, sigma, full)
            if all(a == -b for r, s in zip(m, mbar) for a, b in zip(r, s)) and pair.eps.kernel() == k:
                return "Symplectic"
            im = [[(a - b) / (2 * I) for a, b in zip(r, s)] for r, s in zip(m, mbar)]
            if _kernel_in(full, im) == k:
                return "BTransformOfSymplectic"
        return "GeneralGC"
    if L == Lbar:
        return "Presymplectic" if whole else "RealDirac"
    return "NotGC"
