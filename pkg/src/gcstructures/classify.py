"""Condition checklists for invariant Dirac and generalized complex structures.

Three independent routes decide whether a pair ``(E, eps)`` is generalized
complex:

* the direct test ``L ∩ conj(L) = k ⊕ 0`` (:func:`gc_defect` in dirac_core);
* the five-condition checklist :func:`check_gc_pair`;
* for compact ``sigma`` and maximal-rank isotropy, the combinatorial
  predicate :func:`gc_predicate_compact` on a root subset and a functional
  ``phi`` on the Cartan.

Functionals ``phi`` on the Cartan are covectors given by their values on
the simple coroots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence

from .chevalley import ChevalleyAlgebra, Conjugation, build_chevalley, subalgebra_from_subset
from .dirac_core import (
    DiracPair,
    _form_on,
    _kernel_in,
    conj_form_on,
    exact_form,
    is_cocycle,
)
from .errors import NotGCSubset, UnsupportedKind
from .exact import GQ, ZERO, Subspace, gq, nullspace, rref
from .rootsys import (
    RootSubset,
    RootSystem,
    coroot,
    enumerate_closed_subsets,
    is_closed,
    is_parabolic_subset,
    is_symmetric,
    pair,
    split_subset,
)


@lru_cache(maxsize=None)
def algebra_of(rs: RootSystem) -> ChevalleyAlgebra:
    """Cached Chevalley algebra for ``rs`` (uses the on-disk cache if configured)."""
    from .cache import resolve_dir

    return build_chevalley(rs, cache_dir=resolve_dir())


# ---------------------------------------------------------------------------
# the five-condition checklist


@dataclass
class GCConditions:
    subalgebra: bool
    contains_isotropy: bool  # (1)
    spans: bool  # (2) E + Ē = g
    closed_form: bool  # (3) d_E eps = 0
    vanishes_on_isotropy: bool  # (4)
    kernel_is_isotropy: bool  # (5)

    @property
    def verdict(self) -> bool:
        return all(
            (
                self.subalgebra,
                self.contains_isotropy,
                self.spans,
                self.closed_form,
                self.vanishes_on_isotropy,
                self.kernel_is_isotropy,
            )
        )

    def as_dict(self) -> dict:
        return {
            "subalgebra": self.subalgebra,
            "1_isotropy_in_E": self.contains_isotropy,
            "2_E_plus_Ebar": self.spans,
            "3_cocycle": self.closed_form,
            "4_eps_kills_isotropy": self.vanishes_on_isotropy,
            "5_kernel_condition": self.kernel_is_isotropy,
            "verdict": self.verdict,
        }


def check_gc_pair(alg: ChevalleyAlgebra, dp: DiracPair, sigma: Conjugation) -> GCConditions:
    """Evaluate the five conditions separately (no short-circuit).

    (5) is ``Ker((eps - eps_bar)_sharp on E ∩ Ē) = k`` with
    ``eps_bar(X, Y) = conj(eps(conj X, conj Y))``.
    """
    E, k, eps = dp.E, dp.isotropy, dp.eps
    n = alg.dim
    Ebar = sigma.on_subspace(E)
    sub = alg.is_subalgebra(E)
    c1 = k <= E
    c2 = (E + Ebar).dim == n
    c3 = is_cocycle(alg, eps) if sub else False
    c4 = c1 and all(not any(eps.sharp(x)) for x in k.rows)
    W = E & Ebar
    m = _form_on(eps, W)
    mbar = conj_form_on(eps, sigma, W)
    diff = [[a - b for a, b in zip(r, s)] for r, s in zip(m, mbar)]
    c5 = _kernel_in(W, diff) == k
    return GCConditions(sub, c1, c2, c3, c4, c5)


# ---------------------------------------------------------------------------
# maximal-rank isotropy, compact sigma


def isotropy_space(alg: ChevalleyAlgebra, delta_k: RootSubset) -> Subspace:
    """``k_C = h ⊕ (root spaces of delta_k)``."""
    return subalgebra_from_subset(alg, delta_k).space


def _cartan_killing(alg: ChevalleyAlgebra) -> List[List[GQ]]:
    r = alg.rs.rank
    return [row[:r] for row in alg.killing_matrix[:r]]


def _coroot_vec(rs: RootSystem, k: int) -> List[GQ]:
    return [gq(x) for x in coroot(rs, k).vector]


def coroot_basis(A0: RootSubset) -> List[int]:
    """Positive roots of ``A0`` whose coroots form a basis of their span (greedy, canonical order)."""
    rs = A0.parent
    chosen: List[int] = []
    rows: List[List[GQ]] = []
    for k in A0.indices():
        if not rs.is_positive(k):
            continue
        cand = rows + [_coroot_vec(rs, k)]
        if Subspace(cand, rs.rank).dim == len(cand):
            rows = cand
            chosen.append(k)
    return chosen


def extend_phi(rs: RootSystem, A0: RootSubset, values: Sequence) -> List[GQ]:
    """Functional with prescribed values on the coroots :func:`coroot_basis`
    of ``A0`` and zero on the Killing-orthogonal complement of their span."""
    alg = algebra_of(rs)
    basis = coroot_basis(A0)
    if len(values) != len(basis):
        raise ValueError(f"expected {len(basis)} values, got {len(values)}")
    r = rs.rank
    if not basis:
        return [ZERO] * r
    K = _cartan_killing(alg)
    C = [_coroot_vec(rs, k) for k in basis]
    # phi = kappa(t, .), t = sum s_j C_j; need kappa(t, C_i) = v_i
    G = [[_bil(K, C[i], C[j]) for j in range(len(C))] for i in range(len(C))]
    s = _solve(G, [gq(v) for v in values])
    t = [sum((s[j] * C[j][a] for j in range(len(C))), ZERO) for a in range(r)]
    return [sum((t[a] * K[a][b] for a in range(r)), ZERO) for b in range(r)]


def _bil(K, x, y) -> GQ:
    tot = ZERO
    for a, xa in enumerate(x):
        if xa:
            for b, yb in enumerate(y):
                if yb and K[a][b]:
                    tot = tot + xa * K[a][b] * yb
    return tot


def _solve(G, rhs) -> List[GQ]:
    """Solve the nonsingular system ``G s = rhs``."""
    m = len(G)
    aug = [list(G[i]) + [rhs[i]] for i in range(m)]
    red, piv = rref(aug, m + 1)
    if piv != list(range(m)):
        raise ArithmeticError("singular system")
    return [red[i][m] for i in range(m)]


def phi_value(rs: RootSystem, phi: Sequence, k: int) -> GQ:
    """``phi(alpha_k^vee)``."""
    return gq(pair([gq(x) for x in phi], coroot(rs, k)))


def phi_space(rs: RootSystem, A0: RootSubset, delta_k: RootSubset) -> List[List[GQ]]:
    """Basis of the functionals supported on the ``A0`` coroot span and
    vanishing on the ``delta_k`` coroots."""
    alg = algebra_of(rs)
    basis = coroot_basis(A0)
    if not basis:
        return []
    r = rs.rank
    K = _cartan_killing(alg)
    C = [_coroot_vec(rs, k) for k in basis]
    cons = []
    for b in delta_k.indices():
        cb = _coroot_vec(rs, b)
        cons.append([_bil(K, cj, cb) for cj in C])
    sols = nullspace(cons, len(C)) if cons else [[gq(int(i == j)) for j in range(len(C))] for i in range(len(C))]
    out = []
    for s in sols:
        t = [sum((s[j] * C[j][a] for j in range(len(C))), ZERO) for a in range(r)]
        out.append([sum((t[a] * K[a][b] for a in range(r)), ZERO) for b in range(r)])
    return Subspace(out, r).rows if out else []


def realize_pair(rs: RootSystem, A: RootSubset, phi: Sequence, delta_k: RootSubset) -> DiracPair:
    """``(E, eps)`` with ``E = h ⊕ g_A`` and ``eps = phi o [,]`` restricted to ``E``."""
    alg = algebra_of(rs)
    E = subalgebra_from_subset(alg, A).space
    full_phi = [gq(x) for x in phi] + [ZERO] * (alg.dim - rs.rank)
    eps = exact_form(alg, full_phi, E)
    return DiracPair(E, eps, isotropy_space(alg, delta_k))


def gc_predicate_compact(rs: RootSystem, A: RootSubset, phi: Sequence, delta_k: RootSubset) -> bool:
    """Combinatorial verdict: ``A`` parabolic containing ``delta_k``, ``phi``
    zero on the ``delta_k`` coroots, and ``Re phi(alpha^vee) != 0`` on ``A0 ∖ delta_k``."""
    if not delta_k <= A or not is_parabolic_subset(A):
        return False
    if any(phi_value(rs, phi, b) for b in delta_k.indices()):
        return False
    A0, _ = split_subset(A)
    return all(phi_value(rs, phi, a).re != 0 for a in (A0 - delta_k).indices())


def _predicate_text(rs: RootSystem, roots: Sequence[int], what: str) -> str:
    if not roots:
        return "true"
    names = ", ".join(rs.root_name(k) for k in roots)
    return f"{what}(phi(coroot)) != 0 for {names}" if what == "Re" else f"phi(coroot) in iR for {names}"


@dataclass
class ParabolicFamily:
    """A parabolic ``A ⊇ delta_k`` with its space of admissible ``phi``."""

    subset: RootSubset
    levi: RootSubset
    phi_basis: List[List[GQ]]
    delta_k: RootSubset

    @property
    def phi_space_dim(self) -> int:
        return len(self.phi_basis)

    @property
    def open_roots(self) -> List[int]:
        return [k for k in (self.levi - self.delta_k).indices() if self.subset.parent.is_positive(k)]

    def accepts(self, phi: Sequence) -> bool:
        return gc_predicate_compact(self.subset.parent, self.subset, phi, self.delta_k)

    def predicate_text(self) -> str:
        return _predicate_text(self.subset.parent, self.open_roots, "Re")

    def as_dict(self) -> dict:
        return {
            "subset_mask": self.subset.mask,
            "subset": self.subset.names(),
            "parabolic": True,
            "levi_core": self.levi.mask,
            "phi_space_dim": self.phi_space_dim,
            "gc_predicate": self.predicate_text(),
        }


def gc_pairs_compact(rs: RootSystem, delta_k: RootSubset, jobs: int = 1) -> List[ParabolicFamily]:
    """Parabolic subsets containing ``delta_k`` with their ``phi`` spaces."""
    out = []
    for A in enumerate_closed_subsets(rs, delta_k, jobs=jobs):
        if is_parabolic_subset(A):
            A0, _ = split_subset(A)
            out.append(ParabolicFamily(A, A0, phi_space(rs, A0, delta_k), delta_k))
    return out


@dataclass
class RealDiracFamily:
    """Symmetric ``A ⊇ delta_k``; ``phi`` must take imaginary values on its coroots."""

    subset: RootSubset
    phi_basis: List[List[GQ]]
    delta_k: RootSubset

    @property
    def phi_space_dim(self) -> int:
        return len(self.phi_basis)

    def accepts(self, phi: Sequence) -> bool:
        rs = self.subset.parent
        if any(phi_value(rs, phi, b) for b in self.delta_k.indices()):
            return False
        return all(phi_value(rs, phi, a).re == 0 for a in self.subset.indices())

    def as_dict(self) -> dict:
        rs = self.subset.parent
        return {
            "subset_mask": self.subset.mask,
            "subset": self.subset.names(),
            "phi_space_dim": self.phi_space_dim,
            "predicate": _predicate_text(
                rs, [k for k in (self.subset - self.delta_k).indices() if rs.is_positive(k)], "Im"
            ),
        }


def real_dirac_pairs_compact(rs: RootSystem, delta_k: RootSubset) -> List[RealDiracFamily]:
    out = []
    for A in enumerate_closed_subsets(rs, delta_k):
        if is_symmetric(A):
            out.append(RealDiracFamily(A, phi_space(rs, A, delta_k), delta_k))
    return out


# ---------------------------------------------------------------------------
# semisimple orbits: generalized complex subsets


def root_action(rs: RootSystem, kind: str) -> List[int]:
    """Action on roots of the compact (``a -> -a``) or split (``a -> a``) conjugation."""
    if kind == "compact":
        return list(rs.neg)
    if kind == "split":
        return list(range(len(rs.roots)))
    raise UnsupportedKind(f"unknown conjugation kind {kind!r}")


def _image(A: RootSubset, action: Sequence[int]) -> RootSubset:
    return A.parent.subset([action[k] for k in A.indices()])


def is_gc_subset(A: RootSubset, sigma_action: Sequence[int]) -> bool:
    sA = _image(A, sigma_action)
    rs = A.parent
    return is_closed(A) and (A | sA).mask == rs.full_mask and (A & sA) <= -A


def gc_subsets(rs: RootSystem, sigma_action: Sequence[int], Lambda: Optional[RootSubset] = None) -> List[RootSubset]:
    """Closed ``A ⊇ Lambda`` with ``A ∪ sigma A = Δ`` and ``A ∩ sigma A ⊆ -A``."""
    return [A for A in enumerate_closed_subsets(rs, Lambda) if is_gc_subset(A, sigma_action)]


def check_phi_orbit(
    A: RootSubset, phi: Sequence, sigma_action: Sequence[int], Lambda: Optional[RootSubset] = None
) -> bool:
    """``phi`` vanishes on ``Lambda`` coroots and ``phi(a^vee) != conj(phi((sigma a)^vee))``
    on ``(A ∩ sigma A) ∖ Lambda``."""
    rs = A.parent
    lam = Lambda if Lambda is not None else rs.empty()
    if any(phi_value(rs, phi, b) for b in lam.indices()):
        return False
    inter = A & _image(A, sigma_action)
    for a in (inter - lam).indices():
        if phi_value(rs, phi, a) == phi_value(rs, phi, sigma_action[a]).conjugate():
            return False
    return True


@dataclass
class GCSubsetDecomposition:
    """``Phi = A ∪ theta A`` split into ``Psi`` and simple summands ``Gamma_i``."""

    Phi: RootSubset
    Psi: RootSubset
    summands: List[RootSubset]
    T: List[int]
    thetaT: List[int]
    R: List[int]
    A_i: Dict[int, RootSubset] = field(default_factory=dict)


def _components(S: RootSubset) -> List[RootSubset]:
    """Connected components of the non-orthogonality graph on ``S``."""
    rs = S.parent
    idx = S.indices()
    seen: set = set()
    comps = []
    for start in idx:
        if start in seen:
            continue
        stack, comp = [start], 0
        seen.add(start)
        while stack:
            a = stack.pop()
            comp |= 1 << a
            for b in idx:
                if b not in seen and rs.inner(rs.roots[a], rs.roots[b]) != 0:
                    seen.add(b)
                    stack.append(b)
        comps.append(rs.subset(mask=comp))
    comps.sort(key=lambda c: c.mask)
    return comps


def decompose_gc_subset(A: RootSubset, theta_action: Sequence[int]) -> GCSubsetDecomposition:
    """Split a GC subset into ``(Phi, T, theta T, R, A_i)``."""
    rs = A.parent
    sigma_action = [rs.neg[theta_action[k]] for k in range(len(rs.roots))]
    if not is_gc_subset(A, sigma_action):
        raise NotGCSubset(f"{A!r} is not a generalized complex subset")
    Phi = A | _image(A, theta_action)
    Gamma = Phi & -Phi
    Psi = Phi - Gamma
    core = A & -A
    tcore = _image(core, theta_action)
    summands = _components(Gamma)
    T, tT, R, Ai = [], [], [], {}
    for i, G in enumerate(summands):
        inA, inT = G <= core, G <= tcore
        if inA and inT:
            R.append(i)
        elif inA:
            T.append(i)
        elif inT:
            tT.append(i)
            Ai[i] = A & G
        else:
            raise NotGCSubset("a simple summand lies in neither A ∩ -A nor its theta image")
    return GCSubsetDecomposition(Phi, Psi, summands, T, tT, R, Ai)


def recompose(d: GCSubsetDecomposition) -> RootSubset:
    """``Psi ∪ (Gamma_i, i in T ∪ R) ∪ (A_i, i in theta T)``."""
    out = d.Psi
    for i in d.T + d.R:
        out = out | d.summands[i]
    for i in d.thetaT:
        out = out | d.A_i[i]
    return out


# ---------------------------------------------------------------------------
# symmetric covers


def symmetric_closed_subsets(rs: RootSystem) -> List[RootSubset]:
    """Closed ``S = -S``, found by scanning subsets of the positive roots."""
    pos = rs.positive_indices
    out = []
    for bits in range(1 << len(pos)):
        mask = 0
        for t, k in enumerate(pos):
            if (bits >> t) & 1:
                mask |= (1 << k) | (1 << rs.neg[k])
        S = rs.subset(mask=mask)
        if is_closed(S):
            out.append(S)
    out.sort(key=lambda s: s.mask)
    return out


def verify_symmetric_cover(rs: RootSystem):
    """Look for symmetric closed ``X, Y`` with ``X ∪ Y = Δ`` and neither equal to ``Δ``.

    Returns ``(True, None)`` if there is none, else ``(False, (X, Y))``.
    """
    full = rs.full_mask
    syms = [S for S in symmetric_closed_subsets(rs) if S.mask != full]
    for i, X in enumerate(syms):
        for Y in syms[i:]:
            if X.mask | Y.mask == full:
                return False, (X, Y)
    return True, None
