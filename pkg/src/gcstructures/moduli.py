"""Moduli of invariant Dirac structures as a finite orbit graph.

For compact ``G`` with maximal-rank isotropy, each closed subset
``E ⊇ Δ(k)`` indexes an orbit ``O_E`` of complex dimension
``rank(A0) - rank(Δ(k))``.  ``O_F`` meets the closure of ``O_E`` iff
``F' = E'`` and ``F0`` is a Levi subsystem of ``E0``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .classify import algebra_of, realize_pair
from .exact import GQ, ONE, ZERO, gq
from .rootsys import (
    RootSubset,
    RootSystem,
    enumerate_closed_subsets,
    is_levi_subsystem,
    is_parabolic_subset,
    span_rank,
    split_subset,
)


@dataclass(frozen=True)
class OrbitNode:
    subset: RootSubset
    a0: RootSubset
    aprime: RootSubset
    dim: int
    gc_capable: bool
    gc_predicate: str

    def as_dict(self) -> dict:
        return {
            "mask": self.subset.mask,
            "roots": self.subset.names(),
            "dim": self.dim,
            "parabolic": self.gc_capable,
            "gc_predicate": self.gc_predicate,
        }


def orbit_dimension(subset: RootSubset, delta_k: RootSubset) -> int:
    a0, _ = split_subset(subset)
    return span_rank(a0) - span_rank(delta_k)


def _predicate(subset: RootSubset, a0: RootSubset, delta_k: RootSubset, parabolic: bool) -> str:
    if not parabolic:
        return "never"
    rs = subset.parent
    opened = [k for k in (a0 - delta_k).indices() if rs.is_positive(k)]
    if not opened:
        return "always"
    return "Re(phi(coroot)) != 0 for " + ", ".join(rs.root_name(k) for k in opened)


def make_node(subset: RootSubset, delta_k: RootSubset) -> OrbitNode:
    a0, ap = split_subset(subset)
    par = is_parabolic_subset(subset)
    return OrbitNode(subset, a0, ap, orbit_dimension(subset, delta_k), par, _predicate(subset, a0, delta_k, par))


def closure_contains(E: OrbitNode, F: OrbitNode, delta_k: RootSubset) -> bool:
    """Does ``O_F`` meet the closure of ``O_E``?"""
    return F.aprime == E.aprime and delta_k <= F.subset and is_levi_subsystem(F.a0, E.a0)


@dataclass
class ModuliGraph:
    rs: RootSystem
    delta_k: RootSubset
    nodes: List[OrbitNode]
    edges: List[Tuple[int, int]]
    components: List[List[int]]

    def component_sizes(self) -> List[int]:
        return sorted((len(c) for c in self.components), reverse=True)

    def to_json(self) -> dict:
        return {
            "type": self.rs.label,
            "isotropy": self.delta_k.names(),
            "nodes": [n.as_dict() for n in self.nodes],
            "edges": [list(e) for e in self.edges],
            "components": self.components,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_dot(self) -> str:
        lines = [f'digraph "{self.rs.label}" {{']
        for i, n in enumerate(self.nodes):
            label = "{" + ", ".join(n.subset.names()) + "}" + f"\\ndim {n.dim}"
            shape = "box" if n.gc_capable else "ellipse"
            lines.append(f'  n{i} [label="{label}", shape={shape}];')
        for a, b in self.edges:
            if a != b:
                lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_moduli_graph(rs: RootSystem, delta_k: Optional[RootSubset] = None, jobs: int = 1) -> ModuliGraph:
    """Nodes ordered by subset mask; edges ``(i, j)`` mean ``O_j`` meets the closure of ``O_i``
    (reflexive pairs included); components are undirected reachability classes."""
    dk = delta_k if delta_k is not None else rs.empty()
    nodes = [make_node(S, dk) for S in enumerate_closed_subsets(rs, dk, jobs=jobs)]
    edges = []
    for i, E in enumerate(nodes):
        for j, F in enumerate(nodes):
            if closure_contains(E, F, dk):
                edges.append((i, j))
    parent = list(range(len(nodes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for i in range(len(nodes)):
        groups.setdefault(find(i), []).append(i)
    comps = sorted(groups.values(), key=lambda c: c[0])
    return ModuliGraph(rs, dk, nodes, edges, comps)


# ---------------------------------------------------------------------------
# the SU(3) surface

Projective = Tuple[GQ, GQ]
INFINITY: Projective = (ONE, ZERO)


def _proj(c) -> Projective:
    if c is None or (isinstance(c, str) and c.lower() in ("inf", "infinity")):
        return INFINITY
    if isinstance(c, tuple):
        return gq(c[0]), gq(c[1])
    return gq(c), ONE


def surface_form(p1: Projective, p2: Projective, p3: Projective) -> GQ:
    """``vtx + ytu - yvs`` for ``[x,y] x [u,v] x [s,t]``."""
    (x, y), (u, v), (s, t) = p1, p2, p3
    return v * t * x + y * t * u - y * v * s


def su3_surface_membership(c_alpha, c_beta, c_alphabeta) -> bool:
    """Is ``([c_a,1], [c_b,1], [c_ab,1])`` on the surface?

    Each argument may also be ``None``/``"inf"`` for the point ``[1,0]`` or an
    explicit homogeneous pair.
    """
    return surface_form(_proj(c_alpha), _proj(c_beta), _proj(c_alphabeta)) == 0


def su3_roots(rs: RootSystem) -> Tuple[int, int, int]:
    """Indices of ``alpha, beta, alpha + beta`` in A2."""
    if rs.label != "A2":
        raise ValueError("the SU(3) surface lives over A2")
    return rs.parse_root("a1"), rs.parse_root("a2"), rs.parse_root("a1+a2")


def c_coefficients(rs: RootSystem, A: RootSubset, phi: Sequence) -> dict:
    """``c_gamma = eps(X_gamma, X_{-gamma})`` for the realized pair with ``eps = phi o [,]``,
    over the positive roots of ``A ∩ -A``."""
    from .chevalley import conjugation, paper_basis

    alg = algebra_of(rs)
    pb = paper_basis(alg, conjugation(alg, "compact"))
    dp = realize_pair(rs, A, phi, rs.empty())
    a0, _ = split_subset(A)
    out = {}
    for k in a0.indices():
        if rs.is_positive(k):
            out[k] = dp.eps(pb.X[k], pb.X[rs.neg[k]])
    return out


def su3_point(rs: RootSystem, A: RootSubset, phi: Sequence) -> Tuple[Projective, Projective, Projective]:
    """Coordinates of the node ``L(E_A, eps)`` in ``(CP^1)^3``.

    Root directions absent from ``A ∩ -A`` sit at infinity ``[1,0]``.
    """
    a, b, ab = su3_roots(rs)
    c = c_coefficients(rs, A, phi)
    return tuple(_proj(c[k]) if k in c else INFINITY for k in (a, b, ab))  # type: ignore[return-value]


def big_component_subsets(rs: RootSystem) -> List[RootSubset]:
    """``Δ`` and the Levi subsets ``{±a}, {±b}, {±(a+b)}, ∅`` of A2."""
    a, b, ab = su3_roots(rs)
    out = [rs.full()]
    for k in (a, b, ab):
        out.append(rs.subset([k, rs.neg[k]]))
    out.append(rs.empty())
    return out
