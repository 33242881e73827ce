"""Finite root systems and subset combinatorics.

Roots are stored as integer coordinate tuples in the simple-root basis and
ordered canonically by height, then lexicographically.  Subsets of roots are
bitmasks over that ordering.  The inner product is normalized so that short
roots have squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import CapExceeded, UnsupportedType

DEFAULT_MAX_RANK = 4
DEFAULT_BUDGET = 1 << 24

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}


def _gram_for(series: str, n: int) -> list[list[int]]:
    """Gram matrix of the simple roots (short roots squared length 2)."""
    g = [[0] * n for _ in range(n)]

    def bond(i, j, v):
        g[i][j] = g[j][i] = v

    if series == "A":
        lengths = [2] * n
        for i in range(n - 1):
            bond(i, i + 1, -1)
    elif series == "B":
        lengths = [4] * (n - 1) + [2]
        for i in range(n - 1):
            bond(i, i + 1, -2)
    elif series == "C":
        lengths = [2] * (n - 1) + [4]
        for i in range(n - 2):
            bond(i, i + 1, -1)
        bond(n - 2, n - 1, -2)
    elif series == "D":
        lengths = [2] * n
        for i in range(n - 2):
            bond(i, i + 1, -1)
        bond(n - 3, n - 1, -1)
    elif series == "E":
        lengths = [2] * n
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
        bond(0, 2, -1)
        bond(1, 3, -1)
        for i in range(2, n - 1):
            bond(i, i + 1, -1)
    elif series == "F":
        lengths = [4, 4, 2, 2]
        bond(0, 1, -2)
        bond(1, 2, -2)
        bond(2, 3, -1)
    elif series == "G":
        lengths = [2, 6]
        bond(0, 1, -3)
    else:  # pragma: no cover - guarded by caller
        raise UnsupportedType(series)
    for i in range(n):
        g[i][i] = lengths[i]
    return g


def _valid(series: str, rank: int) -> bool:
    if series not in _MIN_RANK or rank < _MIN_RANK[series]:
        return False
    if series == "E":
        return rank <= 8
    if series in "FG":
        return rank == _MIN_RANK[series]
    return True


def parse_type(label: str) -> tuple[str, int]:
    """``"B2"`` -> ``("B", 2)``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?(\d+)\s*", label)
    if not m:
        raise UnsupportedType(f"cannot parse root system type {label!r}")
    return m.group(1).upper(), int(m.group(2))


class RootSystem:
    """A reduced finite root system with Cartan data.

    ``cartan_matrix[i][j] = <alpha_j, alpha_i^vee> = 2 (a_i, a_j) / (a_i, a_i)``.
    """

    def __init__(self, series: str, rank: int, gram: Sequence[Sequence[int | Fraction]]):
        self.series = series
        self.rank = rank
        self.gram = tuple(tuple(Fraction(x) for x in row) for row in gram)
        n = rank
        self.cartan_matrix = tuple(
            tuple(int(2 * self.gram[i][j] / self.gram[i][i]) for j in range(n)) for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                if 2 * self.gram[i][j] / self.gram[i][i] != self.cartan_matrix[i][j]:
                    raise UnsupportedType("Gram matrix does not give an integral Cartan matrix")
        self.simple_roots = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        positive = _positive_roots(self.cartan_matrix)
        allroots = positive + [tuple(-c for c in r) for r in positive]
        allroots.sort(key=lambda r: (sum(r), r))
        self.roots: tuple[tuple[int, ...], ...] = tuple(allroots)
        self.index = {r: k for k, r in enumerate(self.roots)}
        self.neg = tuple(self.index[tuple(-c for c in r)] for r in self.roots)
        self._build_tables()

    # -- basic data -------------------------------------------------------
    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.label}, |roots|={len(self.roots)})"

    def _key(self):
        return (self.series, self.rank, self.gram)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def full_mask(self) -> int:
        return (1 << len(self.roots)) - 1

    def height(self, k: int) -> int:
        return sum(self.roots[k])

    def is_positive(self, k: int) -> bool:
        return sum(self.roots[k]) > 0

    @cached_property
    def positive_indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(len(self.roots)) if self.is_positive(k))

    @cached_property
    def positive_mask(self) -> int:
        return sum(1 << k for k in self.positive_indices)

    @cached_property
    def simple_indices(self) -> tuple[int, ...]:
        return tuple(self.index[s] for s in self.simple_roots)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """Inner product of two vectors in simple-root coordinates."""
        g = self.gram
        return sum(
            (x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
            Fraction(0),
        )

    def norm2(self, k: int) -> Fraction:
        return self.inner(self.roots[k], self.roots[k])

    def add(self, i: int, j: int) -> int | None:
        """Index of ``root_i + root_j`` or ``None`` if not a root."""
        return self._sum.get((i, j))

    def reflect(self, k: int, j: int) -> int:
        """Index of ``s_{root_k}(root_j)``."""
        a, b = self.roots[k], self.roots[j]
        c = 2 * self.inner(a, b) / self.inner(a, a)
        img = tuple(bb - int(c) * aa for aa, bb in zip(a, b))
        return self.index[img]

    def _build_tables(self) -> None:
        n = len(self.roots)
        self._sum: dict[tuple[int, int], int] = {}
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                s = tuple(x + y for x, y in zip(a, b))
                k = self.index.get(s)
                if k is not None:
                    self._sum[(i, j)] = k
        pairs = [[] for _ in range(n)]
        sums = [[] for _ in range(n)]
        for (i, j), k in sorted(self._sum.items()):
            pairs[i].append((j, k))
            if i < j:
                sums[k].append((i, j))
        self._pair_tables = _csr(pairs)
        self._sum_tables = _csr(sums)

    # -- subsets -----------------------------------------------------------
    def subset(self, roots: Iterable = (), *, mask: int | None = None) -> "RootSubset":
        """Build a subset from root indices, coordinate tuples, or a mask."""
        if mask is None:
            mask = 0
            for r in roots:
                k = r if isinstance(r, int) else self.index[tuple(r)]
                mask |= 1 << k
        return RootSubset(self, mask)

    def empty(self) -> "RootSubset":
        return RootSubset(self, 0)

    def full(self) -> "RootSubset":
        return RootSubset(self, self.full_mask)

    def root_name(self, k: int) -> str:
        """Readable label such as ``a1+a2`` or ``-a1-2a2``."""
        r = self.roots[k]
        neg = sum(r) < 0
        parts = []
        for i, c in enumerate(r):
            c = -c if neg else c
            if c:
                parts.append(("" if c == 1 else str(c)) + f"a{i + 1}")
        return "-" + "-".join(parts) if neg else "+".join(parts)

    def parse_root(self, text: str) -> int:
        """Inverse of :meth:`root_name` (accepts ``+a1``, ``-a1-a2``, ``2a1+a2``)."""
        t = text.replace(" ", "")
        if not t:
            raise ValueError("empty root label")
        coords = [0] * self.rank
        pos = 0
        for m in re.finditer(r"([+-]?)(\d*)a(\d+)", t):
            if m.start() != pos:
                raise ValueError(f"cannot parse root {text!r}")
            pos = m.end()
            i = int(m.group(3)) - 1
            if not 0 <= i < self.rank:
                raise ValueError(f"simple root index out of range in {text!r}")
            c = int(m.group(2) or 1)
            coords[i] += -c if m.group(1) == "-" else c
        if pos != len(t):
            raise ValueError(f"cannot parse root {text!r}")
        key = tuple(coords)
        if key not in self.index:
            raise ValueError(f"{text!r} is not a root of {self.label}")
        return self.index[key]


def _csr(rows):
    start, a, b = [0], [], []
    for row in rows:
        for x, y in row:
            a.append(x)
            b.append(y)
        start.append(len(a))
    return start, a, b


def _positive_roots(cartan) -> list[tuple[int, ...]]:
    """Positive roots by the root-string algorithm, built height by height."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    layer = list(simple)
    result = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p: how far down the alpha_i string through beta goes
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
                        result.append(up)
        layer = nxt
    return result


def build_root_system(series: str, rank: int, max_rank: int = DEFAULT_MAX_RANK) -> RootSystem:
    """Root system of type ``series`` and ``rank``.

    Raises
    ------
    UnsupportedType
        If the pair is not a valid finite type or exceeds ``max_rank``.
    """
    series = str(series).upper()
    if not isinstance(rank, int) or not _valid(series, rank):
        raise UnsupportedType(f"no root system of type {series}{rank}")
    if rank > max_rank:
        raise UnsupportedType(f"rank {rank} exceeds the rank cap {max_rank}")
    return RootSystem(series, rank, _gram_for(series, rank))


def root_system_from_gram(gram, label: str = "X") -> RootSystem:
    """Root system from an arbitrary Gram matrix of simple roots (may be reducible)."""
    return RootSystem(label, len(gram), gram)


@dataclass(frozen=True)
class RootSubset:
    """A subset of roots, stored as a bitmask over the canonical ordering."""

    parent: RootSystem
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.parent.roots):
            raise ValueError("mask does not fit the root system")

    def indices(self) -> list[int]:
        m, out, k = self.mask, [], 0
        while m:
            if m & 1:
                out.append(k)
            m >>= 1
            k += 1
        return out

    def __iter__(self):
        return iter(self.indices())

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, k: int) -> bool:
        return bool((self.mask >> k) & 1)

    def _check(self, other: "RootSubset") -> None:
        if other.parent is not self.parent and other.parent != self.parent:
            raise ValueError("subsets of different root systems")

    def __or__(self, other):
        self._check(other)
        return RootSubset(self.parent, self.mask | other.mask)

    def __and__(self, other):
        self._check(other)
        return RootSubset(self.parent, self.mask & other.mask)

    def __sub__(self, other):
        self._check(other)
        return RootSubset(self.parent, self.mask & ~other.mask)

    def __le__(self, other):
        self._check(other)
        return self.mask & ~other.mask == 0

    def __neg__(self):
        return RootSubset(self.parent, _negate_mask(self.parent, self.mask))

    def names(self) -> list[str]:
        return [self.parent.root_name(k) for k in self.indices()]

    def __repr__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


def _negate_mask(rs: RootSystem, mask: int) -> int:
    out = 0
    neg = rs.neg
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << neg[k]
        mask >>= 1
        k += 1
    return out


def is_closed(S: RootSubset) -> bool:
    """True iff ``a, b in S`` and ``a + b`` a root imply ``a + b in S``."""
    rs = S.parent
    ps, pj, pk = rs._pair_tables
    return bool(kernels.is_closed_mask(S.mask, len(rs.roots), ps, pj, pk))


def enumerate_closed_subsets(
    rs: RootSystem,
    required: RootSubset | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    exclude: RootSubset | None = None,
) -> list[RootSubset]:
    """All closed subsets containing ``required``, sorted by mask.

    ``exclude`` optionally forbids roots.  ``jobs > 1`` splits the search on
    the first few root decisions and runs the pieces in worker processes;
    the merged result is identical to the serial one.
    """
    n = len(rs.roots)
    if (1 << n) > budget:
        raise CapExceeded(f"2^{n} subsets exceeds the enumeration budget {budget}")
    fin = required.mask if required is not None else 0
    fout = exclude.mask if exclude is not None else 0
    if fin & fout:
        return []
    ps, pj, pk = rs._pair_tables
    ss, si, sj = rs._sum_tables
    if jobs <= 1 or n < 8:
        masks = kernels.closed_masks(n, ps, pj, pk, ss, si, sj, fin, fout)
    else:
        masks = _parallel_masks(n, (ps, pj, pk, ss, si, sj), fin, fout, jobs)
    return [RootSubset(rs, m) for m in masks]


def _prefix_worker(args):
    n, tables, fin, fout = args
    return kernels.closed_masks(n, *tables, fin, fout)


def _parallel_masks(n, tables, fin, fout, jobs):
    from concurrent.futures import ProcessPoolExecutor

    depth = min(n, max(1, (jobs - 1).bit_length() + 2))
    tasks = []
    for choice in range(1 << depth):
        pin = fin
        pout = fout
        for b in range(depth):
            if (choice >> b) & 1:
                pin |= 1 << b
            else:
                pout |= 1 << b
        if pin & pout:
            continue
        tasks.append((n, tables, pin, pout))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_prefix_worker, tasks))
    return sorted(m for part in parts for m in part)


def brute_force_closed_subsets(rs: RootSystem, required: RootSubset | None = None) -> list[RootSubset]:
    """Reference scan of every mask; only sensible for small systems."""
    fin = required.mask if required is not None else 0
    out = []
    for m in range(1 << len(rs.roots)):
        if m & fin != fin:
            continue
        S = RootSubset(rs, m)
        if _closed_naive(S):
            out.append(S)
    return out


def _closed_naive(S: RootSubset) -> bool:
    rs = S.parent
    idx = S.indices()
    for i in idx:
        for j in idx:
            k = rs.add(i, j)
            if k is not None and k not in S:
                return False
    return True


def is_symmetric(S: RootSubset) -> bool:
    return _negate_mask(S.parent, S.mask) == S.mask


def is_parabolic_subset(S: RootSubset) -> bool:
    """Closed and ``S ∪ -S`` is everything."""
    rs = S.parent
    return (S.mask | _negate_mask(rs, S.mask)) == rs.full_mask and is_closed(S)


def split_subset(S: RootSubset) -> tuple[RootSubset, RootSubset]:
    """``(S ∩ -S, S ∖ (S ∩ -S))``."""
    a0 = S.mask & _negate_mask(S.parent, S.mask)
    return RootSubset(S.parent, a0), RootSubset(S.parent, S.mask & ~a0)


def span_rank(S: RootSubset) -> int:
    """Dimension of the rational span of the roots in ``S``."""
    rows = [list(S.parent.roots[k]) for k in S.indices()]
    return _int_rank(rows, S.parent.rank)


def _int_rank(rows, ncols) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def span_closure(S: RootSubset, ambient: RootSubset | None = None) -> RootSubset:
    """Roots of ``ambient`` (default: all) lying in the rational span of ``S``."""
    rs = S.parent
    amb = ambient if ambient is not None else rs.full()
    base = [list(rs.roots[k]) for k in S.indices()]
    r0 = _int_rank(base, rs.rank)
    mask = 0
    for k in amb.indices():
        if k in S or _int_rank(base + [list(rs.roots[k])], rs.rank) == r0:
            mask |= 1 << k
    return RootSubset(rs, mask)


def is_levi_subsystem(S: RootSubset, ambient: RootSubset) -> bool:
    """Symmetric, closed and cut out of ``ambient`` by its own span."""
    if not S <= ambient:
        return False
    if not is_symmetric(S) or not is_closed(S):
        return False
    return span_closure(S, ambient).mask == S.mask


# -- coroots -----------------------------------------------------------------


@dataclass(frozen=True)
class Coroot:
    """``alpha^vee`` in simple-coroot coordinates."""

    root_index: int
    vector: tuple[Fraction, ...]


def coroot(rs: RootSystem, k: int) -> Coroot:
    """Coroot of root ``k``: ``sum_i c_i (a_i,a_i)/(a,a) alpha_i^vee``."""
    r = rs.roots[k]
    n2 = rs.norm2(k)
    vec = tuple(Fraction(r[i]) * rs.gram[i][i] / n2 for i in range(rs.rank))
    return Coroot(k, vec)


def root_covector(rs: RootSystem, k: int) -> tuple[int, ...]:
    """Values of root ``k`` on the simple coroots ``alpha_i^vee``."""
    r = rs.roots[k]
    return tuple(sum(r[j] * rs.cartan_matrix[i][j] for j in range(rs.rank)) for i in range(rs.rank))


def pair(phi: Sequence, c: Coroot):
    """Evaluate a covector on the Cartan (given on simple coroots) at ``c``."""
    total = 0
    for a, b in zip(phi, c.vector):
        if b:
            total = total + a * b
    return total
