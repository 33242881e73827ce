"""Gaussian rationals and exact linear algebra over Q(i).

Everything downstream (brackets, kernels, subspace intersections) runs on
:class:`GQ` so that equalities such as ``L & conj(L) == k`` are decided
exactly.  Matrices are plain lists of rows; a row is a list of ``GQ``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple

__all__ = [
    "GQ",
    "ZERO",
    "ONE",
    "I",
    "gq",
    "vec",
    "zeros",
    "rref",
    "nullspace",
    "rank",
    "Subspace",
]


class GQ:
    """An element ``(a + b*i) / d`` of the Gaussian rationals.

    Stored normalized: ``d > 0`` and ``gcd(a, b, d) == 1``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GQ):
            if im:
                raise TypeError("GQ(re, im) expects rational parts")
            self.a, self.b, self.d = re.a, re.b, re.d
            return
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        _set(self, a, b, d)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GQ":
        obj = object.__new__(cls)
        _set(obj, a, b, d)
        return obj

    # -- parts -------------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def is_real(self) -> bool:
        return self.b == 0

    def is_imaginary(self) -> bool:
        return self.a == 0

    def conjugate(self) -> "GQ":
        if self.b == 0:
            return self
        return GQ._raw(self.a, -self.b, self.d)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not (o.a or o.b):
            return self
        if not (self.a or self.b):
            return o
        if self.d == o.d:
            return GQ._raw(self.a + o.a, self.b + o.b, self.d)
        return GQ._raw(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + GQ._raw(-o.a, -o.b, o.d)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not (self.a or self.b) or not (o.a or o.b):
            return ZERO
        if self.b == 0 and o.b == 0:
            return GQ._raw(self.a * o.a, 0, self.d * o.d)
        return GQ._raw(
            self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a, self.d * o.d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def inverse(self) -> "GQ":
        if not (self.a or self.b):
            raise ZeroDivisionError("inverse of zero in Q(i)")
        n = self.a * self.a + self.b * self.b
        # 1/((a+bi)/d) = d(a-bi)/(a^2+b^2)
        return GQ._raw(self.d * self.a, -self.d * self.b, n)

    def __neg__(self):
        return GQ._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.a or self.b)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __complex__(self):
        return complex(self.a / self.d, self.b / self.d)

    def __repr__(self):
        return f"GQ({self})"

    def __str__(self):
        re, im = self.re, self.im
        if im == 0:
            return str(re)
        if re == 0:
            return _imag_str(im)
        sign = "+" if im > 0 else "-"
        return f"{re}{sign}{_imag_str(abs(im))}"

    @classmethod
    def from_str(cls, text: str) -> "GQ":
        """Parse the output of ``str(GQ)`` (e.g. ``"1/2-3/4i"``, ``"-i"``)."""
        s = text.strip().replace(" ", "")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut <= 0:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return cls(Fraction(re_part), Fraction(im_part))


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def _set(obj: GQ, a: int, b: int, d: int) -> None:
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    if a == 0 and b == 0:
        d = 1
    elif d != 1:
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
    obj.a = a
    obj.b = b
    obj.d = d


def _coerce(x):
    if isinstance(x, GQ):
        return x
    if isinstance(x, int):
        return GQ._raw(x, 0, 1)
    if isinstance(x, Rational):
        return GQ._raw(x.numerator, 0, x.denominator)
    return NotImplemented


ZERO = GQ._raw(0, 0, 1)
ONE = GQ._raw(1, 0, 1)
I = GQ._raw(0, 1, 1)


def gq(x) -> GQ:
    """Coerce ints, Fractions, ``"p/q"`` strings and Python complex with
    integral parts to :class:`GQ`."""
    if isinstance(x, GQ):
        return x
    if isinstance(x, str):
        return GQ.from_str(x)
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise ValueError(f"refusing inexact complex {x!r}")
        return GQ(int(x.real), int(x.imag))
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or string")
    return GQ(x)


def vec(values: Iterable) -> List[GQ]:
    return [gq(v) for v in values]


def zeros(n: int) -> List[GQ]:
    return [ZERO] * n


# ---------------------------------------------------------------------------
# Row reduction


def rref(rows: Sequence[Sequence[GQ]], ncols: int | None = None) -> Tuple[List[List[GQ]], List[int]]:
    """Reduced row echelon form; zero rows are dropped.

    Returns ``(rows, pivots)`` with ``rows[k][pivots[k]] == 1``.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = None
        for k in range(r, nrows):
            if m[k][c]:
                p = k
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != ONE:
            inv = piv.inverse()
            m[r] = [x * inv if x else ZERO for x in m[r]]
        prow = m[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for k in range(nrows):
            if k != r:
                f = m[k][c]
                if f:
                    row = m[k]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[GQ]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[GQ]], ncols: int) -> List[List[GQ]]:
    """Basis of ``{x : M x = 0}`` for ``M`` given by ``rows``."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [ZERO] * ncols
        x[free] = ONE
        for row, p in zip(red, pivots):
            v = row[free]
            if v:
                x[p] = -v
        basis.append(x)
    return basis


class Subspace:
    """A subspace of ``Q(i)^n`` held in canonical reduced echelon form.

    Equality of subspaces is equality of the echelon matrices.
    """

    __slots__ = ("ncols", "rows", "pivots")

    def __init__(self, rows: Iterable[Sequence[GQ]], ncols: int):
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"row of length {len(r)} in a {ncols}-dimensional space")
        self.ncols = ncols
        self.rows, self.pivots = rref(rows, ncols)

    @classmethod
    def _from_rref(cls, rows, pivots, ncols) -> "Subspace":
        obj = object.__new__(cls)
        obj.ncols = ncols
        obj.rows = rows
        obj.pivots = pivots
        return obj

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls._from_rref([], [], n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        rows = []
        for i in range(n):
            r = [ZERO] * n
            r[i] = ONE
            rows.append(r)
        return cls._from_rref(rows, list(range(n)), n)

    @classmethod
    def coordinate(cls, indices: Iterable[int], n: int) -> "Subspace":
        rows = []
        for i in sorted(set(indices)):
            r = [ZERO] * n
            r[i] = ONE
            rows.append(r)
        return cls(rows, n)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ncols == other.ncols and self.pivots == other.pivots and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, tuple(self.pivots), tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, ambient={self.ncols})"

    def reduce(self, v: Sequence[GQ]) -> List[GQ]:
        """Remainder of ``v`` after eliminating the pivot coordinates."""
        out = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = out[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        out[j] = out[j] - f * x
        return out

    def contains(self, v: Sequence[GQ]) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coords(self, v: Sequence[GQ]) -> List[GQ]:
        """Coefficients of ``v`` in the echelon basis; raises if ``v`` is outside."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return [v[p] for p in self.pivots]

    def combine(self, coeffs: Sequence[GQ]) -> List[GQ]:
        out = [ZERO] * self.ncols
        for c, row in zip(coeffs, self.rows):
            if c:
                for j, x in enumerate(row):
                    if x:
                        out[j] = out[j] + c * x
        return out

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __le__(self, other):
        return self.is_subspace_of(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.rows + other.rows, self.ncols)

    def annihilator(self) -> "Subspace":
        """Covectors (in the dual coordinate basis) vanishing on the subspace."""
        return Subspace(nullspace(self.rows, self.ncols), self.ncols)

    def __and__(self, other: "Subspace") -> "Subspace":
        if self.ncols != other.ncols:
            raise ValueError("ambient dimensions differ")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ncols)
        ann = nullspace(self.rows, self.ncols) + nullspace(other.rows, other.ncols)
        return Subspace(nullspace(ann, self.ncols), self.ncols)

    def conjugate(self) -> "Subspace":
        return Subspace([[x.conjugate() for x in r] for r in self.rows], self.ncols)

    def serialize(self) -> list:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def deserialize(cls, data: list, ncols: int) -> "Subspace":
        return cls([[GQ.from_str(x) for x in r] for r in data], ncols)
