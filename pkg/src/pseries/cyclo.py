"""Exact arithmetic in the cyclotomic field Q(zeta_e), plus exact linear algebra.

Numbers are stored in the power basis 1, z, ..., z^(phi(e)-1) with rational
coefficients, where z is a primitive e-th root of unity and phi is Euler's
totient.  Products reduce modulo the e-th cyclotomic polynomial, so all
arithmetic is exact; floating point appears only in to_complex(), which is
for diagnostics and never feeds a pass/fail decision.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache


class CycloError(Exception):
    pass


def _divisors(e):
    return [d for d in range(1, e + 1) if e % d == 0]


def _poly_div_exact(a, b):
    """Quotient of integer polynomials (low-degree-first), b monic, remainder 0."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1]
        q[shift] = c
        if c:
            for i, bc in enumerate(b):
                a[shift + i] -= c * bc
    if any(a):
        raise CycloError("division was not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, low-degree-first."""
    num = [-1] + [0] * (e - 1) + [1]
    for d in _divisors(e):
        if d < e:
            num = _poly_div_exact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _conductor(e: int):
    """(phi, pow_rows) where pow_rows[j] gives z^j in the power basis."""
    if e < 1:
        raise CycloError(f"conductor must be >= 1, got {e}")
    poly = cyclotomic_poly(e)
    phi = len(poly) - 1
    top = [-c for c in poly[:-1]]  # z^phi
    rows = [tuple(1 if i == j else 0 for i in range(phi))
            for j in range(phi)]
    cur = rows[phi - 1]
    for _ in range(max(2 * phi - 2, e - 1) - (phi - 1)):
        carry = cur[phi - 1]
        nxt = [0] + list(cur[:phi - 1])
        if carry:
            nxt = [x + carry * t for x, t in zip(nxt, top)]
        cur = tuple(nxt)
        rows.append(cur)
    return phi, tuple(rows)


@lru_cache(maxsize=None)
def power_fold(e: int):
    """Integer tensor F[s][t] = coordinates of z^(s+t) in the power basis."""
    phi, rows = _conductor(e)
    return tuple(tuple(rows[s + t] for t in range(phi)) for s in range(phi))


_ZERO = Fraction(0)
_ONE = Fraction(1)


class CycloNum:
    """An element of Q(zeta_e)."""

    __slots__ = ("e", "c")

    def __init__(self, e, coeffs):
        self.e = e
        self.c = tuple(Fraction(x) for x in coeffs)

    @classmethod
    def rational(cls, e, q) -> "CycloNum":
        phi, _ = _conductor(e)
        return cls(e, (Fraction(q),) + (_ZERO,) * (phi - 1))

    @classmethod
    def zero(cls, e) -> "CycloNum":
        return cls.rational(e, 0)

    @classmethod
    def one(cls, e) -> "CycloNum":
        return cls.rational(e, 1)

    @classmethod
    def root(cls, e, t) -> "CycloNum":
        """zeta_e^t."""
        phi, rows = _conductor(e)
        return cls(e, rows[t % e])

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.e != self.e:
                raise CycloError(f"conductor mismatch: {self.e} vs {other.e}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.rational(self.e, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.e, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.e, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycloNum(self.e, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.e, tuple(a * other for a in self.c))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        phi, rows = _conductor(self.e)
        if phi == 1:
            return CycloNum(self.e, (self.c[0] * o.c[0],))
        conv = [_ZERO] * (2 * phi - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        conv[i + j] += a * b
        out = conv[:phi]
        for j in range(phi, 2 * phi - 1):
            cj = conv[j]
            if cj:
                row = rows[j]
                for i in range(phi):
                    if row[i]:
                        out[i] += cj * row[i]
        return CycloNum(self.e, out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return self.inverse() ** (-m)
        out = CycloNum.one(self.e)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi, _ = _conductor(self.e)
        if phi == 1:
            return CycloNum(self.e, (1 / self.c[0],))
        mod = [Fraction(x) for x in cyclotomic_poly(self.e)]
        # invariants: r0 = u0 * a (mod Phi), r1 = u1 * a (mod Phi)
        r0, u0 = mod, [_ZERO]
        r1, u1 = [x for x in self.c], [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            if not r1:
                raise CycloError("cyclotomic polynomial not coprime to element")
            # r0 = q*r1 + rem
            q = [_ZERO] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            inv_lead = 1 / r1[-1]
            for shift in range(len(rem) - len(r1), -1, -1):
                c = rem[shift + len(r1) - 1] * inv_lead
                q[shift] = c
                if c:
                    for i, bc in enumerate(r1):
                        rem[shift + i] -= c * bc
            # u_next = u0 - q*u1
            qu = [_ZERO] * (len(q) + len(u1) - 1)
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(u1):
                        qu[i + j] += x * y
            un = [_ZERO] * max(len(u0), len(qu))
            for i, x in enumerate(u0):
                un[i] += x
            for i, x in enumerate(qu):
                un[i] -= x
            r0, u0, r1, u1 = r1, u1, rem, un
        scale = 1 / r1[0]
        u = [x * scale for x in u1]
        # reduce u modulo Phi back into the power basis
        _, rows = _conductor(self.e)
        out = [_ZERO] * phi
        for j, x in enumerate(u):
            if x:
                row = rows[j] if j < len(rows) else None
                if row is None:
                    raise CycloError("inverse degree out of range")
                for i in range(phi):
                    if row[i]:
                        out[i] += x * row[i]
        return CycloNum(self.e, out)

    def conj(self) -> "CycloNum":
        """Complex conjugate: z |-> z^(e-1); rational coefficients are fixed."""
        phi, rows = _conductor(self.e)
        out = [_ZERO] * phi
        for j, a in enumerate(self.c):
            if a:
                row = rows[(-j) % self.e]
                for i in range(phi):
                    if row[i]:
                        out[i] += a * row[i]
        return CycloNum(self.e, out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CycloError(f"{self} is not rational")
        return self.c[0]

    def to_complex(self) -> complex:
        return sum(float(a) * cmath.exp(2j * cmath.pi * j / self.e)
                   for j, a in enumerate(self.c) if a)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.rational(self.e, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.e == other.e and self.c == other.c

    def __hash__(self):
        return hash((self.e, self.c))

    def __repr__(self):
        terms = []
        for j, a in enumerate(self.c):
            if a == 0:
                continue
            if j == 0:
                terms.append(str(a))
            elif j == 1:
                terms.append(f"{a}*z" if a != 1 else "z")
            else:
                terms.append(f"{a}*z^{j}" if a != 1 else f"z^{j}")
        return " + ".join(terms) if terms else "0"


class CycloMatrix:
    """Dense rectangular matrix over Q(zeta_e)."""

    def __init__(self, e, rows):
        self.e = e
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise CycloError("ragged matrix")
            for x in r:
                if x.e != e:
                    raise CycloError("conductor mismatch in matrix")


def rank(m: CycloMatrix) -> int:
    """Exact row-echelon rank; pivot is the first nonzero entry in each column."""
    rows = [list(r) for r in m.rows]
    r = 0
    for col in range(m.ncols):
        pivot = None
        for i in range(r, m.nrows):
            if not rows[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pinv = rows[r][col].inverse()
        for i in range(r + 1, m.nrows):
            c = rows[i][col]
            if not c.is_zero():
                f = c * pinv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == m.nrows:
            break
    return r


class AffineSolution:
    """Solutions of M x = rhs: particular point plus nullspace basis."""

    def __init__(self, particular, nullspace):
        self.particular = particular
        self.nullspace = nullspace

    @property
    def dimension(self) -> int:
        return len(self.nullspace)


def solve_affine(m: CycloMatrix, rhs) -> AffineSolution | None:
    """Solve M x = rhs exactly; None when inconsistent."""
    e = m.e
    zero = CycloNum.zero(e)
    rows = [list(r) + [b] for r, b in zip(m.rows, rhs)]
    ncols = m.ncols
    pivots = []  # (row, col)
    r = 0
    for col in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not rows[i][col].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pinv = rows[r][col].inverse()
        rows[r] = [x * pinv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
    for i in range(r, len(rows)):
        if not rows[i][ncols].is_zero():
            return None
    particular = [zero] * ncols
    for pr, pc in pivots:
        particular[pc] = rows[pr][ncols]
    pivot_cols = {pc for _, pc in pivots}
    nullspace = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [zero] * ncols
        vec[free] = CycloNum.one(e)
        for pr, pc in pivots:
            vec[pc] = -rows[pr][free]
        nullspace.append(vec)
    return AffineSolution(particular, nullspace)


class SparseReducer:
    """Incremental exact row reduction of sparse vectors (dict key -> CycloNum).

    Pivot rows are normalized to leading coefficient 1 and keyed by their
    least index; every key in a pivot row other than its lead is strictly
    larger than the lead, so reduction of any vector terminates with a
    remainder that is zero exactly when the vector lies in the span.
    """

    def __init__(self, e):
        self.e = e
        self.pivots = {}
        self.leads = []

    def reduce(self, vec):
        """(coords, remainder): vec = sum coords[lead]*pivot[lead] + remainder."""
        v = {k: x for k, x in vec.items() if not x.is_zero()}
        coords = {}
        while v:
            lead = min(v)
            row = self.pivots.get(lead)
            if row is None:
                break
            c = v[lead]
            coords[lead] = c
            for k, x in row.items():
                y = v.get(k)
                nxt = (y - c * x) if y is not None else (-c * x)
                if nxt.is_zero():
                    v.pop(k, None)
                else:
                    v[k] = nxt
        return coords, v

    def feed(self, vec) -> bool:
        """Insert vec; True when it enlarged the span."""
        _, rem = self.reduce(vec)
        if not rem:
            return False
        lead = min(rem)
        scale = rem[lead].inverse()
        self.pivots[lead] = {k: x * scale for k, x in rem.items()}
        self.leads.append(lead)
        return True

    def contains(self, vec) -> bool:
        _, rem = self.reduce(vec)
        return not rem

    def coords_list(self, vec):
        """Coordinates in insertion order of pivots; None if vec is outside."""
        coords, rem = self.reduce(vec)
        if rem:
            return None
        zero = CycloNum.zero(self.e)
        return [coords.get(lead, zero) for lead in self.leads]

    @property
    def rank(self) -> int:
        return len(self.leads)

    def basis_rows(self):
        """Pivot rows in insertion order."""
        return [self.pivots[lead] for lead in self.leads]
