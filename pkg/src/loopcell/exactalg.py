"""
Exact arithmetic over Q((t)): Laurent polynomials with rational coefficients,
square matrices of them, and rational functions in t for the few places where
a closed-form quotient has to be compared exactly.

A `Laurent` is stored as a valuation plus a tuple of `Fraction` coefficients
whose first and last entries are nonzero; zero is the empty tuple and has no
valuation.

>>> t = Laurent.t()
>>> (1 + t) * (1 - t)
Laurent('1 - t^2')
>>> (1 - t).invert(3)
Laurent('1 + t + t^2 + t^3')
>>> M = LaurentMatrix.diag([t**-1, 1, t])
>>> M.det(), M.vdim()
(Laurent('1'), 0)
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "Laurent", "LaurentMatrix", "RationalFunction",
    "scalar_arith", "scalar_invert", "mat_mul", "mat_det", "membership", "vdim",
    "frac_det", "frac_solve", "frac_inverse",
    "matrix_to_json", "matrix_from_json", "MatrixFormatError",
]

Scalar = Union[int, Fraction, "Laurent"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Laurent:
    """Element of Q[t, 1/t], immutable and always in canonical form."""

    __slots__ = ("_val", "_coeffs")

    def __init__(self, coeffs: Iterable = (), val: int = 0):
        cs = [_frac(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        self._coeffs = tuple(cs[lo:hi])
        self._val = val + lo if self._coeffs else 0

    @classmethod
    def _make(cls, coeffs: list, val: int) -> "Laurent":
        """Trusted constructor: coeffs are already Fractions."""
        self = object.__new__(cls)
        lo, hi = 0, len(coeffs)
        while lo < hi and not coeffs[lo]:
            lo += 1
        while hi > lo and not coeffs[hi - 1]:
            hi -= 1
        self._coeffs = tuple(coeffs[lo:hi])
        self._val = val + lo if self._coeffs else 0
        return self

    # -- constructors -------------------------------------------------------

    @classmethod
    def t(cls, k: int = 1) -> "Laurent":
        return cls((1,), k)

    @classmethod
    def monomial(cls, c, k: int) -> "Laurent":
        return cls((c,), k)

    @classmethod
    def from_terms(cls, terms: dict) -> "Laurent":
        """Build from a mapping exponent -> coefficient."""
        terms = {k: _frac(c) for k, c in terms.items() if c != 0}
        if not terms:
            return ZERO
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def coerce(cls, x) -> "Laurent":
        if isinstance(x, Laurent):
            return x
        return cls((x,), 0)

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def valuation(self):
        """Exponent of the lowest term, or None for zero."""
        return self._val if self._coeffs else None

    @property
    def degree(self):
        return self._val + len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    def is_integral(self) -> bool:
        return not self._coeffs or self._val >= 0

    def is_unit_of_A(self) -> bool:
        """True for power-series units: valuation exactly 0."""
        return bool(self._coeffs) and self._val == 0

    def lead(self) -> Fraction:
        return self._coeffs[0]

    def __getitem__(self, k: int) -> Fraction:
        i = k - self._val
        if self._coeffs and 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def terms(self):
        for i, c in enumerate(self._coeffs):
            if c:
                yield self._val + i, c

    def constant_term(self) -> Fraction:
        return self[0]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if not self._coeffs:
            return other
        if not other._coeffs:
            return self
        lo = min(self._val, other._val)
        hi = max(self.degree, other.degree)
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self._coeffs):
            out[self._val - lo + i] += c
        for i, c in enumerate(other._coeffs):
            out[other._val - lo + i] += c
        return Laurent._make(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._make([-c for c in self._coeffs], self._val)

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            c = b[0]
            return Laurent._make([x * c for x in a], self._val + other._val)
        if len(a) == 1:
            c = a[0]
            return Laurent._make([c * x for x in b], self._val + other._val)
        # integer convolution over a common denominator
        ia, da = _as_integers(a)
        ib, db = _as_integers(b)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        den = da * db
        return Laurent._make([Fraction(x, den) for x in out], self._val + other._val)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            return Laurent((1 / self._coeffs[0] ** -k,), self._val * k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        """Exact division; raises if the quotient is not a Laurent polynomial."""
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        q = self.exact_div(other)
        if q is None:
            raise ValueError("quotient is not a Laurent polynomial")
        return q

    def exact_div(self, other: "Laurent"):
        """Return self/other if it lies in Q[t, 1/t], else None."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_zero():
            return ZERO
        if other.is_monomial():
            c = other._coeffs[0]
            return Laurent([x / c for x in self._coeffs], self._val - other._val)
        # polynomial long division on the shifted coefficient lists
        num = list(self._coeffs)
        den = other._coeffs
        if len(num) < len(den):
            return None
        q = [Fraction(0)] * (len(num) - len(den) + 1)
        lead = den[-1]
        for i in range(len(q) - 1, -1, -1):
            c = num[i + len(den) - 1] / lead
            q[i] = c
            if c:
                for j, d in enumerate(den):
                    num[i + j] -= c * d
        if any(num):
            return None
        return Laurent(q, self._val - other._val)

    def invert(self, order: int) -> "Laurent":
        """
        Power-series inverse, exact for monomials.

        For non-monomials the expansion of 1/self is kept up to `order` terms
        past its leading term, i.e. through t^(order - valuation).
        """
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_monomial():
            return self ** -1
        return ONE.series_div(self, order - self._val)

    def truncate(self, deg: int) -> "Laurent":
        """Drop every term of degree greater than `deg`."""
        if not self._coeffs or self.degree <= deg:
            return self
        keep = deg - self._val + 1
        if keep <= 0:
            return ZERO
        return Laurent(self._coeffs[:keep], self._val)

    def series_div(self, other: "Laurent", deg: int) -> "Laurent":
        """self/other, exact when possible, else expanded through t^deg."""
        q = self.exact_div(other)
        if q is not None:
            return q
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_zero():
            return ZERO
        v = self._val - other._val
        terms = deg - v + 1
        if terms <= 0:
            return ZERO
        a, b = self._coeffs, other._coeffs
        b0 = b[0]
        out = []
        for k in range(terms):
            s = a[k] if k < len(a) else Fraction(0)
            for i in range(1, min(k, len(b) - 1) + 1):
                s -= b[i] * out[k - i]
            out.append(s / b0)
        return Laurent._make(out, v)

    def subs_t(self, value) -> Fraction:
        """Evaluate at a nonzero rational value of t."""
        value = _frac(value)
        return sum((c * value ** k for k, c in self.terms()), Fraction(0))

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self._val == other._val and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._val, self._coeffs))

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in self.terms():
            if k == 0:
                body = str(abs(c))
            else:
                mon = "t" if k == 1 else f"t^{k}"
                body = mon if abs(c) == 1 else f"{abs(c)}*{mon}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Laurent('{self}')"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "valuation": self.valuation,
            "coeffs": [str(c) for c in self._coeffs],
        }

    @classmethod
    def from_json(cls, obj) -> "Laurent":
        coeffs = obj["coeffs"]
        if not coeffs:
            return ZERO
        if obj["valuation"] is None:
            raise ValueError("nonzero entry needs an integer valuation")
        x = cls([Fraction(c) for c in coeffs], int(obj["valuation"]))
        if x.coeffs != tuple(Fraction(c) for c in coeffs):
            raise ValueError("coefficient list is not in canonical form")
        return x


def _as_integers(coeffs):
    den = 1
    for c in coeffs:
        d = c.denominator
        if den % d:
            den = den * d // gcd(den, d)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _coerce_or_none(x):
    if isinstance(x, Laurent):
        return x
    if isinstance(x, (int, Fraction)):
        return Laurent((x,), 0)
    return None


ZERO = Laurent()
ONE = Laurent((1,))


def scalar_arith(a: Laurent, b: Laurent, op: str) -> Laurent:
    ops = {"add": Laurent.__add__, "sub": Laurent.__sub__, "mul": Laurent.__mul__}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    return ops[op](Laurent.coerce(a), Laurent.coerce(b))


def scalar_invert(a: Laurent, truncation_order: int = 0) -> Laurent:
    return Laurent.coerce(a).invert(truncation_order)


# ---------------------------------------------------------------------------
# generic helpers shared by Laurent and rational-function matrices


def _laplace_det(rows: Sequence[Sequence], zero, one):
    """Determinant by Laplace expansion memoized over column subsets."""
    n = len(rows)
    if n == 0:
        return one
    # minors[mask] = det of the last popcount(mask) rows on the columns in mask
    minors = {0: one}
    for size in range(1, n + 1):
        r = n - size
        new = {}
        for mask in _masks_of_size(n, size):
            acc = zero
            sign = 1
            for c in range(n):
                if mask >> c & 1:
                    entry = rows[r][c]
                    rest = minors.get(mask & ~(1 << c))
                    if entry != 0 and rest is not None and rest != 0:
                        term = entry * rest
                        acc = acc + term if sign > 0 else acc - term
                    sign = -sign
            new[mask] = acc
        minors = new
    return minors[(1 << n) - 1]


def _masks_of_size(n: int, k: int):
    from itertools import combinations
    for cols in combinations(range(n), k):
        m = 0
        for c in cols:
            m |= 1 << c
        yield m


def _matmul(A, B, zero):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                a, b = A[i][k], B[k][j]
                if a != 0 and b != 0:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


# ---------------------------------------------------------------------------


class LaurentMatrix:
    """Square matrix over Q[t, 1/t]; immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Laurent.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("LaurentMatrix must be square and nonempty")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "LaurentMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diag(cls, entries) -> "LaurentMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x

    def tolist(self):
        return [list(r) for r in self.rows]

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(list(zip(*self.rows)))

    def __add__(self, other):
        _check_same(self, other)
        return LaurentMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        _check_same(self, other)
        return LaurentMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return LaurentMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "LaurentMatrix":
        c = Laurent.coerce(c)
        return LaurentMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, LaurentMatrix):
            _check_same(self, other)
            return LaurentMatrix(_matmul(self.rows, other.rows, ZERO))
        if isinstance(other, (int, Fraction, Laurent)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Laurent)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        out = LaurentMatrix.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    # -- invariants ---------------------------------------------------------

    def det(self) -> Laurent:
        return _laplace_det(self.rows, ZERO, ONE)

    def minor(self, i: int, j: int):
        return [[x for c, x in enumerate(r) if c != j] for k, r in enumerate(self.rows) if k != i]

    def adjugate(self) -> "LaurentMatrix":
        n = self.n
        if n == 1:
            return LaurentMatrix([[1]])
        cof = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                d = _laplace_det(self.minor(i, j), ZERO, ONE)
                cof[j][i] = d if (i + j) % 2 == 0 else -d
        return LaurentMatrix(cof)

    def inverse(self, order: int | None = None) -> "LaurentMatrix":
        """
        Inverse via the adjugate.  Exact when det is a monomial; otherwise
        1/det is expanded with `order` extra terms (required argument then).
        """
        d = self.det()
        if d.is_zero():
            raise ValueError("singular matrix")
        if d.is_monomial():
            return self.adjugate().scale(d ** -1)
        if order is None:
            raise ValueError("determinant is not a monomial; pass a truncation order")
        return self.adjugate().scale(d.invert(order))

    def valuation(self):
        vals = [x.valuation for _, _, x in self.entries() if not x.is_zero()]
        return min(vals) if vals else None

    def max_degree(self):
        degs = [x.degree for _, _, x in self.entries() if not x.is_zero()]
        return max(degs) if degs else None

    def truncate(self, deg: int) -> "LaurentMatrix":
        return LaurentMatrix([[x.truncate(deg) for x in r] for r in self.rows])

    def is_integral(self) -> bool:
        return all(x.is_integral() for _, _, x in self.entries())

    def is_constant(self) -> bool:
        return all(x.is_zero() or (x.is_monomial() and x.valuation == 0) for _, _, x in self.entries())

    def at_zero(self):
        """Constant-term matrix (over Q) of an integral matrix."""
        if not self.is_integral():
            raise ValueError("matrix has poles at t=0")
        return [[x.constant_term() for x in r] for r in self.rows]

    def constant_entries(self):
        if not self.is_constant():
            raise ValueError("matrix is not constant")
        return [[x.constant_term() for x in r] for r in self.rows]

    def is_monomial_matrix(self) -> bool:
        n = self.n
        cols = [0] * n
        for r in self.rows:
            nz = [j for j, x in enumerate(r) if not x.is_zero()]
            if len(nz) != 1 or not r[nz[0]].is_monomial():
                return False
            cols[nz[0]] += 1
        return all(c == 1 for c in cols)

    def vdim(self) -> int:
        d = self.det()
        if d.is_zero():
            raise ValueError("singular matrix")
        return -d.valuation

    def is_in_G0(self) -> bool:
        return self.is_integral() and self.det() == ONE

    def is_in_GLnA(self) -> bool:
        return self.is_integral() and self.det().is_unit_of_A()

    def is_iwahori(self, det_one: bool = True) -> bool:
        """
        Membership in the Iwahori subgroup: integral, upper triangular with
        invertible diagonal at t=0, and det 1 (or just a unit of A when
        `det_one` is False).
        """
        if not self.is_integral():
            return False
        z = self.at_zero()
        n = self.n
        for i in range(n):
            if z[i][i] == 0:
                return False
            for j in range(i):
                if z[i][j] != 0:
                    return False
        d = self.det()
        return d == ONE if det_one else d.is_unit_of_A()

    def membership(self, kind: str) -> bool:
        checks = {
            "integral": self.is_integral,
            "G0": self.is_in_G0,
            "Iwahori": self.is_iwahori,
            "GLnA": self.is_in_GLnA,
        }
        if kind not in checks:
            raise ValueError(f"unknown membership class {kind!r}")
        return checks[kind]()

    # -- display ------------------------------------------------------------

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return "LaurentMatrix([" + ", ".join(
            "[" + ", ".join(f"'{x}'" for x in r) + "]" for r in self.rows) + "])"


def _check_same(a: LaurentMatrix, b: LaurentMatrix):
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")


def mat_mul(A: LaurentMatrix, B: LaurentMatrix) -> LaurentMatrix:
    return A * B


def mat_det(A: LaurentMatrix) -> Laurent:
    return A.det()


def membership(A: LaurentMatrix, kind: str) -> bool:
    return A.membership(kind)


def vdim(A: LaurentMatrix) -> int:
    return A.vdim()


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """
    Quotient num/den of Laurent polynomials, compared by cross-multiplication.

    No gcd reduction is attempted; equality and valuation do not need it.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = Laurent.coerce(num), Laurent.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        q = num.exact_div(den) if not num.is_zero() else ZERO
        if q is not None:
            num, den = q, ONE
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else cls(x)

    def __add__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction.coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction.coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Laurent)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash(self.to_laurent()) if self.is_laurent() else hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    @property
    def valuation(self):
        if self.num.is_zero():
            return None
        return self.num.valuation - self.den.valuation

    def is_integral(self) -> bool:
        return self.num.is_zero() or self.valuation >= 0

    def value_at_zero(self) -> Fraction:
        if not self.is_integral():
            raise ValueError("pole at t=0")
        if self.num.is_zero() or self.valuation > 0:
            return Fraction(0)
        return self.num.lead() / self.den.lead()

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> Laurent:
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        return self.num

    def series(self, deg: int) -> Laurent:
        """Laurent expansion at t=0 through t^deg."""
        return self.num.series_div(self.den, deg)

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def ratfunc_matmul(A, B):
    return _matmul(A, B, RationalFunction(0))


def ratfunc_det(A):
    return _laplace_det(A, RationalFunction(0), RationalFunction(1))


# ---------------------------------------------------------------------------
# dense linear algebra over Q


def frac_det(rows) -> Fraction:
    """Determinant of a square rational matrix by exact elimination."""
    a = [[_frac(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        piv = a[c][c]
        det *= piv
        for r in range(c + 1, n):
            f = a[r][c] / piv
            if f:
                ar, ac = a[r], a[c]
                for k in range(c, n):
                    ar[k] -= f * ac[k]
    return det


def frac_solve(A, b) -> list:
    """Solve A x = b exactly; raises ValueError if A is singular."""
    n = len(A)
    a = [[_frac(x) for x in r] + [_frac(y)] for r, y in zip(A, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ValueError("singular system")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c] / piv
                ar, ac = a[r], a[c]
                for k in range(c, n + 1):
                    ar[k] -= f * ac[k]
    return [a[i][n] / a[i][i] for i in range(n)]


def frac_inverse(A) -> list:
    n = len(A)
    cols = [frac_solve(A, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# matrix file format


class MatrixFormatError(ValueError):
    """Malformed matrix document; `line`/`column` locate JSON syntax errors."""

    def __init__(self, msg, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(msg + where)
        self.line, self.column = line, column


def matrix_to_json(M: LaurentMatrix) -> str:
    doc = {"n": M.n, "entries": [[x.to_json() for x in r] for r in M.rows]}
    return json.dumps(doc, indent=1)


def matrix_from_json(text: str) -> LaurentMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    try:
        n = doc["n"]
        rows = doc["entries"]
        if not isinstance(n, int) or n < 1:
            raise MatrixFormatError("'n' must be a positive integer")
        if len(rows) != n or any(len(r) != n for r in rows):
            raise MatrixFormatError(f"'entries' must be a {n}x{n} array")
        out = []
        for i, r in enumerate(rows):
            row = []
            for j, e in enumerate(r):
                try:
                    row.append(Laurent.from_json(e))
                except (KeyError, TypeError, ValueError, ZeroDivisionError) as err:
                    raise MatrixFormatError(f"entry [{i}][{j}]: {err}") from None
            out.append(row)
    except (KeyError, TypeError) as err:
        raise MatrixFormatError(f"missing or mistyped field: {err}") from None
    return LaurentMatrix(out)
