"""
Concrete constructions on loop-group matrices: the nilpotent-to-lattice map
psi(N) = Id + t^{-1} N + t^{-2} N^2 + ..., the cotangent maps phi and psi_p,
the linear system that produces g in G_0 and h in the Iwahori subgroup with
g * kappa = psi(Y) * h, and the rank-3 case analysis for
p(Y) = 1 - t^{-a} q Y - t^{-b} r Y^2.

>>> Y = NilpotentUpper.from_dict(2, {(1, 2): 3})
>>> sol = crucial_solve(Y)
>>> sol.A, sol.X
([[Fraction(-3, 1)]], [Fraction(1, 3)])
>>> print(sol.h)
[   3    0 ]
[  -t  1/3 ]
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .affine_weyl import (
    AffinePermutation, CorootVector, bruhat_leq, build_kappa, build_kappa0,
    coset_min_rep, perm_length, translation_length, translation_perm, word_to_perm,
    generator,
)
from .exactalg import (
    Laurent, LaurentMatrix, RationalFunction, frac_det, frac_solve,
    ratfunc_det, ratfunc_matmul, ONE, ZERO,
)
from .loopgroup import (
    MonomialMatrix, cell_permutation, grassmannian_cell, iwahori_factorize,
    same_coset,
)

__all__ = [
    "NilpotentUpper", "CotangentPoint", "PolynomialMapSpec", "CrucialSolution",
    "RankThreeResult", "lusztig_point", "phi_point", "psi_p_point", "crucial_system",
    "crucial_solve", "an_det_formula", "kappa_diag", "springer_check", "theta",
    "membership_kappa", "lusztig_membership", "ctgt_membership",
    "cotangent_equivalent", "section7_case", "rank_three_gp", "delete_block_heads",
    "block_heads", "random_nilpotent_upper", "random_sl", "random_borel",
    "random_cotangent_point", "is_constant_nilpotent",
]

T = Laurent.t()


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class NilpotentUpper:
    """Strictly upper triangular rational matrix Y = sum a_ij E_ij."""

    n: int
    a: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.a)
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ValueError("entry array must be n x n")
        if any(rows[i][j] for i in range(self.n) for j in range(i + 1)):
            raise ValueError("Y must be strictly upper triangular")
        object.__setattr__(self, "a", rows)

    @classmethod
    def from_dict(cls, n: int, entries: Mapping[tuple[int, int], object]) -> "NilpotentUpper":
        """Entries keyed by 1-based (i, j) with i < j."""
        a = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in entries.items():
            a[i - 1][j - 1] = Fraction(v)
        return cls(n, tuple(map(tuple, a)))

    @classmethod
    def from_matrix(cls, M: LaurentMatrix) -> "NilpotentUpper":
        return cls(M.n, tuple(tuple(r) for r in M.constant_entries()))

    @classmethod
    def zero(cls, n: int) -> "NilpotentUpper":
        return cls(n, tuple((Fraction(0),) * n for _ in range(n)))

    def entry(self, i: int, j: int) -> Fraction:
        """a_ij with 1-based indices."""
        return self.a[i - 1][j - 1]

    def superdiagonal(self) -> list[Fraction]:
        return [self.a[i][i + 1] for i in range(self.n - 1)]

    @property
    def generic(self) -> bool:
        return all(x != 0 for x in self.superdiagonal())

    def matrix(self) -> LaurentMatrix:
        return LaurentMatrix(self.a)


@dataclass(frozen=True)
class CotangentPoint:
    """Representative (g, Y) of a point of G x^B b_u."""

    g: LaurentMatrix
    Y: NilpotentUpper

    def __post_init__(self):
        if not self.g.is_constant():
            raise ValueError("g must have constant entries")
        if self.g.det() != ONE:
            raise ValueError("g must have determinant 1")
        if self.g.n != self.Y.n:
            raise ValueError("rank mismatch")

    def act(self, g0: LaurentMatrix) -> "CotangentPoint":
        """Left translation by a constant g0."""
        return CotangentPoint(g0 * self.g, self.Y)

    def twist(self, b: LaurentMatrix) -> "CotangentPoint":
        """The equivalent representative (g b, b^{-1} Y b)."""
        Y = b.inverse() * self.Y.matrix() * b
        return CotangentPoint(self.g * b, NilpotentUpper.from_matrix(Y))


@dataclass(frozen=True)
class PolynomialMapSpec:
    """p(Y) = 1 + sum_i coeffs[i-1] Y^i."""

    coeffs: tuple[Laurent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Laurent.coerce(c) for c in self.coeffs))

    @classmethod
    def lusztig(cls, n: int) -> "PolynomialMapSpec":
        """p_i = t^{-i}, the expansion of (1 - t^{-1} Y)^{-1}."""
        return cls(tuple(Laurent.t(-i) for i in range(1, n)))

    def evaluate(self, Y: LaurentMatrix) -> LaurentMatrix:
        out = LaurentMatrix.identity(Y.n)
        power = LaurentMatrix.identity(Y.n)
        for c in self.coeffs:
            power = power * Y
            out = out + power.scale(c)
        return out


# ---------------------------------------------------------------------------
# the maps


def is_constant_nilpotent(N: LaurentMatrix) -> bool:
    return N.is_constant() and (N ** N.n) == LaurentMatrix.zero(N.n)


def lusztig_point(N: LaurentMatrix | NilpotentUpper) -> LaurentMatrix:
    """Id + t^{-1} N + t^{-2} N^2 + ..., a finite sum for nilpotent N."""
    if isinstance(N, NilpotentUpper):
        N = N.matrix()
    if not N.is_constant():
        raise ValueError("N must have constant entries")
    if not is_constant_nilpotent(N):
        raise ValueError("N is not nilpotent")
    return PolynomialMapSpec.lusztig(N.n).evaluate(N)


def phi_point(x: CotangentPoint) -> LaurentMatrix:
    return x.g * lusztig_point(x.Y)


def psi_p_point(p: PolynomialMapSpec, x: CotangentPoint) -> LaurentMatrix:
    return x.g * p.evaluate(x.Y.matrix())


def theta(x: CotangentPoint) -> tuple[LaurentMatrix, LaurentMatrix]:
    """(g, g Y g^{-1}); the first component matters only modulo B."""
    return x.g, x.g * x.Y.matrix() * x.g.inverse()


def _in_borel(b: LaurentMatrix) -> bool:
    if not b.is_constant():
        return False
    z = b.constant_entries()
    n = b.n
    return all(z[i][j] == 0 for i in range(n) for j in range(i)) and b.det() == ONE


def cotangent_equivalent(x1: CotangentPoint, x2: CotangentPoint) -> bool:
    """Whether x1 = (g2 b, b^{-1} Y2 b) for b = g2^{-1} g1 upper triangular."""
    b = x2.g.inverse() * x1.g
    if not _in_borel(b):
        return False
    return b.inverse() * x2.Y.matrix() * b == x1.Y.matrix()


def springer_check(x: CotangentPoint, b: LaurentMatrix | None = None) -> bool:
    """
    psi(g Y g^{-1})^{-1} phi(g, Y) lies in G_0, and theta gives the same
    point on the twisted representative (g b, b^{-1} Y b).
    """
    n = x.Y.n
    if b is None:
        b = LaurentMatrix([[1 if j in (i, i + 1) else 0 for j in range(n)] for i in range(n)])
    g, N = theta(x)
    if not same_coset(phi_point(x), lusztig_point(N), "G0"):
        return False
    x2 = x.twist(b)
    g2, N2 = theta(x2)
    return N2 == N and _in_borel(g.inverse() * g2)


def lusztig_membership(N: LaurentMatrix | NilpotentUpper) -> bool:
    """grassmannian_cell(psi(N)) <= kappa."""
    n = N.n
    kappa = coset_min_rep(word_to_perm(build_kappa(n)), range(1, n))
    return bruhat_leq(grassmannian_cell(lusztig_point(N)), kappa)


def ctgt_membership(x: CotangentPoint, engine: str = "unfold") -> bool:
    """The Iwahori cell of phi(x) lies below kappa_0."""
    M = phi_point(x)
    w = cell_permutation(M) if engine == "unfold" else iwahori_factorize(M).w
    return bruhat_leq(w, word_to_perm(build_kappa0(x.Y.n)))


def membership_kappa(obj) -> bool:
    """Nilpotent matrices go to the Grassmannian check, cotangent points to the flag check."""
    if isinstance(obj, CotangentPoint):
        return ctgt_membership(obj)
    return lusztig_membership(obj)


# ---------------------------------------------------------------------------
# the linear system


def kappa_diag(n: int) -> LaurentMatrix:
    return LaurentMatrix.diag([T] * (n - 1) + [Laurent.t(-(n - 1))])


def an_det_formula(a: Sequence, n: int) -> Fraction:
    """(-1)^{C(n,2)} prod a_{i,i+1}^{n-i} for superdiagonal values a."""
    if len(a) != n - 1:
        raise ValueError("need n-1 superdiagonal values")
    out = Fraction((-1) ** comb(n, 2))
    for i, x in enumerate(a, start=1):
        out *= Fraction(x) ** (n - i)
    return out


def crucial_system(Y: NilpotentUpper):
    """
    Linear system for the last column of g.

    Unknowns g_{kn}^{(i)} (coefficient of t^i in g_{kn}), k = 2..n,
    i = k-1..n-1, ordered by k then i.  Equations (j, i), j = 1..n-1,
    i = j..n-1, ordered the same way, state that the coefficient of t^{i-n}
    in h_{jn} vanishes.  Returns (A, B, row_labels, col_labels).
    """
    n = Y.n
    cols = [(k, i) for k in range(2, n + 1) for i in range(k - 1, n)]
    rows = [(j, i) for j in range(1, n) for i in range(j, n)]
    cidx = {c: m for m, c in enumerate(cols)}
    A = [[Fraction(0)] * len(cols) for _ in rows]
    B = [Fraction(0)] * len(rows)
    for m, (j, i) in enumerate(rows):
        if j >= 2:
            A[m][cidx[(j, i - 1)]] = Fraction(1)
        elif i == 1:
            B[m] = Fraction(-1)     # g_{1n} = 1 moved to the right-hand side
        for k in range(j + 1, i + 2):
            A[m][cidx[(k, i)]] = -Y.entry(j, k)
    return A, B, rows, cols


def block_heads(n: int) -> list[int]:
    """0-based positions of the first row (or column) of each block."""
    out, pos = [], 0
    for size in range(n - 1, 0, -1):
        out.append(pos)
        pos += size
    return out


def delete_block_heads(A: Sequence[Sequence], n: int) -> list[list]:
    drop = set(block_heads(n))
    return [[x for c, x in enumerate(r) if c not in drop] for m, r in enumerate(A) if m not in drop]


@dataclass(frozen=True)
class CrucialSolution:
    g: LaurentMatrix
    h: LaurentMatrix
    A: list
    B: list
    X: list
    row_labels: list = field(default_factory=list)
    col_labels: list = field(default_factory=list)

    def det_A(self) -> Fraction:
        return frac_det(self.A)

    def verify(self, Y: NilpotentUpper) -> bool:
        n = Y.n
        return (self.g.membership("G0") and self.h.membership("Iwahori")
                and self.g * kappa_diag(n) == lusztig_point(Y) * self.h)


def crucial_solve(Y: NilpotentUpper) -> CrucialSolution:
    """g in G_0 and h in the Iwahori subgroup with g * kappa_diag = psi(Y) * h."""
    if not Y.generic:
        raise ValueError("superdiagonal vanishes")
    n = Y.n
    A, B, rows, cols = crucial_system(Y)
    X = frac_solve(A, B)
    last = {k: {} for k in range(2, n + 1)}
    for (k, i), x in zip(cols, X):
        last[k][i] = x
    g = [[ZERO] * n for _ in range(n)]
    g[0][n - 1] = ONE
    for i in range(1, n):
        g[i][i - 1] = Laurent.coerce(-1)
    for k in range(2, n + 1):
        g[k - 1][n - 1] = g[k - 1][n - 1] + Laurent.from_terms(last[k])
    g = LaurentMatrix(g)
    h = (LaurentMatrix.identity(n) - Y.matrix().scale(Laurent.t(-1))) * g * kappa_diag(n)
    sol = CrucialSolution(g, h, A, B, X, rows, cols)
    if not sol.verify(Y):
        raise AssertionError("solution of the linear system failed verification")
    return sol


# ---------------------------------------------------------------------------
# the rank-3 case analysis


@dataclass(frozen=True)
class RankThreeResult:
    case_id: int
    C: list
    D: list
    monomial_result: LaurentMatrix
    w: AffinePermutation
    length: int
    coroot: CorootVector
    lambda_length: int
    identity_holds: bool
    C_D_in_iwahori: bool
    factorized_w: AffinePermutation


def rank_three_gp(a: int, b: int | None, q, r) -> LaurentMatrix:
    """g p(Y) for the fixed regular Y and anti-diagonal g in rank 3."""
    q, r = Laurent.coerce(q), Laurent.coerce(r)
    qa = q * Laurent.t(-a)
    rb = ZERO if r.is_zero() else r * Laurent.t(-b)
    return LaurentMatrix([[0, 0, -1], [0, -1, qa], [-1, qa, rb]])


def _ratfunc_in_iwahori(M) -> bool:
    for i in range(3):
        for j in range(3):
            x = M[i][j]
            if not x.is_integral():
                return False
            v = x.value_at_zero()
            if i > j and v != 0 or i == j and v == 0:
                return False
    return ratfunc_det(M) == RationalFunction(1)


def section7_case(a: int, b: int | None, q, r) -> RankThreeResult:
    """
    Classify (a, b, q, r), build C and D in the Iwahori subgroup with
    C g p(Y) D monomial, and read off w and its length.
    """
    q, r = Laurent.coerce(q), Laurent.coerce(r)
    if a < 1:
        raise ValueError("a must be at least 1")
    if not q.is_integral() or q.constant_term() == 0:
        raise ValueError("q must be a unit of A")
    if not r.is_zero() and (not r.is_integral() or r.constant_term() == 0):
        raise ValueError("r must be 0 or a unit of A")
    if not r.is_zero() and (b is None or b < 1):
        raise ValueError("b must be a positive integer when r is nonzero")

    R = RationalFunction
    tp = lambda k: R(Laurent.t(k))
    qq, rr = R(q), R(r)
    if r.is_zero() or b <= a:
        case = 1
        den = qq * qq if r.is_zero() else rr * tp(2 * a - b) + qq * qq
        rt = R(0) if r.is_zero() else rr * tp(a - b)
        C = [[den, qq * tp(a), tp(2 * a)],
             [R(0), qq / den, tp(a) / den],
             [R(0), R(0), R(1) / qq]]
        D = [[R(1), R(0), R(0)],
             [qq * tp(a) / den, R(1), -rt / qq],
             [tp(2 * a) / den, R(0), R(1)]]
        result = [[Laurent.monomial(-1, 2 * a), 0, 0], [0, 0, Laurent.t(-a)], [0, Laurent.t(-a), 0]]
        coroot = CorootVector.from_simple_coroots([-2 * a, -a])
        tail = generator(2, 3)
    elif b < 2 * a:
        case = 2
        den = rr * tp(2 * a - b) + qq * qq
        C = [[-den, -qq * tp(a), -tp(2 * a)],
             [R(0), -rr / den, qq * tp(b - a) / den],
             [R(0), R(0), R(1) / rr]]
        D = [[R(1), R(0), R(0)],
             [tp(a) * qq / den, R(1), R(0)],
             [tp(2 * a) / den, -qq * tp(b - a) / rr, R(1)]]
        result = [[Laurent.t(2 * a), 0, 0], [0, Laurent.t(b - 2 * a), 0], [0, 0, Laurent.t(-b)]]
        coroot = CorootVector.from_simple_coroots([-2 * a, -b])
        tail = None
    elif b == 2 * a and (q * q + r).is_zero():
        case = 3
        C = [[qq, tp(a), R(0)],
             [R(0), qq, tp(a)],
             [R(0), R(0), R(1) / (qq * qq)]]
        D = [[R(1), R(0), R(0)],
             [R(0), R(1), R(0)],
             [-tp(2 * a) / (qq * qq), tp(a) / qq, R(1)]]
        result = [[0, Laurent.monomial(-1, a), 0], [Laurent.monomial(-1, a), 0, 0],
                  [0, 0, Laurent.monomial(-1, -2 * a)]]
        coroot = CorootVector.from_simple_coroots([-a, -2 * a])
        tail = generator(1, 3)
    else:
        case = 4
        den = rr + qq * qq * tp(b - 2 * a)
        if den.value_at_zero() == 0:
            raise ValueError("q(0)^2 + r(0) vanishes, so r + q^2 t^(b-2a) is not a unit of A")
        C = [[-den, -qq * tp(b - a), -tp(b)],
             [R(0), -rr / den, qq * tp(b - a) / den],
             [R(0), R(0), R(1) / rr]]
        D = [[R(1), R(0), R(0)],
             [qq * tp(b - a) / den, R(1), R(0)],
             [tp(b) / den, -qq * tp(b - a) / rr, R(1)]]
        result = [[Laurent.t(b), 0, 0], [0, 1, 0], [0, 0, Laurent.t(-b)]]
        coroot = CorootVector.from_simple_coroots([-b, -b])
        tail = None

    gp = rank_three_gp(a, b, q, r)
    gpR = [[R(x) for x in row] for row in gp.rows]
    prod = ratfunc_matmul(ratfunc_matmul(C, gpR), D)
    result = LaurentMatrix(result)
    holds = all(prod[i][j] == R(result[i, j]) for i in range(3) for j in range(3))
    in_iwahori = _ratfunc_in_iwahori(C) and _ratfunc_in_iwahori(D)

    w = MonomialMatrix.from_matrix(result).perm
    lam = translation_perm(coroot)
    expected = lam if tail is None else lam * tail
    if w != expected:
        raise AssertionError(f"monomial result realizes {w}, expected {expected}")
    return RankThreeResult(
        case_id=case, C=C, D=D, monomial_result=result, w=w, length=perm_length(w),
        coroot=coroot, lambda_length=translation_length(coroot),
        identity_holds=holds, C_D_in_iwahori=in_iwahori,
        factorized_w=cell_permutation(gp),
    )


# ---------------------------------------------------------------------------
# random samples


def _small_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if x or not nonzero:
            return x


def random_nilpotent_upper(n: int, rng: random.Random, generic: bool = True) -> NilpotentUpper:
    entries = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            entries[(i, j)] = _small_rational(rng, nonzero=generic and j == i + 1)
    return NilpotentUpper.from_dict(n, entries)


def random_borel(n: int, rng: random.Random) -> LaurentMatrix:
    """Random constant upper triangular matrix of determinant 1."""
    diag = [_small_rational(rng, nonzero=True) for _ in range(n - 1)]
    prod = Fraction(1)
    for d in diag:
        prod *= d
    diag.append(1 / prod)
    return LaurentMatrix([[diag[i] if i == j else (_small_rational(rng) if j > i else 0)
                           for j in range(n)] for i in range(n)])


def random_sl(n: int, rng: random.Random, generic: bool = False) -> LaurentMatrix:
    """
    Random element of SL_n(Q): signed permutation times lower unipotent times
    Borel.  With `generic`, the permutation is trivial and every entry below
    the diagonal of the unipotent factor is nonzero, which keeps g away from
    the Borel subgroup.
    """
    perm = list(range(n))
    if not generic:
        rng.shuffle(perm)
    P = [[0] * n for _ in range(n)]
    for i, p in enumerate(perm):
        P[i][p] = 1
    P = LaurentMatrix(P)
    if P.det() != ONE:
        P = LaurentMatrix.diag([-1] + [1] * (n - 1)) * P
    def low():
        return rng.choice([-3, -2, -1, 1, 2, 3]) if generic else rng.randint(-3, 3)
    Lo = LaurentMatrix([[1 if i == j else (low() if j < i else 0)
                         for j in range(n)] for i in range(n)])
    return P * Lo * random_borel(n, rng)


def random_cotangent_point(n: int, rng: random.Random, generic: bool = True) -> CotangentPoint:
    return CotangentPoint(random_sl(n, rng), random_nilpotent_upper(n, rng, generic))
