"""
Weyl-group lifts and Bruhat-cell identification for loop-group matrices.

Conventions.  The basis vector v_{i + n k} of the unfolded space is
t^{-k} e_i, so a matrix entry c t^m in position (r, j) sends column j to row
r - n m.  A monomial matrix therefore defines the affine permutation
j -> r - n m, matrix products compose these permutations, and the Iwahori
subgroup (integral, upper triangular with invertible diagonal at t = 0)
becomes exactly the set of n-periodic upper triangular bi-infinite matrices.

Two engines decide the double coset B w B of a matrix M:

* `cell_permutation` column-reduces a finite window of the unfolded matrix
  over Q.  It returns w only and never truncates anything.
* `iwahori_factorize` performs a periodic elimination directly on the
  Laurent entries and returns L, w-dot, U.  Divisions by non-monomial pivots
  are expanded as power series; the result carries a certificate that the
  residual is small enough to force M into B w B.

>>> M = generator_lift(0, 2)
>>> cell_permutation(M)
AffinePermutation(n=2, window=(0, 3))
>>> f = iwahori_factorize(M)
>>> f.w == cell_permutation(M), f.exact
(True, True)
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine_weyl import (
    AffinePermutation, CorootVector, CoxeterWord, coset_min_rep,
)
from .exactalg import (
    Laurent, LaurentMatrix, RationalFunction, ratfunc_det, ONE, ZERO,
)

__all__ = [
    "MonomialMatrix", "IwahoriFactorization", "generator_lift", "word_lift",
    "translation_lift", "perm_lift", "cell_permutation", "iwahori_factorize",
    "grassmannian_cell", "same_coset", "working_truncation", "torus_discrepancy",
    "STRATEGIES", "FactorizationError",
]

STRATEGIES = ("first", "last", "monomial")


class FactorizationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# monomial matrices and lifts


@dataclass(frozen=True)
class MonomialMatrix:
    """One entry coeffs[j] * t^m per column j, placed so the columns realize `perm`."""

    perm: AffinePermutation
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) != self.perm.n or any(c == 0 for c in cs):
            raise ValueError("need one nonzero coefficient per column")
        object.__setattr__(self, "coeffs", cs)

    @property
    def n(self) -> int:
        return self.perm.n

    def positions(self):
        """Yield (row, column, exponent), 0-based row and column."""
        n = self.n
        for j, f in enumerate(self.perm.window):
            r = (f - 1) % n
            yield r, j, (r + 1 - f) // n

    def exponents(self) -> list[int]:
        return [m for _, _, m in self.positions()]

    def to_matrix(self) -> LaurentMatrix:
        rows = [[ZERO] * self.n for _ in range(self.n)]
        for r, j, m in self.positions():
            rows[r][j] = Laurent.monomial(self.coeffs[j], m)
        return LaurentMatrix(rows)

    @classmethod
    def from_matrix(cls, M: LaurentMatrix) -> "MonomialMatrix":
        if not M.is_monomial_matrix():
            raise ValueError("not a monomial matrix")
        n = M.n
        window, coeffs = [0] * n, [0] * n
        for r, j, x in M.entries():
            if not x.is_zero():
                window[j] = r + 1 - n * x.valuation
                coeffs[j] = x.lead()
        return cls(AffinePermutation(n, tuple(window)), tuple(coeffs))


def generator_lift(i: int, n: int) -> LaurentMatrix:
    """Canonical lift of s_i; for i = 0 the corners carry t^{-1} and -t."""
    if not 0 <= i < n:
        raise ValueError(f"letter {i} out of range for n={n}")
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    if i == 0:
        rows[0][0] = rows[n - 1][n - 1] = ZERO
        rows[0][n - 1] = Laurent.t(-1)
        rows[n - 1][0] = Laurent.monomial(-1, 1)
    else:
        a, b = i - 1, i
        rows[a][a] = rows[b][b] = ZERO
        rows[a][b] = ONE
        rows[b][a] = Laurent.coerce(-1)
    return LaurentMatrix(rows)


def word_lift(w: CoxeterWord) -> LaurentMatrix:
    M = LaurentMatrix.identity(w.n)
    for i in w.letters:
        M = M * generator_lift(i, w.n)
    return M


def translation_lift(q: CorootVector) -> LaurentMatrix:
    """diag(t^{-c_1}, ..., t^{-c_n})."""
    return LaurentMatrix.diag([Laurent.t(-c) for c in q.coords])


def perm_lift(w: AffinePermutation) -> LaurentMatrix:
    """The monomial matrix with all coefficients 1 realizing w."""
    return MonomialMatrix(w, (1,) * w.n).to_matrix()


def torus_discrepancy(M: LaurentMatrix, N: LaurentMatrix):
    """
    If M = N * D for a constant diagonal D, return the diagonal of D,
    otherwise None.
    """
    if M.n != N.n:
        return None
    try:
        Ninv = N.inverse()
    except ValueError:
        return None
    D = Ninv * M
    n = M.n
    for i in range(n):
        for j in range(n):
            x = D[i, j]
            if i != j and not x.is_zero():
                return None
            if i == j and not (x.is_monomial() and x.valuation == 0):
                return None
    return [D[i, i].lead() for i in range(n)]


# ---------------------------------------------------------------------------
# exact cell identification


def _check_det(M: LaurentMatrix) -> Laurent:
    d = M.det()
    if d.is_zero():
        raise FactorizationError("singular matrix")
    if d.valuation != 0:
        raise FactorizationError(
            f"determinant must have valuation 0, got t^{d.valuation} leading term")
    return d


def cell_permutation(M: LaurentMatrix) -> AffinePermutation:
    """
    The w with M in B w B, by column reduction of the unfolded matrix.

    Rows below a cutoff R are dropped; column j of the window has its pivot
    in the truncated matrix exactly when w(j) >= R, so R is lowered until
    every column 1..n has found its pivot.
    """
    _check_det(M)
    n = M.n
    vmin, vmax = M.valuation(), M.max_degree()
    spread = vmax - vmin
    R = 1 - n * (vmax + 1)
    while True:
        found = _unfolded_pivots(M, R, vmin)
        if all(p is not None for p in found):
            return AffinePermutation(n, tuple(found))
        R -= n * (spread + 1)


def _unfolded_pivots(M: LaurentMatrix, R: int, vmin: int):
    n = M.n
    # column j + n k reaches row at most n - n*vmin + n*k
    k_lo = -((n - n * vmin - R) // n)
    base = []
    for j in range(n):
        col = {}
        for r in range(n):
            for m, c in M[r, j].terms():
                col[r + 1 - n * m] = c
        base.append(col)
    pivots: dict[int, dict] = {}
    found = [None] * n
    for k in range(k_lo, 1):
        for j in range(n):
            vec = {x + n * k: c for x, c in base[j].items() if x + n * k >= R}
            while vec:
                low = max(vec)
                piv = pivots.get(low)
                if piv is None:
                    pivots[low] = vec
                    if k == 0:
                        found[j] = low
                    break
                f = vec[low] / piv[low]
                for x, c in piv.items():
                    v = vec.get(x, 0) - f * c
                    if v:
                        vec[x] = v
                    else:
                        vec.pop(x, None)
    return found


# ---------------------------------------------------------------------------
# periodic factorization


def working_truncation(M: LaurentMatrix) -> int:
    """Default series precision: largest |exponent| + n^2 + 4, or LOOPCELL_TRUNCATION."""
    env = os.environ.get("LOOPCELL_TRUNCATION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"LOOPCELL_TRUNCATION must be an integer, got {env!r}") from None
    vmin, vmax = M.valuation() or 0, M.max_degree() or 0
    return max(abs(vmin), abs(vmax)) + M.n ** 2 + 4


@dataclass(frozen=True)
class IwahoriFactorization:
    """
    M = L * wdot * U with L, U in the Iwahori subgroup.

    `precision` is None when every division was exact, in which case the
    product is exactly M.  Otherwise L and U are truncated power series and
    the residual L*wdot*U - M has valuation above every exponent of wdot,
    which still forces M into B w B.
    """

    L: LaurentMatrix
    w: AffinePermutation
    wdot: MonomialMatrix
    U: LaurentMatrix
    precision: int | None = None
    strategy: str = "first"
    pivots: tuple = field(default=(), compare=False)

    @property
    def exact(self) -> bool:
        return self.precision is None

    def product(self) -> LaurentMatrix:
        return self.L * self.wdot.to_matrix() * self.U

    def residual(self, M: LaurentMatrix) -> LaurentMatrix:
        return self.product() - M

    def certify(self, M: LaurentMatrix) -> bool:
        det_one = self.exact and M.det() == ONE
        if not (self.L.is_iwahori(det_one) and self.U.is_iwahori(det_one)):
            return False
        E = self.residual(M)
        v = E.valuation()
        if v is None:
            return True
        return not self.exact and v > max(self.wdot.exponents())

    def to_json(self) -> dict:
        from .exactalg import matrix_to_json
        import json
        return {
            "w": list(self.w.window),
            "wdot": [{"row": r + 1, "col": j + 1, "coeff": str(self.wdot.coeffs[j]), "exp": m}
                     for r, j, m in self.wdot.positions()],
            "L": json.loads(matrix_to_json(self.L)),
            "U": json.loads(matrix_to_json(self.U)),
            "precision": self.precision,
        }


def iwahori_factorize(M: LaurentMatrix, strategy: str = "first",
                      precision: int | None = None, max_precision: int = 4096) -> IwahoriFactorization:
    """
    Factor M = L * wdot * U.

    Each step picks, among the remaining rows and columns, an entry whose
    lowest term sits deepest below the diagonal of the unfolded matrix
    (depth r - j - n*val).  Such an entry is alone in its south-west
    quadrant, so clearing its column with row operations and its row with
    column operations only uses multipliers that lie in the Iwahori
    subgroup.  `strategy` breaks ties: 'first' takes the smallest column,
    'last' the largest, 'monomial' prefers monomial pivots.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    _check_det(M)
    P = precision if precision is not None else working_truncation(M)
    while True:
        fac = _eliminate(M, strategy, P)
        if fac.certify(M):
            return fac
        if P >= max_precision:
            raise FactorizationError("factorization could not be certified")
        P *= 2


def _eliminate(M: LaurentMatrix, strategy: str, P: int) -> IwahoriFactorization:
    n = M.n
    A = [list(r) for r in M.rows]
    L = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    U = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rows, cols = set(range(n)), set(range(n))
    exact = True
    pivots = []

    def clip(x: Laurent) -> Laurent:
        # once a series has entered, terms beyond P carry no information
        return x if exact else x.truncate(P)

    def divide(x: Laurent, e: Laurent) -> Laurent:
        nonlocal exact
        q = x.exact_div(e)
        if q is None:
            exact = False
            q = x.series_div(e, P)
        return q

    for _ in range(n):
        best, cands = None, []
        for r in rows:
            for j in cols:
                x = A[r][j]
                if x.is_zero():
                    continue
                d = r - j - n * x.valuation
                if best is None or d > best:
                    best, cands = d, [(r, j)]
                elif d == best:
                    cands.append((r, j))
        if not cands:
            raise FactorizationError("singular matrix")
        if strategy == "first":
            rs, js = min(cands, key=lambda p: p[1])
        elif strategy == "last":
            rs, js = max(cands, key=lambda p: p[1])
        else:
            rs, js = min(cands, key=lambda p: (not A[p[0]][p[1]].is_monomial(), p[1]))
        e = A[rs][js]
        pivots.append((rs, js))
        for r in rows - {rs}:
            x = A[r][js]
            if x.is_zero():
                continue
            c = divide(x, e)
            _assert_admissible(c, r, rs)
            for j in cols:
                if j == js:
                    A[r][j] = ZERO
                elif not A[rs][j].is_zero():
                    A[r][j] = clip(A[r][j] - c * A[rs][j])
            for i in range(n):
                if not L[i][r].is_zero():
                    L[i][rs] = clip(L[i][rs] + c * L[i][r])
        for j in cols - {js}:
            y = A[rs][j]
            if y.is_zero():
                continue
            d = divide(y, e)
            _assert_admissible(d, js, j)
            A[rs][j] = ZERO
            for k in range(n):
                if not U[j][k].is_zero():
                    U[js][k] = clip(U[js][k] + d * U[j][k])
        rows.discard(rs)
        cols.discard(js)

    window, coeffs = [0] * n, [0] * n
    for rs, js in pivots:
        e = A[rs][js]
        v, c = e.valuation, e.lead()
        window[js] = rs + 1 - n * v
        coeffs[js] = c
        if not e.is_monomial():
            u = e * Laurent.monomial(1 / c, -v)
            U[js] = [u * x for x in U[js]]
    wdot = MonomialMatrix(AffinePermutation(n, tuple(window)), tuple(coeffs))
    Lm, Um = LaurentMatrix(L), LaurentMatrix(U)
    if not exact:
        Lm, Um = Lm.truncate(P), Um.truncate(P)
    return IwahoriFactorization(Lm, wdot.perm, wdot, Um,
                                None if exact else P, strategy, tuple(pivots))


def _assert_admissible(c: Laurent, r: int, s: int):
    """Id + c E_{rs} must lie in the Iwahori subgroup."""
    if c.is_zero():
        return
    need = 1 if r > s else 0
    if c.valuation < need:
        raise AssertionError(f"inadmissible multiplier {c} at ({r},{s})")


def grassmannian_cell(M: LaurentMatrix) -> AffinePermutation:
    """Minimal representative labelling the cell B w G_0 containing M."""
    return coset_min_rep(cell_permutation(M), range(1, M.n))


# ---------------------------------------------------------------------------
# coset comparison


def same_coset(g1: LaurentMatrix, g2: LaurentMatrix, kind: str = "G0") -> bool:
    """
    Whether g2^{-1} g1 lies in `kind` (G0, Iwahori or GLnA).

    g2^{-1} g1 = adj(g2) g1 / det(g2) is handled as a matrix of rational
    functions, so the decision is exact even when det(g2) is not a monomial.
    """
    if kind not in ("G0", "Iwahori", "GLnA"):
        raise ValueError(f"unknown coset class {kind!r}")
    d1, d2 = g1.det(), g2.det()
    if d1.is_zero() or d2.is_zero():
        raise ValueError("singular matrix")
    X = g2.adjugate() * g1
    vd = d2.valuation
    for _, _, x in X.entries():
        if not x.is_zero() and x.valuation < vd:
            return False
    ratio = RationalFunction(d1, d2)
    if kind == "GLnA":
        return ratio.valuation == 0
    if ratio != RationalFunction(1):
        return False
    if kind == "G0":
        return True
    n = g1.n
    for i in range(n):
        for j in range(i + 1):
            c = X[i, j][vd]
            if (i == j) == (c == 0):
                return False
    return True
