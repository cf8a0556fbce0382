"""
The affine Weyl group of type A~_{n-1} as affine permutations.

An element is a bijection f of the integers with f(i+n) = f(i) + n and
sum(f(i) - i) = 0, stored by its window [f(1), ..., f(n)].  Words multiply
left to right as functions, so the word (i_1, ..., i_k) is the composite
s_{i_1} o ... o s_{i_k}.  Right multiplication by s_i swaps positions i and
i+1 of the window (position 0 being f(n) - n).

Affine roots r*delta + e_i - e_j are identified with eps_i - eps_{j + n r},
where eps_{a + n k} = e_a - k*delta; a permutation acts by eps_a -> eps_{f(a)}.

>>> kappa = word_to_perm(build_kappa(3))
>>> kappa.window, perm_length(kappa)
((-2, -1, 9), 6)
>>> act_on_root(kappa, simple_root(2, 3))
AffineRoot(n=3, level=3, finite_part=(2, 3))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

__all__ = [
    "CoxeterWord", "AffinePermutation", "AffineRoot", "CorootVector",
    "word_to_perm", "perm_length", "greedy_reduced_word", "bruhat_leq",
    "act_on_root", "translation_perm", "translation_length",
    "length_increase_test", "coset_min_rep", "build_tau", "build_kappa",
    "build_kappa0", "longest_word", "simple_root", "delta", "finite_root",
    "finite_reflection", "generator", "right_descents", "left_descents",
    "pairing", "subword_elements",
]


@dataclass(frozen=True)
class CoxeterWord:
    """A word in the simple reflections s_0, ..., s_{n-1}."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank parameter n must be positive")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        bad = [x for x in self.letters if not 0 <= x < self.n]
        if bad:
            raise ValueError(f"letter {bad[0]} out of range for n={self.n}")

    @classmethod
    def parse(cls, n: int, text: str) -> "CoxeterWord":
        """Parse a space-separated letter list; an empty string or 'e' is the identity."""
        text = text.strip()
        if text in ("", "e", "ε"):
            return cls(n, ())
        return cls(n, tuple(int(tok) for tok in text.split()))

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "CoxeterWord") -> "CoxeterWord":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return CoxeterWord(self.n, self.letters + other.letters)

    def __mul__(self, k: int) -> "CoxeterWord":
        return CoxeterWord(self.n, self.letters * k)

    def inverse(self) -> "CoxeterWord":
        return CoxeterWord(self.n, self.letters[::-1])

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "e"


@dataclass(frozen=True)
class AffinePermutation:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.window)
        object.__setattr__(self, "window", w)
        n = self.n
        if len(w) != n:
            raise ValueError(f"window must have length {n}")
        if sorted(x % n for x in w) != list(range(n)):
            raise ValueError(f"window {list(w)} has repeated residues mod {n}")
        if sum(w) != n * (n + 1) // 2:
            raise ValueError(f"window {list(w)} does not sum to {n * (n + 1) // 2}")

    @classmethod
    def identity(cls, n: int) -> "AffinePermutation":
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, x: int) -> int:
        q, r = divmod(x - 1, self.n)
        return self.window[r] + q * self.n

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        """Composition self o other."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return AffinePermutation(self.n, tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "AffinePermutation":
        n = self.n
        out = [0] * n
        for i, v in enumerate(self.window, start=1):
            q, r = divmod(v - 1, n)
            out[r] = i - q * n
        return AffinePermutation(n, tuple(out))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def length(self) -> int:
        return perm_length(self)

    def right_multiply(self, i: int) -> "AffinePermutation":
        """self * s_i, computed by swapping window positions."""
        n, w = self.n, list(self.window)
        if i == 0:
            w[0], w[n - 1] = w[n - 1] - n, w[0] + n
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return AffinePermutation(n, tuple(w))

    def left_multiply(self, i: int) -> "AffinePermutation":
        """s_i * self."""
        return generator(i, self.n) * self

    def __str__(self):
        return "[" + ",".join(map(str, self.window)) + "]"


def generator(i: int, n: int) -> AffinePermutation:
    if not 0 <= i < n:
        raise ValueError(f"letter {i} out of range for n={n}")
    return AffinePermutation.identity(n).right_multiply(i)


def word_to_perm(w: CoxeterWord) -> AffinePermutation:
    p = AffinePermutation.identity(w.n)
    for i in w.letters:
        p = p.right_multiply(i)
    return p


def perm_length(w: AffinePermutation) -> int:
    """Number of affine inversions."""
    n, f = w.n, w.window
    return sum(abs((f[j] - f[i]) // n) for i, j in combinations(range(n), 2))


def right_descents(w: AffinePermutation) -> list[int]:
    n, f = w.n, w.window
    out = [0] if f[n - 1] - n > f[0] else []
    out += [i for i in range(1, n) if f[i - 1] > f[i]]
    return out


def left_descents(w: AffinePermutation) -> list[int]:
    return right_descents(w.inverse())


def greedy_reduced_word(w: AffinePermutation) -> CoxeterWord:
    """Reduced word obtained by repeatedly stripping the smallest right descent."""
    letters = []
    while not w.is_identity():
        i = right_descents(w)[0]
        letters.append(i)
        w = w.right_multiply(i)
    return CoxeterWord(w.n, tuple(reversed(letters)))


def bruhat_leq(u: AffinePermutation, w: AffinePermutation) -> bool:
    """
    Bruhat order.  If s is a right descent of w, then u <= w iff
    min(u, us) <= ws; this recursion runs along a reduced word of w.
    """
    if u.n != w.n:
        raise ValueError("rank mismatch")
    return _bruhat_leq(u.n, u.window, w.window)


@lru_cache(maxsize=200_000)
def _bruhat_leq(n: int, u: tuple, w: tuple) -> bool:
    up, wp = AffinePermutation(n, u), AffinePermutation(n, w)
    lu, lw = perm_length(up), perm_length(wp)
    if lu > lw:
        return False
    if lu == lw:
        return u == w
    if lu == 0:
        return True
    s = right_descents(wp)[0]
    ws = wp.right_multiply(s)
    us = up.right_multiply(s)
    if perm_length(us) < lu:
        up = us
    return _bruhat_leq(n, up.window, ws.window)


def subword_elements(word: CoxeterWord) -> set:
    """All elements expressible as subwords of `word`; an oracle for Bruhat order."""
    n = word.n
    elems = {AffinePermutation.identity(n)}
    for i in word.letters:
        elems |= {e.right_multiply(i) for e in elems}
    return elems


# ---------------------------------------------------------------------------
# roots


@dataclass(frozen=True)
class AffineRoot:
    """
    level*delta + e_i - e_j, with finite_part = (i, j), or a nonzero multiple
    of delta when finite_part is None.
    """

    n: int
    level: int
    finite_part: tuple[int, int] | None = None

    def __post_init__(self):
        fp = self.finite_part
        if fp is None:
            if self.level == 0:
                raise ValueError("zero is not a root")
        else:
            i, j = fp
            if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"bad finite part {fp} for n={self.n}")
            object.__setattr__(self, "finite_part", (int(i), int(j)))

    @property
    def is_real(self) -> bool:
        return self.finite_part is not None

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        i, j = self.finite_part
        return i < j

    def _vector(self):
        v = [0] * self.n
        if self.finite_part:
            i, j = self.finite_part
            v[i - 1] += 1
            v[j - 1] -= 1
        return v

    @classmethod
    def _from_vector(cls, n: int, level: int, v: Sequence[int]) -> "AffineRoot":
        nz = [(k + 1, c) for k, c in enumerate(v) if c]
        if not nz:
            return cls(n, level)
        if len(nz) == 2 and sorted(c for _, c in nz) == [-1, 1]:
            i = next(k for k, c in nz if c == 1)
            j = next(k for k, c in nz if c == -1)
            return cls(n, level, (i, j))
        raise ValueError("result is not a root")

    def __add__(self, other: "AffineRoot") -> "AffineRoot":
        """Sum, defined when the result is again a root."""
        v = [a + b for a, b in zip(self._vector(), other._vector())]
        return AffineRoot._from_vector(self.n, self.level + other.level, v)

    def __neg__(self):
        fp = self.finite_part
        return AffineRoot(self.n, -self.level, fp[::-1] if fp else None)

    def __str__(self):
        parts = []
        if self.level:
            parts.append("delta" if self.level == 1 else f"{self.level}delta")
        if self.finite_part:
            i, j = self.finite_part
            parts.append(f"e{i}-e{j}")
        return " + ".join(parts)


def simple_root(i: int, n: int) -> AffineRoot:
    if not 0 <= i < n:
        raise ValueError(f"index {i} out of range for n={n}")
    if i == 0:
        return AffineRoot(n, 1, (n, 1))
    return AffineRoot(n, 0, (i, i + 1))


def delta(n: int) -> AffineRoot:
    return AffineRoot(n, 1, None)


def finite_root(i: int, j: int, n: int) -> AffineRoot:
    return AffineRoot(n, 0, (i, j))


def _eps(n: int, x: int):
    k, r = divmod(x - 1, n)
    return r + 1, k


def act_on_root(w: Union[CoxeterWord, AffinePermutation], r: AffineRoot) -> AffineRoot:
    if isinstance(w, CoxeterWord):
        w = word_to_perm(w)
    if w.n != r.n:
        raise ValueError("rank mismatch")
    if not r.is_real:
        return r
    n = w.n
    i, j = r.finite_part
    a, ka = _eps(n, w(i))
    b, kb = _eps(n, w(j + n * r.level))
    # eps_a - ka delta - (eps_b - kb delta)
    return AffineRoot(n, kb - ka, (a, b))


# ---------------------------------------------------------------------------
# translations


@dataclass(frozen=True)
class CorootVector:
    """q = sum c_i e_i with sum c_i = 0."""

    coords: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", c)
        if sum(c) != 0:
            raise ValueError("coroot coordinates must sum to zero")

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, n: int) -> "CorootVector":
        return cls((0,) * n)

    @classmethod
    def simple(cls, i: int, n: int) -> "CorootVector":
        c = [0] * n
        c[i - 1], c[i] = 1, -1
        return cls(tuple(c))

    @classmethod
    def theta(cls, n: int) -> "CorootVector":
        c = [0] * n
        c[0], c[-1] = 1, -1
        return cls(tuple(c))

    @classmethod
    def from_simple_coroots(cls, ks: Sequence[int]) -> "CorootVector":
        """sum k_i alpha_i^vee, i = 1..n-1."""
        n = len(ks) + 1
        c = [0] * n
        for i, k in enumerate(ks):
            c[i] += k
            c[i + 1] -= k
        return cls(tuple(c))

    def __add__(self, other):
        return CorootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CorootVector(tuple(-a for a in self.coords))


def pairing(alpha: AffineRoot, q: CorootVector) -> int:
    """alpha(q) for a real root; delta pairs to zero."""
    if not alpha.is_real:
        return 0
    i, j = alpha.finite_part
    return q.coords[i - 1] - q.coords[j - 1]


def translation_perm(q: CorootVector) -> AffinePermutation:
    n = q.n
    return AffinePermutation(n, tuple(i + 1 + n * c for i, c in enumerate(q.coords)))


def translation_length(q: CorootVector) -> int:
    c = q.coords
    return sum(abs(c[i] - c[j]) for i, j in combinations(range(len(c)), 2))


def finite_reflection(i: int, j: int, n: int) -> AffinePermutation:
    """The transposition s_alpha for alpha = e_i - e_j."""
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return AffinePermutation(n, tuple(w))


def length_increase_test(q: CorootVector, alpha: AffineRoot) -> bool:
    """Whether l(lambda_q s_alpha) > l(lambda_q), decided on permutations."""
    if alpha.level != 0 or not alpha.is_real or not alpha.is_positive():
        raise ValueError("alpha must be a positive finite root")
    lam = translation_perm(q)
    i, j = alpha.finite_part
    return perm_length(lam * finite_reflection(i, j, q.n)) > perm_length(lam)


# ---------------------------------------------------------------------------
# parabolic quotients


def coset_min_rep(w: AffinePermutation, J: Iterable[int], side: str = "right") -> AffinePermutation:
    """
    Minimal representative of w W_J (side='right') or W_J w (side='left').
    """
    J = set(J)
    if J >= set(range(w.n)):
        raise ValueError("J must be a proper subset of the simple reflections")
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    while True:
        descents = right_descents(w) if side == "right" else left_descents(w)
        hit = next((i for i in descents if i in J), None)
        if hit is None:
            return w
        w = w.right_multiply(hit) if side == "right" else w.left_multiply(hit)


# ---------------------------------------------------------------------------
# distinguished elements


def build_tau(n: int) -> CoxeterWord:
    """tau = s_{n-1} ... s_1 s_0."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return CoxeterWord(n, tuple(range(n - 1, -1, -1)))


def build_kappa(n: int) -> CoxeterWord:
    """kappa = tau^(n-1)."""
    return build_tau(n) * (n - 1)


def longest_word(n: int, m: int) -> CoxeterWord:
    """Reduced word for the longest element of the subgroup on s_1, ..., s_{m-1}."""
    letters = []
    for k in range(1, m):
        letters.extend(range(k, 0, -1))
    return CoxeterWord(n, tuple(letters))


def build_kappa0(n: int) -> CoxeterWord:
    """kappa_0 = w' kappa, w' longest in the subgroup on s_1, ..., s_{n-2}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return longest_word(n, n - 1) + build_kappa(n)
