import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopcell.affine_weyl import (
    AffinePermutation, CorootVector, CoxeterWord, coset_min_rep, generator,
    greedy_reduced_word, perm_length, translation_perm, word_to_perm,
)
from loopcell.exactalg import ONE, Laurent, LaurentMatrix
from loopcell.loopgroup import (
    STRATEGIES, FactorizationError, MonomialMatrix, cell_permutation, generator_lift,
    grassmannian_cell, iwahori_factorize, perm_lift, same_coset, torus_discrepancy,
    translation_lift, word_lift, working_truncation,
)

from conftest import laurent_matrices, random_iwahori

T = Laurent.t()


def unfolded_upper_triangular(M: LaurentMatrix) -> bool:
    """Oracle: the bi-infinite periodic matrix of M is upper triangular with nonzero diagonal."""
    n = M.n
    for r, j, x in M.entries():
        for m, c in x.terms():
            if r - n * m > j:
                return False
    return all(M[i, i][0] != 0 for i in range(n))


def random_word(n, rng, length):
    return CoxeterWord(n, tuple(rng.randrange(n) for _ in range(length)))


# -- lifts ---------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_lifts(n):
    for i in range(n):
        M = generator_lift(i, n)
        assert M.det() == ONE and M.is_monomial_matrix()
        assert MonomialMatrix.from_matrix(M).perm == generator(i, n)
        assert torus_discrepancy(M, perm_lift(generator(i, n))) is not None


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.lists(st.integers(0, n - 1), max_size=10).map(
    lambda ls: CoxeterWord(n, tuple(ls)))))
def test_lifts_compose_like_permutations(word):
    M = word_lift(word)
    w = word_to_perm(word)
    assert MonomialMatrix.from_matrix(M).perm == w
    D = torus_discrepancy(M, perm_lift(w))
    assert D is not None and all(abs(d) == 1 for d in D)
    assert cell_permutation(M) == w


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.lists(st.integers(-3, 3), min_size=n - 1, max_size=n - 1)))
def test_translation_lift(cs):
    q = CorootVector(tuple(cs) + (-sum(cs),))
    M = translation_lift(q)
    assert MonomialMatrix.from_matrix(M).perm == translation_perm(q)
    assert M.vdim() == 0


def test_monomial_matrix_roundtrip():
    w = AffinePermutation(3, (-2, -1, 9))
    mm = MonomialMatrix(w, (2, -1, Fraction(1, 2)))
    assert MonomialMatrix.from_matrix(mm.to_matrix()) == mm
    assert mm.exponents() == [1, 1, -2]
    with pytest.raises(ValueError):
        MonomialMatrix(w, (1, 0, 1))


def test_torus_discrepancy_rejects_non_diagonal():
    assert torus_discrepancy(generator_lift(1, 2), LaurentMatrix.identity(2)) is None
    assert torus_discrepancy(LaurentMatrix.diag([T, 1]), LaurentMatrix.identity(2)) is None
    assert torus_discrepancy(LaurentMatrix.diag([2, 3]), LaurentMatrix.identity(2)) == [2, 3]


# -- the Iwahori subgroup --------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(st.integers(2, 3).flatmap(laurent_matrices))
def test_iwahori_is_periodic_upper_triangular(M):
    if M.det().is_zero() or not M.det().is_unit_of_A():
        return
    assert M.is_iwahori(det_one=False) == unfolded_upper_triangular(M)


# -- cells ---------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_roundtrip_through_random_iwahori_factors(n):
    rng = random.Random(n)
    for _ in range(15):
        w = word_to_perm(random_word(n, rng, rng.randint(0, 10)))
        M = random_iwahori(n, rng) * perm_lift(w) * random_iwahori(n, rng)
        assert cell_permutation(M) == w
        ws = set()
        for strategy in STRATEGIES:
            f = iwahori_factorize(M, strategy)
            assert f.certify(M)
            assert f.L.is_iwahori(det_one=False) and f.U.is_iwahori(det_one=False)
            ws.add(f.w)
            if f.exact:
                assert f.product() == M
        assert ws == {w}


def test_factorization_of_identity_and_generators():
    f = iwahori_factorize(LaurentMatrix.identity(3))
    assert f.w.is_identity() and f.exact
    assert greedy_reduced_word(f.w) == CoxeterWord(3)
    f = iwahori_factorize(generator_lift(0, 3))
    assert f.w == generator(0, 3)


def test_non_monomial_pivots_need_series():
    M = LaurentMatrix([[ONE + T, ONE], [T, ONE + 2 * T]])
    f = iwahori_factorize(M)
    assert f.certify(M) and not f.exact
    assert f.w == cell_permutation(M) == AffinePermutation.identity(2)
    err = f.residual(M)
    assert err.valuation() > f.precision - 2


def test_factorization_errors():
    with pytest.raises(FactorizationError):
        iwahori_factorize(LaurentMatrix([[1, 1], [1, 1]]))
    with pytest.raises(FactorizationError):
        iwahori_factorize(LaurentMatrix.diag([T, 1]))
    with pytest.raises(FactorizationError):
        cell_permutation(LaurentMatrix.zero(2))
    with pytest.raises(ValueError):
        iwahori_factorize(LaurentMatrix.identity(2), strategy="random")


def test_truncation_env_override(monkeypatch):
    M = LaurentMatrix([[ONE + T, Laurent.t(-1)], [T, 2]])
    assert working_truncation(M) == 1 + 4 + 4
    monkeypatch.setenv("LOOPCELL_TRUNCATION", "3")
    assert working_truncation(M) == 3
    assert iwahori_factorize(M).w == cell_permutation(M)
    monkeypatch.setenv("LOOPCELL_TRUNCATION", "many")
    with pytest.raises(ValueError):
        working_truncation(M)


def test_grassmannian_cell():
    psi = LaurentMatrix([[1, Laurent.t(-1)], [0, 1]])
    assert grassmannian_cell(psi) == AffinePermutation(2, (0, 3))
    w = word_to_perm(CoxeterWord(3, (0, 2, 1)))
    M = perm_lift(w) * LaurentMatrix([[1, 2, 3], [0, 1, 5], [0, 0, 1]]).transpose()
    assert grassmannian_cell(M) == coset_min_rep(w, {1, 2})


# -- cosets ----------------------------------------------------------------------

def test_same_coset():
    rng = random.Random(3)
    g = LaurentMatrix([[1, Laurent.t(-2)], [Laurent.t(-1), ONE + Laurent.t(-3)]])
    b = random_iwahori(2, rng)
    k = LaurentMatrix([[T, 1], [-1, 0]])
    assert k.det() == ONE
    assert same_coset(g * k, g, "G0")
    assert same_coset(g * k, g, "GLnA")
    assert not same_coset(g * k, g, "Iwahori")
    u = LaurentMatrix([[1, T], [0, 1]])
    assert same_coset(g * u, g, "Iwahori")
    assert not same_coset(g * LaurentMatrix.diag([T, Laurent.t(-1)]), g, "G0")
    assert same_coset(g * b, g, "GLnA")
    with pytest.raises(ValueError):
        same_coset(g, g, "parahoric")
    with pytest.raises(ValueError):
        same_coset(g, LaurentMatrix.zero(2))


def test_same_coset_with_non_monomial_determinant():
    g2 = LaurentMatrix([[ONE + T, 0], [0, 1]])
    assert same_coset(g2, LaurentMatrix.identity(2), "GLnA")
    assert not same_coset(g2, LaurentMatrix.identity(2), "G0")
    g1 = LaurentMatrix([[ONE + T, 0], [Laurent.t(3), 1]])
    assert same_coset(g1, g2, "Iwahori") and same_coset(g1, g2, "G0")
