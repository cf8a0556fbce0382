"""
Acceptance criteria, one PASS/FAIL line each.  All checks are exact; the time
limit of each criterion is part of its pass condition.  The lines are printed
at the end of the pytest run, or directly with `python3 tests/test_acceptance.py`.
"""

import random
import time
from contextlib import contextmanager
from itertools import product

import pytest

from loopcell.affine_weyl import (
    AffinePermutation, CoxeterWord, bruhat_leq, build_kappa, build_kappa0, coset_min_rep,
    greedy_reduced_word, perm_length, right_descents, subword_elements, word_to_perm,
)
from loopcell.constructions import (
    CotangentPoint, NilpotentUpper, PolynomialMapSpec, crucial_solve, kappa_diag,
    lusztig_membership, lusztig_point, psi_p_point, random_cotangent_point,
    random_nilpotent_upper, random_sl,
)
from loopcell.exactalg import Laurent, LaurentMatrix
from loopcell.harness import run
from loopcell.loopgroup import (
    STRATEGIES, grassmannian_cell, iwahori_factorize, perm_lift, same_coset,
)

from conftest import random_iwahori

RESULTS: list[str] = []
SEED = 20240601


@contextmanager
def criterion(label: str, limit: float | None, title: str):
    t0 = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None and elapsed >= limit:
            note = f"over the {limit:g} s limit"
            raise AssertionError(f"criterion {label} took {elapsed:.2f} s, limit {limit} s")
        status = "PASS"
    except AssertionError as e:
        note = note or str(e).splitlines()[0]
        raise
    finally:
        elapsed = time.perf_counter() - t0
        lim = f"< {limit:g} s" if limit is not None else "no limit"
        line = f"criterion {label:>3}  {status}  {elapsed:6.2f} s ({lim}, exact)  {title}"
        RESULTS.append(line + (f"  [{note}]" if note else ""))


def harness_ok(selectors, ns, samples=20, ids=None):
    report = run(selectors, ns, seed=SEED, samples=samples)
    claims = [c for c in report.claims if ids is None or c.claim_id in ids]
    assert claims, "no claims ran"
    bad = [f"{c.claim_id} {c.params}: {c.detail}" for c in claims if c.status != "pass"]
    assert not bad, "; ".join(bad)
    return claims


def test_criterion_01_kappa_length():
    with criterion("1", 1.0, "l(kappa) = n(n-1), n = 2..6"):
        for n in range(2, 7):
            assert perm_length(word_to_perm(build_kappa(n))) == n * (n - 1)


def test_criterion_02_root_facts():
    with criterion("2", 1.0, "facts 1-9 and the cyclic orbit, n = 3..6"):
        claims = harness_ok(["facts"], [3, 4, 5, 6])
        names = {c.claim_id for c in claims if c.params["n"] == 6}
        assert names == {f"facts.fact{i}" for i in range(1, 10)} | {"facts.cyclic"}


def test_criterion_03_kappa_on_simple_roots():
    with criterion("3", None, "kappa(alpha_{n-1}) = n delta + alpha_{n-1}, kappa fixes alpha_1..alpha_{n-2}, n = 2..6"):
        harness_ok(["kappa"], range(2, 7), ids={"kappa.root-action"})


def test_criterion_04_extremal_representatives():
    with criterion("4", None, "minimality of kappa, maximality of kappa_0, stability, n = 2..6"):
        harness_ok(["kappa", "kappa0", "stable"], range(2, 7),
                   ids={"kappa.minimal", "kappa0.length", "kappa0.maximal", "stable.min-rep"})


def test_criterion_05_weyl_lift():
    with criterion("5", None, "lift of kappa = diag(t,..,t,t^(1-n)) times a sign matrix of det 1, n = 2..5"):
        harness_ok(["kappa"], range(2, 6), ids={"kappa.lift"})


def test_criterion_06_linear_system():
    with criterion("6", 10.0, "solver g kappa = psi(Y) h, det formula, A4/A5 patterns and deletion, n = 2..5, 20 samples"):
        claims = harness_ok(["crucial", "an-det"], range(2, 6), samples=20)
        ids = {c.claim_id for c in claims}
        assert ids == {"crucial.solve", "crucial.pattern", "crucial.deletion", "an-det.formula"}
        assert sorted(c.params["n"] for c in claims if c.claim_id == "crucial.pattern") == [4, 5]


@pytest.mark.xfail(strict=True, reason="a generic regular upper triangular N lies in a strictly smaller "
                                       "cell than kappa; see the README")
def test_criterion_07_lusztig_literal():
    with criterion("7", 30.0, "cell of psi(N) <= kappa, with equality for generic regular upper triangular N, n = 2..4"):
        rng = random.Random(SEED)
        for n in (2, 3, 4):
            kappa = word_to_perm(build_kappa(n))
            for k in range(20):
                N = random_nilpotent_upper(n, rng, generic=k % 2 == 0).matrix()
                if k % 3:
                    g = random_sl(n, rng)
                    N = g * N * g.inverse()
                assert lusztig_membership(N)
            for _ in range(20):
                Y = random_nilpotent_upper(n, rng)
                cell = grassmannian_cell(lusztig_point(Y))
                assert cell == kappa, (f"n={n}: generic upper triangular N gives cell {cell} of length "
                                       f"{perm_length(cell)}, kappa = {kappa} has length {perm_length(kappa)}")


def test_criterion_07_lusztig_corrected():
    with criterion("7*", 30.0, "corrected: cell <= kappa for all N; equality for generic conjugates; "
                               "psi(Y) in G_0 kappa B, n = 2..4"):
        harness_ok(["lusztig"], [2, 3, 4], samples=20,
                   ids={"lusztig.membership", "lusztig.top-cell-conjugate", "lusztig.double-coset"})


def test_criterion_08_injectivity_equivariance():
    with criterion("8", None, "psi and phi injective and equivariant, 20 pairs, n = 2..4"):
        harness_ok(["lusztig", "ctgt"], [2, 3, 4], samples=20,
                   ids={"lusztig.injective", "lusztig.equivariant", "ctgt.phi-injective", "ctgt.phi-equivariant"})


def test_criterion_09_springer():
    with criterion("9", None, "psi(g Y g^-1)^-1 phi(g, Y) in G_0, 20 points, n = 2..4"):
        harness_ok(["springer"], [2, 3, 4], samples=20)


def test_criterion_10_cotangent_membership():
    with criterion("10", None, "iwahori_factorize(phi(g, Y)).w <= kappa_0, n = 2..4, generic and non-generic Y"):
        rng = random.Random(SEED)
        for n in (2, 3, 4):
            k0 = word_to_perm(build_kappa0(n))
            for k in range(20):
                x = random_cotangent_point(n, rng, generic=k % 2 == 0)
                f = iwahori_factorize(x.g * lusztig_point(x.Y))
                assert f.certify(x.g * lusztig_point(x.Y))
                assert bruhat_leq(f.w, k0), f"n={n}: {f.w} not below {k0}"


def test_criterion_11_rank_three_cases():
    with criterion("11", 10.0, "rank-3 case analysis: C gp(Y) D, w, l(w) > 6, l(lambda_q)"):
        claims = harness_ok(["section7"], [3], ids={"section7.case"})
        from loopcell.constructions import section7_case
        table = {(1, None, 1, 0): (1, 6), (2, None, 1, 0): (1, 12), (2, 3, 1, 1): (2, 14),
                 (1, 2, 1, -1): (3, 6), (1, 3, 1, 1): (4, 12), (1, 2, 1, 1): (4, 8)}
        for args, (case, lam) in table.items():
            res = section7_case(*args)
            assert (res.case_id, res.lambda_length) == (case, lam), args
            assert res.identity_holds and res.factorized_w == res.w and res.length > 6
        assert len(claims) >= len(table)


def test_criterion_12_factorization_engine():
    with criterion("12", 60.0, "roundtrip and strategy independence n = 2..4; Bruhat order = subwords, l <= 8, n = 3"):
        rng = random.Random(SEED)
        for n in (2, 3, 4):
            for _ in range(25):
                w = word_to_perm(CoxeterWord(n, tuple(rng.randrange(n) for _ in range(rng.randint(0, 10)))))
                M = random_iwahori(n, rng) * perm_lift(w) * random_iwahori(n, rng)
                for strategy in STRATEGIES:
                    f = iwahori_factorize(M, strategy)
                    assert f.w == w and f.certify(M)
        elems = {AffinePermutation.identity(3)}
        frontier = set(elems)
        for _ in range(8):
            frontier = {v.right_multiply(i) for v in frontier for i in range(3)} - elems
            elems |= frontier
        elems = [e for e in elems if perm_length(e) <= 8]
        for w in elems:
            below = subword_elements(greedy_reduced_word(w))
            for u in elems:
                assert bruhat_leq(u, w) == (u in below)


def test_criterion_13_non_injectivity():
    with criterion("13", None, "psi_p(E12) = psi_p(0) mod B whenever p_1 is integral"):
        Z = NilpotentUpper.from_dict(3, {(1, 2): 1})
        g = LaurentMatrix.identity(3)
        for p1 in (Laurent.coerce(0), Laurent.coerce(5), Laurent((1, -2, 3)), Laurent((2,), 4)):
            for p2 in (Laurent.coerce(0), Laurent.t(-3)):
                p = PolynomialMapSpec((p1, p2))
                assert same_coset(psi_p_point(p, CotangentPoint(g, Z)),
                                  psi_p_point(p, CotangentPoint(g, NilpotentUpper.zero(3))), "Iwahori")
        # with a pole in p_1 the two points separate
        p = PolynomialMapSpec((Laurent.t(-1),))
        assert not same_coset(psi_p_point(p, CotangentPoint(g, Z)),
                              psi_p_point(p, CotangentPoint(g, NilpotentUpper.zero(3))), "Iwahori")


if __name__ == "__main__":
    import subprocess
    import sys
    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q"]))
