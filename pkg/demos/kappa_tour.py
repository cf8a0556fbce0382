"""
A tour of the elements tau, kappa = tau^(n-1) and kappa_0 = w' kappa.

Run with `python3 demos/kappa_tour.py [n]`.
"""

import sys

from loopcell.affine_weyl import (
    act_on_root, build_kappa, build_kappa0, build_tau, greedy_reduced_word, perm_length,
    simple_root, word_to_perm,
)
from loopcell.constructions import kappa_diag
from loopcell.harness import fact_checks
from loopcell.loopgroup import torus_discrepancy, word_lift


def main(n: int = 4) -> None:
    tau = word_to_perm(build_tau(n))
    kappa = word_to_perm(build_kappa(n))
    kappa0 = word_to_perm(build_kappa0(n))
    print(f"n = {n}")
    print(f"tau    window {tau}  length {perm_length(tau)}")
    print(f"kappa  window {kappa}  length {perm_length(kappa)}  (n(n-1) = {n * (n - 1)})")
    print(f"kappa0 window {kappa0}  length {perm_length(kappa0)}")
    print(f"a reduced word for kappa0: {greedy_reduced_word(kappa0)}")

    print("\nkappa on the simple roots:")
    for i in range(n):
        print(f"  alpha_{i} = {simple_root(i, n)}  ->  {act_on_root(kappa, simple_root(i, n))}")

    print("\ntau on the roots of the facts list:")
    for label, got, want in fact_checks(n):
        mark = "ok" if got == want else "MISMATCH"
        print(f"  {label:14} {str(got):22} {mark}")

    D = torus_discrepancy(word_lift(build_kappa(n)), kappa_diag(n))
    print(f"\nthe lift of kappa is diag(t, ..., t, t^{1 - n}) times diag{tuple(str(d) for d in D)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
