"""
Which cell does psi(N) = (1 - t^{-1} N)^{-1} land in?

Regular nilpotents conjugated by a generic g reach the cell of kappa.  A
regular upper triangular N does not: its cell is strictly smaller.
"""

import random

from loopcell.affine_weyl import bruhat_leq, build_kappa, perm_length, word_to_perm
from loopcell.constructions import lusztig_point, random_nilpotent_upper, random_sl
from loopcell.loopgroup import grassmannian_cell


def main(seed: int = 1) -> None:
    rng = random.Random(seed)
    for n in (2, 3, 4, 5):
        kappa = word_to_perm(build_kappa(n))
        Y = random_nilpotent_upper(n, rng)
        upper = grassmannian_cell(lusztig_point(Y))
        g = random_sl(n, rng, generic=True)
        conj = grassmannian_cell(lusztig_point(g * Y.matrix() * g.inverse()))
        print(f"n={n}: kappa {kappa} (length {perm_length(kappa)})")
        print(f"     upper triangular N  -> {upper} (length {perm_length(upper)}, below kappa: {bruhat_leq(upper, kappa)})")
        print(f"     generic conjugate   -> {conj} (length {perm_length(conj)})")


if __name__ == "__main__":
    main()
