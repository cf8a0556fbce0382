"""
The linear system whose solution puts psi(Y) into G_0 kappa B.

For a regular Y with distinct integer entries, print the matrix A_n, its
determinant next to the closed formula, and the resulting g and h.
"""

import sys

from loopcell.constructions import NilpotentUpper, an_det_formula, block_heads, crucial_solve
from loopcell.exactalg import frac_det


def show(rows, labels):
    width = max(len(str(x)) for r in rows for x in r) + 1
    for lab, r in zip(labels, rows):
        print(f"  {str(lab):8}" + "".join(str(x).rjust(width) for x in r))


def main(n: int = 4) -> None:
    Y = NilpotentUpper.from_dict(n, {(i, j): i + 2 * j for i in range(1, n + 1) for j in range(i + 1, n + 1)})
    sol = crucial_solve(Y)
    print(f"Y =\n{Y.matrix()}\n")
    print("A (rows labelled by equation, columns by unknown):")
    print("  columns: " + " ".join(map(str, sol.col_labels)))
    show(sol.A, sol.row_labels)
    print(f"\nblock heads (1-based): {[h + 1 for h in block_heads(n)]}")
    print(f"det A = {frac_det(sol.A)}, formula gives {an_det_formula(Y.superdiagonal(), n)}")
    print(f"\ng =\n{sol.g}\n\nh =\n{sol.h}\n")
    print("g * diag(t, ..., t, t^(1-n)) == psi(Y) * h:", sol.verify(Y))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
