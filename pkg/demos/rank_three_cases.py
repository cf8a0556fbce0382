"""
The four cases for g p(Y) in rank three, at a few parameter choices.

For each (a, b, q, r) the script prints which case applies, the monomial
matrix C g p(Y) D, the element w and the two lengths.
"""

from loopcell.constructions import section7_case
from loopcell.exactalg import Laurent

SAMPLES = [(1, None, 1, 0), (2, None, 1, 0), (2, 3, 1, 1), (1, 2, 1, -1), (1, 3, 1, 1), (1, 2, 1, 1)]


def main() -> None:
    for a, b, q, r in SAMPLES:
        res = section7_case(a, b, q, r)
        print(f"a={a} b={b} q={q} r={r}: case {res.case_id}")
        print("  " + str(res.monomial_result).replace("\n", "\n  "))
        print(f"  w = {res.w}  l(w) = {res.length}  l(lambda_q) = {res.lambda_length}"
              f"  identity holds: {res.identity_holds}  C, D Iwahori: {res.C_D_in_iwahori}")
    try:
        section7_case(1, 2, Laurent((1, 1)), -1)
    except ValueError as e:
        print(f"\nb = 2a with q(0)^2 + r(0) = 0 but q^2 + r != 0 is not covered: {e}")


if __name__ == "__main__":
    main()
