"""Growth of the delooping level over the CONTRA family.

With the shortcut offset k fixed, the delooping level of CONTRA(n, k)
grows linearly in n while every finite projective dimension on the
opposite side stays bounded by floor(k/4) + 1, so the gap between the
two is arbitrarily large for monomial algebras.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from dellkit import cyclic, deloop, fixtures


def main():
    k = 4
    print(f"{'n':>3} {'dell(A_n)':>10} {'floor(n/4)':>11} {'pd(U(a1))':>10} "
          f"{'report':>7}")
    for n in range(8, 29, 4):
        a = fixtures.contra(n, k)
        rep = fixtures.contraej_report(n, k)
        u1 = cyclic.uniserial_module(a, a.quiver.path_by_names(["a1"]))
        print(
            f"{n:>3} {deloop.dell_algebra(a).value:>10} {n // 4:>11} "
            f"{cyclic.pd_key(a, u1):>10} "
            f"{'pass' if rep.passed else 'FAIL':>7}"
        )


if __name__ == "__main__":
    main()
