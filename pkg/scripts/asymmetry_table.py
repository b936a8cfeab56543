"""Left/right asymmetry of the delooping level on the loop-and-tail family.

For each n, the algebra SIM(n) has finitistic dimension n while its
delooping level vanishes; the opposite algebra carries the level n.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from dellkit import deloop, fixtures, itfunc


def main():
    print(f"{'n':>3} {'findim':>7} {'dell':>5} {'Dell':>5} {'dell^op':>8} "
          f"{'Dell^op':>8} {'phidim':>7} {'phidim^op':>10}")
    for n in range(1, 8):
        a = fixtures.sim(n)
        op = a.opposite()
        print(
            f"{n:>3} {deloop.findim_truncated(a):>7} "
            f"{deloop.dell_algebra(a).value:>5} "
            f"{deloop.Dell_algebra(a).value:>5} "
            f"{deloop.dell_algebra(op).value:>8} "
            f"{deloop.Dell_algebra(op).value:>8} "
            f"{itfunc.phidim_truncated(a):>7} "
            f"{itfunc.phidim_truncated(op):>10}"
        )


if __name__ == "__main__":
    main()
