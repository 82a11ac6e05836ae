"""Print the delay matrices del(tilde Lambda^j) for two encoders side by side.

Defaults to the two 4-state encoders whose active column and segment
distances coincide; ``--closed`` also compares against the closed forms.
"""

from __future__ import annotations

import argparse

from convcode import io, suite
from convcode.code import ConvCode
from convcode.distances import active_distances, tilde_delay_matrices


def fmt(M) -> list[str]:
    cells = [["inf" if x == float("inf") else str(int(x)) for x in row] for row in M]
    w = max(len(c) for r in cells for c in r)
    return ["  ".join(c.rjust(w) for c in r) for r in cells]


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("first", nargs="?", default="exa3.2-G", help="bundled example name or JSON path")
    p.add_argument("second", nargs="?", default="exa3.2-Gp")
    p.add_argument("--jmax", type=int, default=6)
    p.add_argument("--closed", action="store_true", help="check the closed forms for j >= 4")
    args = p.parse_args(argv)

    def load(x):
        return ConvCode(io.example_encoder(x) if x in io.example_names() else io.load_encoder(x))

    C, Cp = load(args.first), load(args.second)
    M, Mp = tilde_delay_matrices(C, args.jmax), tilde_delay_matrices(Cp, args.jmax)
    for j in range(1, args.jmax + 1):
        print(f"j = {j}")
        for a, b in zip(fmt(M[j - 1]), fmt(Mp[j - 1])):
            print(f"  {a}    |    {b}")
        if args.closed and j >= 4:
            want, wantp = suite.appendix_closed(j)
            ok = M[j - 1].tolist() == want and Mp[j - 1].tolist() == wantp
            print(f"  closed form: {'ok' if ok else 'MISMATCH'}")
    for fam in ("column", "segment"):
        a = active_distances(C, fam, args.jmax).as_ints()
        b = active_distances(Cp, fam, args.jmax).as_ints()
        print(f"active {fam}: {a} | {b}")


if __name__ == "__main__":
    main()
