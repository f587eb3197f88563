#!/usr/bin/env python3
"""Regenerate the shipped algebra files in algebras/ from the catalog."""

import argparse
import pathlib

from isotopelab import QQ, c2, c3, c_family, c_rho, g_n, j2
from isotopelab.algfile import write_algebra_file

FILES = {
    "j2.alg": (j2, "J2: <1, x, y | x^2 = y^2 = 0, xy = 1>"),
    "c2.alg": (c2, "C2: <a, b, c | a^2 = b, ab = a, ac = c, b^2 = c^2 = 0, bc = b>"),
    "c3.alg": (c3, "C3: <x, y, z | squares 0, xy = z, yz = x, zx = y>"),
    "c_minus2.alg": (lambda f: c_rho(f, -2), "C(-2): xy = -2 (1 + x + y)"),
    "c110.alg": (lambda f: c_family(f, 1, 1, 0), "C(1,1,0): xy = 1 + x"),
    "g2.alg": (lambda f: g_n(f, 2), "G2: strongly degenerate, dim 3"),
    "g3.alg": (lambda f: g_n(f, 3), "G3: strongly degenerate, dim 4"),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out", default=pathlib.Path(__file__).resolve().parent.parent / "algebras"
    )
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, (ctor, comment) in FILES.items():
        path = out / name
        write_algebra_file(path, ctor(QQ), comment=comment)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
