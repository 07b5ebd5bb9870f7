"""Render the notation figure: a planar body, its truncating line and cap.

By default draws combine(1/2, K1, K2) on the quadrant from tests/data/worked.json.
"""
import argparse
from fractions import Fraction
from pathlib import Path

from coconvex import body as B
from coconvex.figure import body_svg
from coconvex.geom import Hyperplane
from coconvex.instance import parse_instance

ROOT = Path(__file__).resolve().parents[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instance", default=str(ROOT / "tests" / "data" / "worked.json"))
    ap.add_argument("--lambda", dest="lam", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("-o", "--output", default="figure.svg")
    args = ap.parse_args()

    inst = parse_instance(Path(args.instance).read_text())
    K = B.combine(args.lam, inst.bodies["K1"], inst.bodies["K2"])
    svg = body_svg(K, Hyperplane((1, 1), 3))
    Path(args.output).write_text(svg)
    print(f"wrote {args.output} (volume of K = {K.volume})")


if __name__ == "__main__":
    main()
