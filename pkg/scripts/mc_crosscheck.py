"""Compare exact body volumes with Monte Carlo estimates on random bodies."""
import argparse

from coconvex.oracle import RandomSpec, body_mc_volume, make_rng, random_coconvex, random_cone


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bodies", type=int, default=20)
    ap.add_argument("--samples", type=int, default=10**6)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--seed", type=int, default=5)
    args = ap.parse_args()

    inside = 0
    print(f"{'body':>4} {'dim':>3} {'exact':>12} {'estimate':>12} {'z':>7}")
    for i in range(args.bodies):
        dim = args.dims[i % len(args.dims)]
        rng = make_rng(args.seed, i)
        spec = RandomSpec(dim=dim, cone_rays=dim + int(rng.integers(0, 2)),
                          apex_count=int(rng.integers(1, 4)), seed=args.seed)
        C = random_cone(spec, rng)
        K = random_coconvex(C, spec, rng)
        est = body_mc_volume(K, args.samples, seed=100 * args.seed + i)
        z = (est.mean - float(K.volume)) / est.std_error
        inside += abs(z) <= 3
        print(f"{i:>4} {dim:>3} {float(K.volume):>12.6f} {est.mean:>12.6f} {z:>7.2f}")
    print(f"{inside}/{args.bodies} within 3 standard errors")


if __name__ == "__main__":
    main()
