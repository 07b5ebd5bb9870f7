"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s`` or as a script.
"""
import time
from fractions import Fraction
from pathlib import Path

from coconvex import body as B
from coconvex import cone as cones
from coconvex import polytope as P
from coconvex import theorems as th
from coconvex.fuzz import run_fuzz
from coconvex.geom import Hyperplane, dot
from coconvex.instance import document
from coconvex.oracle import (
    RandomSpec,
    body_mc_volume,
    make_rng,
    random_base,
    random_coconvex,
    random_cone,
    random_cylinder_pair,
    random_rational,
)

F = Fraction
DATA = Path(__file__).parent / "data"


def report(capsys, number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def random_body(seed, stream, dim):
    rng = make_rng(seed, stream)
    spec = RandomSpec(dim=dim, cone_rays=dim + int(rng.integers(0, 2)),
                      apex_count=int(rng.integers(1, 4)), seed=seed)
    C = random_cone(spec, rng)
    return C, random_coconvex(C, spec, rng), rng, spec


def second_hyperplane(C, K, rng):
    """An admissible hyperplane whose normal differs from the default one."""
    u = cones.interior_direction(C)
    g = C.generators[int(rng.integers(0, len(C.generators)))]
    k = 1 + max(abs(dot(g, r)) for r in C.generators)
    n = tuple(k * a + b for a, b in zip(u, g))
    top = max(dot(n, p) for p in K.apexes)
    return Hyperplane(n, top * random_rational(rng, F(9, 8), 5))


def test_criterion_1_worked_suite(capsys):
    start = time.perf_counter()
    C = cones.validate([(1, 0), (0, 1)])
    K1 = B.make_coconvex(C, [(2, 0), (0, 1)])
    K2 = B.make_coconvex(C, [(1, 0), (0, 2)])
    K = B.make_coconvex(C, [(1, 0), (0, 1)])
    lam = F(1, 2)
    conv = th.check_volume_convexity(K1, K2, lam)
    bm = th.check_reversed_bm(K1, K2, lam)
    homo = th.check_reversed_bm(K, B.scale(K, 2), lam)
    checks = [
        B.combine(lam, K1, K2).volume == F(3, 4),
        (conv.verdict, conv.lhs, conv.rhs) == (th.Verdict.STRICTLY_LESS, F(3, 4), 1),
        bm.verdict is th.Verdict.STRICTLY_LESS,
        th.certified_root_compare(bm.lhs, bm.rhs) is th.Ordering.LESS,
        str(bm.lhs) == "1*(3/4)^(1/2)" and bm.rhs.exact() == 1,
        homo.verdict is th.Verdict.EQUAL and homo.equality_class.kind == "Homothets",
    ]
    elapsed = time.perf_counter() - start
    ok = all(checks) and elapsed < 1
    report(capsys, 1, "worked instance", ok, f"{sum(checks)}/{len(checks)} exact checks, {elapsed:.3f}s < 1s")


def test_criterion_2_fuzz(tmp_path, capsys):
    start = time.perf_counter()
    wd = str(tmp_path) if tmp_path else None
    runs = [run_fuzz(2, 1000, seed=42, witness_dir=wd), run_fuzz(3, 200, seed=7, witness_dir=wd)]
    elapsed = time.perf_counter() - start
    violated = sum(s.violated for s in runs)
    uncertified = sum(s.uncertified_equal for s in runs)
    errors = sum(s.errors for s in runs)
    equal = sum(n for s in runs for (_, v), n in s.verdicts.items() if v == "Equal")
    certified = sum(sum(s.certificates.values()) for s in runs)
    ok = violated == 0 and uncertified == 0 and errors == 0 and equal == certified and elapsed < 300
    report(capsys, 2, "fuzz 1000x2D seed 42 + 200x3D seed 7", ok,
           f"violated={violated} equal={equal} certified={certified} errors={errors} {elapsed:.1f}s < 300s")


def test_criterion_3_conservation(capsys):
    failures = 0
    for i in range(200):
        C, K, rng, _ = random_body(3, i, 2 + i % 2)
        vols = []
        for h in (B.choose_hyperplane(C, [K]), second_hyperplane(C, K, rng)):
            v, cap, total = B.volume(K, h), P.volume(B.build_cap(K, h)), P.volume(cones.truncate(C, h))
            failures += v + cap != total
            vols.append(v)
        failures += vols[0] != vols[1]
    report(capsys, 3, "conservation and hyperplane independence", failures == 0,
           f"200 bodies x 2 hyperplanes, {failures} exact mismatches")


def test_criterion_4_algebra(capsys):
    failures = 0
    for i in range(500):
        dim = 2 + i % 2
        rng = make_rng(4, i)
        spec = RandomSpec(dim=dim, cone_rays=dim + int(rng.integers(0, 2)),
                          apex_count=int(rng.integers(1, 4)), seed=i)
        C = random_cone(spec, rng)
        K1, K2, K3 = (random_coconvex(C, spec, rng) for _ in range(3))
        t = random_rational(rng, F(1, 64), 4)
        lam = random_rational(rng, 0, 1)
        failures += B.scale(K1, t).volume != t**dim * K1.volume
        failures += B.oplus(K1, K2) != B.oplus(K2, K1)
        failures += B.oplus(B.oplus(K1, K2), K3) != B.oplus(K1, B.oplus(K2, K3))
        failures += B.combine(lam, K1, K1) != K1
    report(capsys, 4, "homogeneity, oplus algebra, combine(K,K)=K", failures == 0,
           f"500 cases, {failures} exact mismatches")


def test_criterion_5_monte_carlo(capsys):
    good = 0
    for i in range(50):
        _, K, _, _ = random_body(5, i, 2 + i % 2)
        est = body_mc_volume(K, 10**6, seed=500 + i)
        good += abs(est.mean - float(K.volume)) <= 3 * est.std_error
    report(capsys, 5, "Monte Carlo agreement", good >= 49, f"{good}/50 within 3 standard errors, need 49")


def test_criterion_6_segment_remark(tmp_path, capsys):
    bad = []
    for i in range(100):
        C, K, rng, _ = random_body(6, i, 2 + i % 2)
        dim = C.dim
        zero = tuple(F(0) for _ in range(dim))
        if not th.check_segment_remark(K, (zero, zero)):
            bad.append((i, zero, zero))
        for _ in range(100):
            while True:
                u = tuple(random_rational(rng, -2, 2) for _ in range(dim))
                if any(u):
                    break
            a = tuple(random_rational(rng, -1, 1) for _ in range(dim))
            b = tuple(x + y for x, y in zip(a, u))
            if th.check_segment_remark(K, (a, b)):
                bad.append((i, a, b))
    if bad and tmp_path is not None:
        import json

        for i, a, b in bad:
            C, K, _, _ = random_body(6, i, 2 + i % 2)
            doc = document(C, {"K": K}, {})
            doc["segment"] = [[str(c) for c in p] for p in (a, b)]
            (tmp_path / f"segment-{i}.json").write_text(json.dumps(doc))
    report(capsys, 6, "segment remark iff U={0}", not bad,
           f"100 bodies x (100 nonzero U + U={{0}}), {len(bad)} counterexamples")


def test_criterion_7_cylinder(capsys):
    recovered = distinct = 0
    for i in range(100):
        dim = 2 + i % 2
        rng = make_rng(7, i)
        spec = RandomSpec(dim=dim, seed=i)
        h = Hyperplane(tuple(-1 if j == dim - 1 else 0 for j in range(dim)), 0)
        base = random_base(h, spec, rng)
        A0, A1 = random_cylinder_pair(base, h, spec, rng)

        length = random_rational(rng, F(1, 64), 3)
        u = tuple(F(0) if j < dim - 1 else length for j in range(dim))
        top = P.minkowski_sum(A0, P.segment(tuple(F(0) for _ in u), u))
        cls = th.classify_lemma3_equality(A0, top, h)
        recovered += (
            cls.kind == "OrthogonalSegmentTranslate"
            and cls.value.relation == "A1=A0+U"
            and cls.value.vector == u
            and abs(cls.value.t) == length
        )

        lam = random_rational(rng, F(1, 64), F(63, 64))
        r = th.check_cylinder_concavity(A0, A1, lam, h)
        distinct += r.equality_class is th.NOT_EQUAL and th.classify_lemma3_equality(A0, A1, h) is th.DISTINCT \
            and r.verdict is th.Verdict.STRICTLY_GREATER and r.lhs > r.rhs
    ok = recovered == 100 and distinct == 100
    report(capsys, 7, "cylinder equality detection", ok,
           f"{recovered}/100 segments recovered exactly, {distinct}/100 generic pairs Distinct and strictly concave")


if __name__ == "__main__":
    import sys

    import inspect

    status = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn(*[None] * len(inspect.signature(fn).parameters))
            except AssertionError:
                status = 1
    sys.exit(status)
