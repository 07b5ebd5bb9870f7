"""Seeded fuzzing of the three inequality checkers and the segment remark."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import body as bodies
from . import polytope as poly
from . import theorems as th
from .errors import PrecisionExhausted
from .geom import Hyperplane, format_scalar
from .instance import document
from .oracle import RandomSpec, make_rng, random_base, random_coconvex, random_cone, random_cylinder_pair, random_rational

CHECKS = ("convexity", "bm", "cylinder")


@dataclass
class FuzzSummary:
    dim: int
    count: int
    seed: int
    verdicts: Counter = field(default_factory=Counter)  # (check, verdict) -> n
    certificates: Counter = field(default_factory=Counter)  # (check, kind) -> n
    uncertified_equal: int = 0
    remark_agree: int = 0
    remark_disagree: int = 0
    errors: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def violated(self) -> int:
        return sum(n for (_, v), n in self.verdicts.items() if v == th.Verdict.VIOLATED.value)

    @property
    def failed(self) -> bool:
        return bool(self.violated or self.remark_disagree or self.uncertified_equal or self.errors)

    def lines(self) -> list[str]:
        out = [f"fuzz dim={self.dim} count={self.count} seed={self.seed}"]
        for check in CHECKS:
            parts = [f"{v}={n}" for (c, v), n in sorted(self.verdicts.items()) if c == check]
            certs = [f"{k}={n}" for (c, k), n in sorted(self.certificates.items()) if c == check]
            out.append(f"{check} " + " ".join(parts) + (" certified:" + ",".join(certs) if certs else ""))
        out.append(f"segment_remark agree={self.remark_agree} disagree={self.remark_disagree}")
        out.append(
            f"violated={self.violated} uncertified_equal={self.uncertified_equal} errors={self.errors}"
        )
        out += [f"witness={w}" for w in self.witnesses]
        return out


def _trial_spec(dim, rng, seed) -> RandomSpec:
    return RandomSpec(
        dim=dim,
        cone_rays=dim + int(rng.integers(0, 2)),
        apex_count=int(rng.integers(1, 4)),
        coordinate_bound=Fraction(4),
        seed=seed,
    )


def _record(summary: FuzzSummary, report: th.CheckReport, witness_dir, tag):
    summary.verdicts[(report.check, report.verdict.value)] += 1
    if report.verdict is th.Verdict.EQUAL:
        if report.equality_class.is_certificate:
            summary.certificates[(report.check, report.equality_class.kind)] += 1
        else:
            summary.uncertified_equal += 1
    if report.verdict is th.Verdict.VIOLATED:
        _write_witness(summary, report.witness, witness_dir, f"{tag}-{report.check}")


def _write_witness(summary, doc, witness_dir, name):
    d = Path(witness_dir or "witnesses")
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"{name}.json"
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    summary.witnesses.append(str(path))


def run_trial(summary: FuzzSummary, i: int, witness_dir=None):
    dim, seed = summary.dim, summary.seed
    rng = make_rng(seed, i)
    spec = _trial_spec(dim, rng, seed)
    tag = f"seed{seed}-dim{dim}-trial{i}"

    C = random_cone(spec, rng)
    K1 = random_coconvex(C, spec, rng)
    kind = i % 10
    if kind == 0:
        K2 = bodies.scale(K1, random_rational(rng, Fraction(1, 4), 4))
    elif kind == 5:
        K2 = K1
    else:
        K2 = random_coconvex(C, spec, rng)
    lam = random_rational(rng, Fraction(1, 64), Fraction(63, 64))

    for check in (th.check_volume_convexity, th.check_reversed_bm):
        try:
            _record(summary, check(K1, K2, lam), witness_dir, tag)
        except PrecisionExhausted as exc:
            summary.errors += 1
            doc = document(C, {"K1": K1, "K2": K2}, {})
            doc.update(check=check.__name__, verdict=f"PrecisionExhausted: {exc}",
                       **{"lambda": format_scalar(lam)})
            _write_witness(summary, doc, witness_dir, f"{tag}-precision")

    # cylinder pairs hang above the base B in the hyperplane x_n = 0
    h = Hyperplane(tuple(-1 if j == dim - 1 else 0 for j in range(dim)), 0)
    B = random_base(h, spec, rng)
    A0, A1 = random_cylinder_pair(B, h, spec, rng)
    if i % 4 == 0:
        up = tuple(Fraction(0) if j < dim - 1 else random_rational(rng, Fraction(1, 64), 2) for j in range(dim))
        A1 = poly.minkowski_sum(A0, poly.segment(tuple(Fraction(0) for _ in up), up))
    _record(summary, th.check_cylinder_concavity(A0, A1, lam, h), witness_dir, tag)

    zero = tuple(Fraction(0) for _ in range(dim))
    while True:
        u = tuple(random_rational(rng, -2, 2) for _ in range(dim))
        if any(u):
            break
    start = zero if rng.integers(0, 2) else tuple(-c / 2 for c in u)
    for U, expected in (((zero, zero), True), ((start, tuple(a + b for a, b in zip(start, u))), False)):
        if th.check_segment_remark(K1, U) == expected:
            summary.remark_agree += 1
        else:
            summary.remark_disagree += 1
            doc = document(C, {"K": K1}, {})
            doc.update(check="segment_remark", verdict="Violated")
            doc["segment"] = [[format_scalar(c) for c in p] for p in U]
            _write_witness(summary, doc, witness_dir, f"{tag}-segment")


def run_fuzz(dim: int, count: int, seed: int, witness_dir: Optional[str] = None) -> FuzzSummary:
    if dim not in (2, 3, 4):
        raise ValueError("fuzzing supports dimensions 2 to 4")
    if count < 1:
        raise ValueError("count must be positive")
    summary = FuzzSummary(dim, count, seed)
    for i in range(count):
        run_trial(summary, i, witness_dir)
    return summary
