"""Certified checks of the coconvex volume inequalities and their equality cases.

Equalities are only ever decided structurally (identity, homothety, segment
translate).  Numerics, in the form of exact rational interval bounds on n-th
roots, are used solely to certify strict inequalities.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence, Union

from . import body as bodies
from . import polytope as poly
from .cone import contains
from .errors import GeometryError, LambdaOutOfRange, PrecisionExhausted, ProjectionMismatch
from .instance import document, polytope_witness
from .geom import Hyperplane, Vector, dot, format_scalar, mul, scalar, vector
from .polytope import Polytope

START_BITS = 64
MAX_BITS = 1024


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


class Verdict(enum.Enum):
    STRICTLY_LESS = "StrictlyLess"
    STRICTLY_GREATER = "StrictlyGreater"
    EQUAL = "Equal"
    VIOLATED = "Violated"


def iroot(x: int, n: int) -> int:
    """floor(x ** (1/n)) for integers x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2 or n == 1:
        return x
    y = 1 << -(-x.bit_length() // n)
    while True:
        z = ((n - 1) * y + x // y ** (n - 1)) // n
        if z >= y:
            return y
        y = z


def exact_root(r: Fraction, n: int) -> Optional[Fraction]:
    p, q = iroot(r.numerator, n), iroot(r.denominator, n)
    return Fraction(p, q) if p**n == r.numerator and q**n == r.denominator else None


@dataclass(frozen=True)
class RootExpression:
    """sum of coefficient * radicand ** (1 / degree)."""

    terms: tuple

    def __post_init__(self):
        terms = tuple((scalar(c), scalar(r), int(n)) for c, r, n in self.terms)
        for c, r, n in terms:
            if c <= 0 or r < 0 or n < 1:
                raise ValueError(f"malformed term {c}*{r}^(1/{n})")
        object.__setattr__(self, "terms", terms)

    def exact(self) -> Optional[Fraction]:
        total = Fraction(0)
        for c, r, n in self.terms:
            root = exact_root(r, n)
            if root is None:
                return None
            total += c * root
        return total

    def bounds(self, bits: int) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        unit = 1 << bits
        for c, r, n in self.terms:
            # r * 2^(n bits) lies in [N, N + 1), so r^(1/n) in [s, s + 1] / 2^bits
            s = iroot((r.numerator << (n * bits)) // r.denominator, n)
            lo += c * Fraction(s, unit)
            hi += c * Fraction(s + 1, unit)
        return lo, hi

    def __str__(self):
        return "+".join(
            f"{format_scalar(c)}*({format_scalar(r)})^(1/{n})" if n > 1 else f"{format_scalar(c)}*{format_scalar(r)}"
            for c, r, n in self.terms
        ) or "0"


def certified_root_compare(
    a: RootExpression, b: RootExpression, certificate: Any = None
) -> Ordering:
    """Exact ordering of two root expressions.

    Strict orderings come from disjoint interval bounds (or exact evaluation
    when every radicand is a perfect power).  Overlap at MAX_BITS is reported
    as Equal only if the caller supplies a structural `certificate`.
    """
    ea, eb = a.exact(), b.exact()
    if ea is not None and eb is not None:
        return Ordering.LESS if ea < eb else Ordering.GREATER if ea > eb else Ordering.EQUAL
    bits = START_BITS
    while bits <= MAX_BITS:
        alo, ahi = a.bounds(bits)
        blo, bhi = b.bounds(bits)
        if ahi < blo:
            return Ordering.LESS
        if alo > bhi:
            return Ordering.GREATER
        bits *= 2
    if certificate is not None:
        return Ordering.EQUAL
    raise PrecisionExhausted(f"cannot separate {a} and {b} with {MAX_BITS} bits")


@dataclass(frozen=True)
class SegmentTranslate:
    """``other = base + [0, t * normal]``."""

    relation: str  # "A1=A0+U" or "A0=A1+U"
    t: Fraction
    vector: Vector

    def __str__(self):
        u = ",".join(format_scalar(c) for c in self.vector)
        return f"{self.relation},U=[0,({u})],t={format_scalar(self.t)}"


@dataclass(frozen=True)
class EqualityClass:
    kind: str  # NotEqual | Identical | Homothets | OrthogonalSegmentTranslate | Distinct
    value: Any = None

    def __str__(self):
        if self.value is None:
            return self.kind
        v = format_scalar(self.value) if isinstance(self.value, Fraction) else str(self.value)
        return f"{self.kind}({v})"

    @property
    def is_certificate(self) -> bool:
        return self.kind in ("Identical", "Homothets", "OrthogonalSegmentTranslate")


NOT_EQUAL = EqualityClass("NotEqual")
DISTINCT = EqualityClass("Distinct")


@dataclass(frozen=True)
class CheckReport:
    check: str
    lhs: Union[Fraction, RootExpression]
    rhs: Union[Fraction, RootExpression]
    verdict: Verdict
    equality_class: EqualityClass
    witness: Optional[dict] = None

    def record(self) -> str:
        def fmt(x):
            return format_scalar(x) if isinstance(x, Fraction) else str(x)

        return (
            f"verdict={self.verdict.value} lhs={fmt(self.lhs)} rhs={fmt(self.rhs)} "
            f"equality_class={self.equality_class}"
        )


def _open_lambda(lam) -> Fraction:
    lam = scalar(lam)
    if not 0 < lam < 1:
        raise LambdaOutOfRange(f"lambda must lie in (0, 1), got {lam}")
    return lam


def _body_witness(check, lam, verdict, K1, K2):
    doc = document(K1.cone, {"K1": K1, "K2": K2}, {})
    doc.update(check=check, **{"lambda": format_scalar(lam)}, verdict=verdict.value)
    return doc


def check_volume_convexity(K1, K2, lam) -> CheckReport:
    """V((1-l)K1 ⊕ lK2) <= (1-l)V(K1) + lV(K2), equality iff K1 = K2."""
    lam = _open_lambda(lam)
    mixed = bodies.combine(lam, K1, K2)
    lhs = mixed.volume
    rhs = (1 - lam) * K1.volume + lam * K2.volume
    identical = bodies.equals(K1, K2)
    if lhs < rhs and not identical:
        return CheckReport("convexity", lhs, rhs, Verdict.STRICTLY_LESS, NOT_EQUAL)
    if lhs == rhs and identical:
        return CheckReport("convexity", lhs, rhs, Verdict.EQUAL, EqualityClass("Identical"))
    cls = EqualityClass("Identical") if identical else NOT_EQUAL
    return CheckReport(
        "convexity", lhs, rhs, Verdict.VIOLATED, cls,
        _body_witness("convexity", lam, Verdict.VIOLATED, K1, K2),
    )


def check_reversed_bm(K1, K2, lam) -> CheckReport:
    """V(mix)^(1/n) <= (1-l)V(K1)^(1/n) + lV(K2)^(1/n), equality iff homothets."""
    lam = _open_lambda(lam)
    n = K1.dim
    mixed = bodies.combine(lam, K1, K2)
    lhs = RootExpression(((1, mixed.volume, n),))
    rhs = RootExpression(((1 - lam, K1.volume, n), (lam, K2.volume, n)))
    alpha = bodies.detect_homothety(K1, K2)
    if alpha is not None:
        cls = EqualityClass("Homothets", alpha)
        if certified_root_compare(lhs, rhs, certificate=cls) is Ordering.EQUAL:
            return CheckReport("bm", lhs, rhs, Verdict.EQUAL, cls)
    else:
        cls = NOT_EQUAL
        if certified_root_compare(lhs, rhs) is Ordering.LESS:
            return CheckReport("bm", lhs, rhs, Verdict.STRICTLY_LESS, cls)
    return CheckReport(
        "bm", lhs, rhs, Verdict.VIOLATED, cls,
        _body_witness("bm", lam, Verdict.VIOLATED, K1, K2),
    )


def _check_projections(A0: Polytope, A1: Polytope, h: Hyperplane):
    if poly.project_onto(A0, h) != poly.project_onto(A1, h):
        raise ProjectionMismatch("the two bodies project to different sets")


def classify_lemma3_equality(A0: Polytope, A1: Polytope, h: Hyperplane) -> EqualityClass:
    """Detect ``A0 = A1 + U`` or ``A1 = A0 + U`` with U a segment along h's normal."""
    _check_projections(A0, A1, h)
    nrm = h.normal
    nn = dot(nrm, nrm)
    neg = tuple(-c for c in nrm)
    zero = tuple(Fraction(0) for _ in nrm)
    for base, other, relation in ((A0, A1, "A1=A0+U"), (A1, A0, "A0=A1+U")):
        d_hi = other.support(nrm) - base.support(nrm)
        d_lo = base.support(neg) - other.support(neg)  # change of the minimum
        if d_lo == 0 and d_hi >= 0:
            t = d_hi / nn
        elif d_hi == 0 and d_lo < 0:
            t = d_lo / nn
        else:
            continue
        u = mul(t, nrm)
        if poly.minkowski_sum(base, poly.segment(zero, u)) == other:
            return EqualityClass("OrthogonalSegmentTranslate", SegmentTranslate(relation, t, u))
    return DISTINCT


def check_cylinder_concavity(A0: Polytope, A1: Polytope, lam, h: Hyperplane) -> CheckReport:
    """V((1-l)A0 + lA1) >= (1-l)V(A0) + lV(A1) for bodies over a common base."""
    lam = _open_lambda(lam)
    _check_projections(A0, A1, h)
    mixed = poly.minkowski_sum(poly.scale(A0, 1 - lam), poly.scale(A1, lam))
    lhs = poly.volume(mixed)
    rhs = (1 - lam) * poly.volume(A0) + lam * poly.volume(A1)
    cls = classify_lemma3_equality(A0, A1, h)
    if lhs > rhs and not cls.is_certificate:
        return CheckReport("cylinder", lhs, rhs, Verdict.STRICTLY_GREATER, NOT_EQUAL)
    if lhs == rhs and cls.is_certificate:
        return CheckReport("cylinder", lhs, rhs, Verdict.EQUAL, cls)
    witness = polytope_witness(A0, A1, h)
    witness.update(check="cylinder", **{"lambda": format_scalar(lam)}, verdict="Violated")
    return CheckReport("cylinder", lhs, rhs, Verdict.VIOLATED, cls, witness)


def check_segment_remark(K, U: Sequence, h: Optional[Hyperplane] = None) -> bool:
    """Whether cap_H(K) + U is again the cap of a C-coconvex body.

    The caps of two bodies can only differ by an orthogonal segment if that
    segment is {0}; this returns True exactly when the shifted cap is
    admissible.
    """
    C = K.cone
    u0, u1 = (vector(u) for u in U)
    if h is None:
        h = bodies.choose_hyperplane(C, [K])
    moved = poly.minkowski_sum(bodies.build_cap(K, h), poly.segment(u0, u1))
    if any(not contains(C, v) or dot(h.normal, v) > h.offset for v in moved.vertices):
        return False
    try:
        K2 = bodies.make_coconvex(C, list(moved.vertices))
        return bodies.build_cap(K2, h) == moved
    except GeometryError:
        return False
