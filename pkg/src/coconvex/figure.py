"""SVG rendering of a planar coconvex body with its truncating hyperplane.

Draws the cone C, the line H with the side H+, the section B = H ∩ C, the body
K and the hatched cap_H(K).  Coordinates are exact until the final decimal
formatting, which keeps 6 significant digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional

from . import _hull
from . import body as bodies
from . import cone as cones
from .errors import UnknownName, UnsupportedDimension
from .geom import Hyperplane

WIDTH = 480
MARGIN = Fraction(1, 10)


@dataclass(frozen=True)
class FigureSpec:
    body: str
    hyperplane: Optional[Hyperplane] = None
    viewport: Optional[tuple] = None  # (xmin, ymin, xmax, ymax)


def _num(x) -> str:
    return f"{float(x):.6g}"


def _ccw_about_origin(points):
    def cmp(p, q):
        cross = p[0] * q[1] - p[1] * q[0]
        return -1 if cross > 0 else 1 if cross < 0 else 0

    return sorted(points, key=cmp_to_key(cmp))


def _ring(vertices):
    pts, _ = _hull.clear_denominators(list(vertices))
    return [vertices[i] for i in _hull.full_hull(pts).vertices]


def body_svg(K: bodies.CoconvexBody, h: Optional[Hyperplane] = None, viewport=None) -> str:
    if K.dim != 2:
        raise UnsupportedDimension(f"figures are planar only, got dimension {K.dim}")
    C = K.cone
    if h is None:
        h = bodies.choose_hyperplane(C, [K])
    cap = bodies.build_cap(K, h)
    zero = (Fraction(0), Fraction(0))
    b_ends = _ccw_about_origin([cones.ray_hit(zero, g, h) for g in C.generators])
    far = Hyperplane(h.normal, h.offset * Fraction(5, 4))
    ray_ends = [cones.ray_hit(zero, g, far) for g in C.generators]

    k_poly = [zero] + _ccw_about_origin(list(K.apexes))
    cap_poly = _ring(cap.vertices)
    d = (b_ends[1][0] - b_ends[0][0], b_ends[1][1] - b_ends[0][1])
    ext = Fraction(1, 5)
    h_line = [
        (b_ends[0][0] - ext * d[0], b_ends[0][1] - ext * d[1]),
        (b_ends[1][0] + ext * d[0], b_ends[1][1] + ext * d[1]),
    ]

    if viewport is None:
        pts = [zero] + ray_ends + h_line
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        pad = MARGIN * max(max(xs) - min(xs), max(ys) - min(ys))
        viewport = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    xmin, ymin, xmax, ymax = (Fraction(v) for v in viewport)
    s = Fraction(WIDTH) / (xmax - xmin)
    height = (ymax - ymin) * s

    def xy(p):
        return f"{_num((p[0] - xmin) * s)},{_num((ymax - p[1]) * s)}"

    def centroid(poly):
        return tuple(sum(p[j] for p in poly) / len(poly) for j in range(2))

    def text(p, label, anchor="middle"):
        x, y = xy(p).split(",")
        return f'  <text x="{x}" y="{y}" text-anchor="{anchor}" font-size="16">{label}</text>'

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{_num(height)}" '
        f'viewBox="0 0 {WIDTH} {_num(height)}">',
        "  <defs>",
        '    <pattern id="hatch" width="8" height="8" patternUnits="userSpaceOnUse" '
        'patternTransform="rotate(45)">',
        '      <line x1="0" y1="0" x2="0" y2="8" stroke="#555" stroke-width="2"/>',
        "    </pattern>",
        "  </defs>",
        f'  <polygon id="K" data-label="K" points="{" ".join(xy(p) for p in k_poly)}" '
        'fill="#9ecae1" stroke="#08519c" stroke-width="1.5"/>',
        f'  <polygon id="cap" data-label="cap_H(K)" points="{" ".join(xy(p) for p in cap_poly)}" '
        'fill="url(#hatch)" stroke="#555" stroke-width="1"/>',
    ]
    for end in ray_ends:
        out.append(f'  <polyline data-label="C" points="{xy(zero)} {xy(end)}" stroke="black" '
                   'stroke-width="2" fill="none"/>')
    out.append(f'  <polyline data-label="H" points="{xy(h_line[0])} {xy(h_line[1])}" '
               'stroke="#a50f15" stroke-width="1.5" stroke-dasharray="6,4" fill="none"/>')
    out.append(f'  <polyline data-label="B" points="{xy(b_ends[0])} {xy(b_ends[1])}" '
               'stroke="#a50f15" stroke-width="4" fill="none"/>')

    mid_b = centroid(b_ends)
    # a point on the origin side of H, just off the end of the drawn line
    shift = h.offset / sum(c * c for c in h.normal) * Fraction(3, 20)
    below = tuple(p - shift * c for p, c in zip(h_line[0], h.normal))
    out += [
        text(centroid(k_poly), "K"),
        text(centroid(cap_poly), "cap_H(K)"),
        text(centroid(ray_ends), "C"),
        text(h_line[1], "H", "start"),
        text(below, "H+", "start"),
        text(tuple(c * Fraction(21, 20) for c in mid_b), "B"),
        "</svg>",
    ]
    return "\n".join(out) + "\n"


def emit_figure(spec: FigureSpec, instance) -> str:
    if instance.dim != 2:
        raise UnsupportedDimension(f"figures are planar only, got dimension {instance.dim}")
    if spec.body not in instance.bodies:
        raise UnknownName(f"no body named {spec.body!r}", spec.body)
    return body_svg(instance.bodies[spec.body], spec.hyperplane, spec.viewport)
