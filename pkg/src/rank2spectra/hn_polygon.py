"""Harder-Narasimhan polygons of finite (rank, degree) evidence sets.

There are no sheaves here: a polygon is the upper convex hull of whatever
subsheaf points the caller supplies, stretched between ``(0, 0)`` and the
point of the whole sheaf.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import EndpointMismatch, InvalidPoint, InvalidPolygon, RankOverflow

__all__ = [
    "RankDegreePoint",
    "HNPolygon",
    "hnp_from_points",
    "slopes",
    "polygon_geq",
    "is_semistable_profile",
]


class RankDegreePoint(NamedTuple):
    rank: int
    degree: int


def _cross(o: RankDegreePoint, p: RankDegreePoint, q: RankDegreePoint) -> int:
    return (p.rank - o.rank) * (q.degree - o.degree) - (p.degree - o.degree) * (q.rank - o.rank)


@dataclass(frozen=True)
class HNPolygon:
    vertices: tuple[RankDegreePoint, ...]

    def __post_init__(self) -> None:
        verts = tuple(RankDegreePoint(*v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2 or verts[0] != (0, 0):
            raise InvalidPolygon("a polygon starts at (0, 0) and has at least one edge")
        for p, q in zip(verts, verts[1:]):
            if q.rank <= p.rank:
                raise InvalidPolygon("vertex ranks must strictly increase")
        for o, p, q in zip(verts, verts[1:], verts[2:]):
            if _cross(o, p, q) >= 0:
                raise InvalidPolygon("edge slopes must strictly decrease")

    @property
    def total(self) -> RankDegreePoint:
        return self.vertices[-1]

    def value_at(self, x: Fraction | int) -> Fraction:
        """Height of the polygon over rank ``x``."""
        x = Fraction(x)
        verts = self.vertices
        if not 0 <= x <= verts[-1].rank:
            raise ValueError(f"rank {x} outside [0, {verts[-1].rank}]")
        i = min(bisect_right([v.rank for v in verts], x), len(verts) - 1)
        p, q = verts[i - 1], verts[i]
        return p.degree + Fraction(q.degree - p.degree, q.rank - p.rank) * (x - p.rank)

    def to_list(self) -> list[list[int]]:
        return [[v.rank, v.degree] for v in self.vertices]


def _prepare(points: Iterable[Iterable[int]], total: Iterable[int]) -> tuple[list[RankDegreePoint], RankDegreePoint]:
    total = RankDegreePoint(*total)
    if total.rank < 1:
        raise InvalidPoint(f"total rank must be positive, got {total.rank}")
    inner: dict[int, int] = {}
    for raw in points:
        p = RankDegreePoint(*raw)
        if p.rank < 0:
            raise InvalidPoint(f"negative rank in {tuple(p)}")
        if p.rank > total.rank:
            raise RankOverflow(f"point {tuple(p)} exceeds total rank {total.rank}")
        if p.rank == 0:
            if p.degree > 0:
                raise InvalidPoint(f"rank-0 point {tuple(p)} lies above the origin")
            continue
        if p.rank == total.rank:
            if p.degree > total.degree:
                raise InvalidPoint(f"full-rank point {tuple(p)} lies above the total {tuple(total)}")
            continue
        inner[p.rank] = max(inner.get(p.rank, p.degree), p.degree)
    pts = [RankDegreePoint(0, 0)]
    pts += [RankDegreePoint(k, inner[k]) for k in sorted(inner)]
    pts.append(total)
    return pts, total


def hnp_from_points(points: Iterable[Iterable[int]], total: Iterable[int]) -> HNPolygon:
    """Upper convex hull of ``points`` from ``(0, 0)`` to ``total``, collinear points merged."""
    pts, _ = _prepare(points, total)
    hull: list[RankDegreePoint] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) >= 0:
            hull.pop()
        hull.append(p)
    return HNPolygon(tuple(hull))


def slopes(p: HNPolygon) -> list[Fraction]:
    out = [
        Fraction(b.degree - a.degree, b.rank - a.rank)
        for a, b in zip(p.vertices, p.vertices[1:])
    ]
    assert all(x > y for x, y in zip(out, out[1:])), out
    return out


def polygon_geq(p: HNPolygon, q: HNPolygon) -> bool:
    """True iff ``p`` lies on or above ``q`` everywhere."""
    if p.total != q.total:
        raise EndpointMismatch(f"endpoints differ: {tuple(p.total)} vs {tuple(q.total)}")
    # both graphs are piecewise linear, so comparing at every vertex rank is exact
    xs = sorted({v.rank for v in p.vertices} | {v.rank for v in q.vertices})
    return all(p.value_at(x) >= q.value_at(x) for x in xs)


def is_semistable_profile(points: Iterable[Iterable[int]], total: Iterable[int]) -> bool:
    return len(hnp_from_points(points, total).vertices) == 2
