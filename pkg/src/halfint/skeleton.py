"""Vertex and edge structure of polytopes given as point sets.

Everything is decided by exact rational linear programs, so the
computed skeleton is a certificate, not an approximation.  A point is a
hull vertex iff it lies outside the convex hull of the remaining
points.  Two vertices are adjacent iff every convex representation of
their midpoint is supported on the pair alone; the weaker test that
merely asks whether the midpoint avoids the hull of the *other*
vertices is not sound here, because a diagonal of a non-simplicial
facet can have a midpoint that needs one of its own endpoints in every
representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import Graph, make_graph
from .rationals import midpoint, point_from_strs, point_label, vadd
from .simplex import hull_system, lp_maximize, prune_candidates

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class PointSet:
    """Finite set of rational points in a common dimension."""

    dim: int
    points: tuple[Point, ...]
    labels: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError("point dimension mismatch")
        labels = tuple(point_label(p) for p in self.points)
        if len(set(labels)) != len(labels):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "points": [[str(c) for c in p] for p in self.points],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PointSet":
        points = tuple(point_from_strs(p) for p in data["points"])
        return cls(dim=data["dim"], points=points)

    @classmethod
    def from_iterable(cls, dim: int, points: Iterable[Sequence]) -> "PointSet":
        pts = tuple(tuple(Fraction(c) for c in p) for p in points)
        return cls(dim=dim, points=pts)


def hull_vertices(pset: PointSet) -> list[int]:
    """Indices of the points that are vertices of the convex hull."""
    from .simplex import convex_combination

    out = []
    pts = pset.points
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if not others or convex_combination(p, others) is None:
            out.append(i)
    return out


def _adjacent(points: Sequence[Point], i: int, j: int) -> bool:
    """Whether vertices ``i`` and ``j`` span an edge of the hull.

    Decided by maximizing the total representation weight carried by
    the other points: the pair is an edge iff that maximum is zero.
    """
    target = midpoint(points[i], points[j])
    active = prune_candidates(target, points, list(range(len(points))))
    off = [k for k in active if k != i and k != j]
    if not off:
        return True
    rows, rhs = hull_system(target, points, active)
    objective = [0 if k == i or k == j else 1 for k in active]
    result = lp_maximize(rows, rhs, objective, stop_when_positive=True)
    if result is None:
        raise AssertionError("midpoint of two hull points must be representable")
    value, _ = result
    return value == 0


def hull_edges(pset: PointSet) -> list[tuple[int, int]]:
    """Index pairs that form edges of the convex hull of ``pset``.

    Requires every point of ``pset`` to be a hull vertex; raises
    ValueError otherwise.  Pairs whose coordinate sum collides with
    another pair's are rejected without a linear program: equal sums
    mean equal midpoints, and a midpoint shared with a second
    (necessarily disjoint) pair already has a representation off the
    first pair.
    """
    verts = hull_vertices(pset)
    if len(verts) != len(pset):
        bad = sorted(set(range(len(pset))) - set(verts))
        raise ValueError(
            "not hull vertices: " + ", ".join(pset.labels[i] for i in bad)
        )
    pts = pset.points
    n = len(pts)
    sums: dict[str, list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            sums.setdefault(point_label(vadd(pts[i], pts[j])), []).append((i, j))
    edges = []
    for pairs in sums.values():
        if len(pairs) > 1:
            continue
        i, j = pairs[0]
        if _adjacent(pts, i, j):
            edges.append((i, j))
    edges.sort()
    return edges


def skeleton_graph(pset: PointSet) -> Graph:
    """Graph of hull vertices and hull edges, labeled by coordinates."""
    edges = hull_edges(pset)
    return make_graph(pset.labels, edges)


def skeleton_report(pset: PointSet, graph: Graph) -> dict:
    return {
        "dim": pset.dim,
        "vertex_count": graph.n,
        "edge_count": len(graph.edges),
        "vertices": list(graph.labels),
        "edges": [[a, b] for a, b in graph.sorted_edges()],
    }
