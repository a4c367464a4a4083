"""All-pairs flow routings and exact congestion certificates.

A routing sends one unit of flow between every ordered pair of distinct
vertices, split over explicitly listed paths with positive rational
weights summing to one.  Its congestion is the maximum total flow over
any directed arc, divided by the vertex count.  A routing of congestion
rho certifies edge expansion at least 1/(2 rho): each boundary edge of
a cut {S, V-S} carries at most 2 rho n flow across, while the demand
separated by the cut is at least |S| (n - |S|) >= |S| n / 2.

The concrete routings here are the hypercube bit-fixing scheme, its
rerouted variant on the hypercube minus two antipodal vertices, the
weighted shortest-path scheme on the hexagon, and the product
construction that routes cross pairs through the intermediate vertex
keeping the source's first coordinate and the target's second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Graph, cartesian_product, cycle_graph, hypercube, induced_subgraph

Path = tuple[int, ...]
WeightedPath = tuple[Path, Fraction]


@dataclass(frozen=True)
class Routing:
    graph: Graph
    paths: dict[tuple[int, int], list[WeightedPath]]

    def to_json(self) -> dict:
        demands = []
        for (s, t) in sorted(self.paths):
            demands.append(
                {
                    "source": self.graph.labels[s],
                    "target": self.graph.labels[t],
                    "paths": [
                        {
                            "vertices": [self.graph.labels[v] for v in path],
                            "weight": str(weight),
                        }
                        for path, weight in self.paths[(s, t)]
                    ],
                }
            )
        return {"graph": self.graph.to_json(), "demands": demands}


def validate(routing: Routing) -> Optional[str]:
    """First violation of the routing contract, or None when valid."""
    g = routing.graph
    n = g.n
    expected = {(s, t) for s in range(n) for t in range(n) if s != t}
    given = set(routing.paths.keys())
    missing = sorted(expected - given)
    if missing:
        return "missing demand (%d, %d)" % missing[0]
    extra = sorted(given - expected)
    if extra:
        return "unexpected demand (%d, %d)" % extra[0]
    for (s, t) in sorted(routing.paths):
        entries = routing.paths[(s, t)]
        if not entries:
            return "demand (%d, %d) has no paths" % (s, t)
        total = Fraction(0)
        for idx, (path, weight) in enumerate(entries):
            if weight <= 0:
                return "demand (%d, %d) path %d has non-positive weight" % (s, t, idx)
            total += weight
            if len(path) < 2 or path[0] != s or path[-1] != t:
                return "demand (%d, %d) path %d has wrong endpoints" % (s, t, idx)
            if len(set(path)) != len(path):
                return "demand (%d, %d) path %d repeats a vertex" % (s, t, idx)
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    return "demand (%d, %d) path %d uses a non-edge (%d, %d)" % (
                        s,
                        t,
                        idx,
                        a,
                        b,
                    )
        if total != 1:
            return "demand (%d, %d) weights sum to %s, not 1" % (s, t, total)
    return None


def arc_flows(routing: Routing) -> dict[tuple[int, int], Fraction]:
    """Total flow on each directed arc (unvalidated accumulation)."""
    flows: dict[tuple[int, int], Fraction] = {}
    for entries in routing.paths.values():
        for path, weight in entries:
            for a, b in zip(path, path[1:]):
                flows[(a, b)] = flows.get((a, b), Fraction(0)) + weight
    return flows


@dataclass(frozen=True)
class CongestionReport:
    vertex_count: int
    max_arc_flow: Fraction
    congestion: Fraction
    argmax_arc: Optional[tuple[str, str]]

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "max_arc_flow": str(self.max_arc_flow),
            "congestion": str(self.congestion),
            "argmax_arc": list(self.argmax_arc) if self.argmax_arc else None,
        }


def congestion(routing: Routing) -> CongestionReport:
    """Exact congestion of a valid routing.

    The reported arc is the flow maximizer, ties broken by the
    lexicographically smallest (tail label, head label) pair.
    """
    problem = validate(routing)
    if problem is not None:
        raise ValueError("invalid routing: " + problem)
    g = routing.graph
    flows = arc_flows(routing)
    if not flows:
        return CongestionReport(g.n, Fraction(0), Fraction(0), None)
    best_arc = None
    best_flow = None
    for (a, b), flow in flows.items():
        key = (g.labels[a], g.labels[b])
        if (
            best_flow is None
            or flow > best_flow
            or (flow == best_flow and key < best_arc)
        ):
            best_flow = flow
            best_arc = key
    return CongestionReport(
        vertex_count=g.n,
        max_arc_flow=best_flow,
        congestion=best_flow / g.n,
        argmax_arc=best_arc,
    )


def expansion_lower_bound(report: CongestionReport) -> Fraction:
    """Edge expansion is at least 1/(2 rho) for congestion rho."""
    if report.congestion <= 0:
        raise ValueError("lower bound requires positive congestion")
    return 1 / (2 * report.congestion)


def _bitfix_path(s: int, t: int, d: int) -> Path:
    """Bit-fixing walk from s to t, correcting coordinates left to right.

    Coordinate k is the k-th label character, i.e. bit d-1-k of the
    vertex index.
    """
    path = [s]
    cur = s
    for k in range(d):
        bit = 1 << (d - 1 - k)
        if (cur ^ t) & bit:
            cur ^= bit
            path.append(cur)
    return tuple(path)


MAX_ROUTING_DIMENSION = 10


def bitfix_routing(d: int) -> Routing:
    """All-pairs bit-fixing routing on Q_d; every arc carries 2^(d-1)."""
    if not 1 <= d <= MAX_ROUTING_DIMENSION:
        raise ValueError("bitfix routing supported for 1 <= d <= %d" % MAX_ROUTING_DIMENSION)
    g = hypercube(d)
    n = 1 << d
    paths = {}
    one = Fraction(1)
    for s in range(n):
        for t in range(n):
            if s != t:
                paths[(s, t)] = [(_bitfix_path(s, t, d), one)]
    return Routing(g, paths)


def punctured_routing(d: int) -> Routing:
    """Bit-fixing routing on Q_d minus the origin and the all-ones vertex.

    Bit-fixing paths whose interior hits a removed vertex are patched
    locally: a path entering the origin from e_i and leaving to e_j is
    sent through e_i + e_j instead, and symmetrically at the all-ones
    vertex through the vertex missing both flipped coordinates.  For
    d >= 4 the two patched arc families are disjoint and every arc flow
    stays at or below 3 * 2^(d-2); d = 3 is allowed but the families
    overlap, so only the generic congestion guarantee applies.
    """
    if not 3 <= d <= MAX_ROUTING_DIMENSION:
        raise ValueError(
            "punctured routing supported for 3 <= d <= %d" % MAX_ROUTING_DIMENSION
        )
    origin = 0
    allones = (1 << d) - 1
    full = hypercube(d)
    keep = [v for v in range(1 << d) if v not in (origin, allones)]
    g = induced_subgraph(full, keep)
    new_index = {old: new for new, old in enumerate(keep)}
    paths = {}
    one = Fraction(1)
    for s in keep:
        for t in keep:
            if s == t:
                continue
            path = list(_bitfix_path(s, t, d))
            for pos in range(1, len(path) - 1):
                if path[pos] == origin:
                    path[pos] = path[pos - 1] | path[pos + 1]
                elif path[pos] == allones:
                    path[pos] = path[pos - 1] & path[pos + 1]
            mapped = tuple(new_index[v] for v in path)
            paths[(new_index[s], new_index[t])] = [(mapped, one)]
    return Routing(g, paths)


def hexagon_routing() -> Routing:
    """Shortest-path routing on the 6-cycle.

    Pairs at distance one or two use their unique shortest path with
    weight 1; antipodal pairs split evenly over the two length-3 paths.
    Every arc then carries 3 + 3/2 flow, so the congestion is 3/4.
    """
    g = cycle_graph(6)
    paths = {}
    one = Fraction(1)
    half = Fraction(1, 2)
    for s in range(6):
        for t in range(6):
            if s == t:
                continue
            forward = (t - s) % 6
            if forward in (1, 2):
                walk = tuple((s + step) % 6 for step in range(forward + 1))
                paths[(s, t)] = [(walk, one)]
            elif forward in (4, 5):
                backward = 6 - forward
                walk = tuple((s - step) % 6 for step in range(backward + 1))
                paths[(s, t)] = [(walk, one)]
            else:
                cw = tuple((s + step) % 6 for step in range(4))
                ccw = tuple((s - step) % 6 for step in range(4))
                paths[(s, t)] = [(cw, half), (ccw, half)]
    return Routing(g, paths)


def product_routing(rg: Routing, rh: Routing) -> Routing:
    """Routing on the cartesian product from routings of the factors.

    Same-row and same-column pairs reuse the factor paths inside their
    copy.  A cross pair (u1, v1) -> (u2, v2) is routed through the
    intermediate vertex (u1, v2): first the second factor's paths inside
    copy u1, then the first factor's paths inside copy v2, with product
    weights.  The congestion of the result never exceeds the larger
    factor congestion.
    """
    g, h = rg.graph, rh.graph
    product = cartesian_product(g, h)
    nh = h.n

    def idx(u: int, v: int) -> int:
        return u * nh + v

    paths: dict[tuple[int, int], list[WeightedPath]] = {}
    for u in range(g.n):
        for (v1, v2), entries in rh.paths.items():
            lifted = [
                (tuple(idx(u, x) for x in path), w) for path, w in entries
            ]
            paths[(idx(u, v1), idx(u, v2))] = lifted
    for v in range(h.n):
        for (u1, u2), entries in rg.paths.items():
            lifted = [
                (tuple(idx(y, v) for y in path), w) for path, w in entries
            ]
            paths[(idx(u1, v), idx(u2, v))] = lifted
    for (u1, u2) in rg.paths:
        for (v1, v2) in rh.paths:
            combined = []
            for hpath, hw in rh.paths[(v1, v2)]:
                first_leg = tuple(idx(u1, x) for x in hpath)
                for gpath, gw in rg.paths[(u1, u2)]:
                    second_leg = tuple(idx(y, v2) for y in gpath[1:])
                    combined.append((first_leg + second_leg, hw * gw))
            paths[(idx(u1, v1), idx(u2, v2))] = combined
    return Routing(product, paths)
