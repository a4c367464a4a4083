"""Zonotopes with exact generators, and recognition of half-integral ones.

A zonotope is the Minkowski sum of segments conv{0, g} over a set of
generator vectors g.  Vertices correspond to sign assignments: the
point sum_{sigma_k = +} g_k is a vertex exactly when some direction c
satisfies sign(c . g_k) = sigma_k strictly for every k, an LP question
answered exactly.

A zonotope is half-integral when, after translating each coordinate's
minimum to zero, every vertex coordinate lies in {0, 1/2, 1}.  Such
zonotopes are affinely equivalent to graphical zonotopes of graphs of
maximum degree two, i.e. disjoint unions of paths and cycles:

* every minimal linear dependence (circuit) among the generators has
  coefficients +-1 after scaling and corresponds to a cycle;
* distinct circuit blocks occupy disjoint coordinate supports, and the
  leftover generators are linearly independent and form the path part.

``recognize_graphical`` extracts that structure with a certificate and
``realize_half_integral`` inverts it, producing canonical generators
whose zonotope is half-integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .graphs import Graph, connected_components, cycle_path_profile, make_graph
from .linalg import minimal_circuit, rank
from .rationals import HALF, ONE, ZERO, point_from_strs, point_to_strs
from .simplex import lp_feasible
from .skeleton import PointSet

MAX_VERTEX_ENUM_GENERATORS = 20


class NotHalfIntegralError(ValueError):
    """A zonotope operation's half-integrality precondition failed."""


@dataclass(frozen=True)
class GeneratorSet:
    """Canonical zonotope generators: nonzero, sign-normalized so the
    first nonzero coordinate is positive, pairwise non-collinear, and
    sorted lexicographically."""

    dim: int
    generators: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.generators)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "generators": [point_to_strs(g) for g in self.generators],
        }

    @staticmethod
    def from_json(data: Mapping) -> "GeneratorSet":
        gens = [point_from_strs(coords) for coords in data["generators"]]
        return canonicalize(gens, dim=int(data["dim"]))


def canonicalize(
    vectors: Iterable[Sequence], dim: Optional[int] = None
) -> GeneratorSet:
    """Validate and normalize raw generator vectors."""
    gens = [tuple(Fraction(x) for x in vec) for vec in vectors]
    if dim is None:
        if not gens:
            raise ValueError("dimension required for an empty generator set")
        dim = len(gens[0])
    if dim < 1:
        raise ValueError("ambient dimension must be positive")
    normalized = []
    directions = {}
    for idx, g in enumerate(gens):
        if len(g) != dim:
            raise ValueError("generator %d does not have dimension %d" % (idx, dim))
        lead = next((x for x in g if x != 0), None)
        if lead is None:
            raise ValueError("generator %d is the zero vector" % idx)
        if lead < 0:
            g = tuple(-x for x in g)
            lead = -lead
        direction = tuple(x / lead for x in g)
        if direction in directions:
            raise ValueError(
                "generators %d and %d are collinear" % (directions[direction], idx)
            )
        directions[direction] = idx
        normalized.append(g)
    return GeneratorSet(dim, tuple(sorted(normalized)))


def vertices_with_signs(
    gs: GeneratorSet,
) -> list[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
    """All (sign vector, vertex) pairs, in ascending sign-vector order.

    Sign vectors are 0/1 tuples aligned with the generators; entry 1
    puts the generator on the positive side, and the vertex is the sum
    of the positive-side generators.  A sign vector is kept exactly when
    some direction c has c . g_k > 0 for assigned 1 and < 0 for 0;
    strictness is enforced by scaling (|c . g_k| >= 1).
    """
    n = len(gs.generators)
    if n > MAX_VERTEX_ENUM_GENERATORS:
        raise ValueError(
            "vertex enumeration guarded at %d generators" % MAX_VERTEX_ENUM_GENERATORS
        )
    d = gs.dim
    if n == 0:
        return [((), tuple(ZERO for _ in range(d)))]
    out = []
    for mask in range(1 << n):
        signs = tuple((mask >> k) & 1 for k in range(n))
        rows = []
        rhs = []
        for k, g in enumerate(gs.generators):
            sign = 1 if signs[k] else -1
            row = [sign * x for x in g]
            row += [-sign * x for x in g]
            slack = [0] * n
            slack[k] = -1
            rows.append(row + slack)
            rhs.append(1)
        if lp_feasible(rows, rhs) is not None:
            vertex = tuple(
                sum((g[i] for k, g in enumerate(gs.generators) if signs[k]), ZERO)
                for i in range(d)
            )
            out.append((signs, vertex))
    return out


def zonotope_vertices(gs: GeneratorSet) -> PointSet:
    points = sorted(set(v for _, v in vertices_with_signs(gs)))
    return PointSet(gs.dim, tuple(points))


def coordinate_budget(gs: GeneratorSet) -> tuple[bool, list[tuple[int, str]]]:
    """Necessary per-coordinate conditions for half-integrality.

    In each coordinate, at most two generators may be nonzero; if two
    are, both entries must be +-1/2; and the absolute entries must sum
    to at most 1 (the zonotope's axis projection may not be longer than
    the unit cube's).  Returns (verdict, violations).
    """
    violations = []
    for i in range(gs.dim):
        entries = [g[i] for g in gs.generators if g[i] != 0]
        if len(entries) > 2:
            violations.append(
                (i, "%d generators are nonzero in coordinate %d" % (len(entries), i))
            )
            continue
        if len(entries) == 2 and not all(abs(x) == HALF for x in entries):
            violations.append(
                (i, "two generators share coordinate %d but entries are not both +-1/2" % i)
            )
        total = sum(abs(x) for x in entries)
        if total > 1:
            violations.append(
                (i, "coordinate %d carries total length %s > 1" % (i, total))
            )
    return (not violations, violations)


def is_half_integral(
    gs: GeneratorSet,
) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    """Decide half-integrality by full vertex enumeration.

    Returns (verdict, translation); the translation shifts each
    coordinate's vertex minimum to zero, and the verdict is whether all
    translated vertex coordinates lie in {0, 1/2, 1}.
    """
    vertices = zonotope_vertices(gs).points
    minima = tuple(min(v[i] for v in vertices) for i in range(gs.dim))
    translation = tuple(-m for m in minima)
    allowed = (ZERO, HALF, ONE)
    for v in vertices:
        for x, t in zip(v, translation):
            if x + t not in allowed:
                return False, None
    return True, translation


@dataclass(frozen=True)
class Decomposition:
    """Certified block structure of a half-integral zonotope's generators.

    ``circuit_blocks`` lists the index blocks whose generators carry a
    minimal dependence; ``circuit_coefficients`` holds the certifying
    +-1 coefficients, aligned positionally with each block (so scaling
    generator ``block[t]`` by ``coefficients[t]`` yields vectors that
    sum to zero and map onto the edge directions of a cycle, edge t
    joining cycle vertices t and t+1).  ``independent_block`` holds the
    leftover indices, realized as a single path with that many edges.
    ``block_supports`` lists each block's nonzero coordinate set, the
    independent block's last; distinct entries never share coordinates.
    """

    circuit_blocks: tuple[tuple[int, ...], ...]
    circuit_coefficients: tuple[tuple[Fraction, ...], ...]
    independent_block: tuple[int, ...]
    block_supports: tuple[tuple[int, ...], ...]
    graph: Graph

    def component_profile(self) -> tuple[tuple[int, ...], int]:
        """(sorted cycle lengths, path edge count) of the decomposition."""
        return (
            tuple(sorted(len(b) for b in self.circuit_blocks)),
            len(self.independent_block),
        )

    def to_json(self) -> dict:
        cycles, path_edges = self.component_profile()
        components = [{"cycle": k} for k in cycles]
        if path_edges:
            components.append({"path_edges": path_edges})
        return {
            "components": components,
            "circuit_blocks": [list(b) for b in self.circuit_blocks],
            "circuit_coefficients": [
                [str(c) for c in coeffs] for coeffs in self.circuit_coefficients
            ],
            "independent_block": list(self.independent_block),
            "block_supports": [list(s) for s in self.block_supports],
            "graph": self.graph.to_json(),
        }


def _support(gens: Sequence[Sequence], indices: Iterable[int]) -> tuple[int, ...]:
    coords = set()
    for k in indices:
        for i, x in enumerate(gens[k]):
            if x != 0:
                coords.add(i)
    return tuple(sorted(coords))


def _blocks_graph(cycle_lengths: Sequence[int], path_edges: int) -> Graph:
    labels = []
    edges = []
    offset = 0
    for b, k in enumerate(cycle_lengths):
        labels.extend("c%d.%d" % (b, t) for t in range(k))
        edges.extend((offset + t, offset + (t + 1) % k) for t in range(k))
        offset += k
    if path_edges:
        labels.extend("p.%d" % t for t in range(path_edges + 1))
        edges.extend((offset + t, offset + t + 1) for t in range(path_edges))
    return make_graph(labels, edges)


def recognize_graphical(gs: GeneratorSet) -> Decomposition:
    """Decompose a half-integral zonotope into cycle and path blocks.

    Half-integrality is checked first (cheap coordinate budget, then
    exact vertex enumeration).  Circuits are then peeled off one at a
    time; each must certify with +-1 coefficients and a coordinate
    support disjoint from everything else, otherwise the input
    contradicts half-integrality and the error says which condition
    broke.
    """
    ok, violations = coordinate_budget(gs)
    if not ok:
        raise NotHalfIntegralError(
            "coordinate budget violated: " + "; ".join(msg for _, msg in violations)
        )
    verdict, _ = is_half_integral(gs)
    if not verdict:
        raise NotHalfIntegralError(
            "not half-integral: translated vertex coordinates leave {0, 1/2, 1}"
        )
    gens = gs.generators
    remaining = list(range(len(gens)))
    circuit_blocks = []
    circuit_coeffs = []
    while True:
        found = minimal_circuit([gens[k] for k in remaining])
        if found is None:
            break
        local, coeffs = found
        block = tuple(remaining[t] for t in local)
        if any(abs(c) != 1 for c in coeffs):
            raise NotHalfIntegralError(
                "circuit %s has non-unit coefficients %s"
                % (block, [str(c) for c in coeffs])
            )
        circuit_blocks.append(block)
        circuit_coeffs.append(coeffs)
        removed = set(block)
        remaining = [k for k in remaining if k not in removed]
    independent = tuple(remaining)
    if rank([gens[k] for k in independent]) != len(independent) and independent:
        raise NotHalfIntegralError("leftover generators are not independent")
    supports = [_support(gens, b) for b in circuit_blocks]
    supports.append(_support(gens, independent))
    for a in range(len(supports)):
        for b in range(a + 1, len(supports)):
            overlap = set(supports[a]) & set(supports[b])
            if overlap:
                raise NotHalfIntegralError(
                    "blocks share coordinates %s" % sorted(overlap)
                )
    graph = _blocks_graph([len(b) for b in circuit_blocks], len(independent))
    return Decomposition(
        circuit_blocks=tuple(circuit_blocks),
        circuit_coefficients=tuple(circuit_coeffs),
        independent_block=independent,
        block_supports=tuple(supports),
        graph=graph,
    )


def graphical_generators(g: Graph) -> GeneratorSet:
    """Generators e_u - e_v (u < v) of the graphical zonotope of g."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    gens = []
    for u, v in g.sorted_edges():
        vec = [ZERO] * g.n
        vec[u] = ONE
        vec[v] = -ONE
        gens.append(tuple(vec))
    return canonicalize(gens, dim=g.n)


def realize_half_integral(g: Graph) -> GeneratorSet:
    """Canonical generators of a half-integral zonotope realizing g.

    g must have maximum degree two.  Every cycle component of length k
    becomes k generators (1/2)(e_i - e_j) supported on a fresh block of
    k coordinates (the k-th generator closes the circuit), and every
    path component with m edges becomes m standard basis vectors on a
    fresh block of m coordinates.  Components are processed in order of
    their smallest vertex.
    """
    cycles, _ = cycle_path_profile(g)  # validates the degree bound
    gens: list[tuple[Fraction, ...]] = []
    offset = 0
    dim = 0
    plan: list[tuple[str, int]] = []
    for comp in connected_components(g):
        comp_set = set(comp)
        edge_count = sum(1 for u, v in g.edges if u in comp_set)
        if edge_count == 0:
            continue
        kind = "cycle" if edge_count == len(comp) else "path"
        plan.append((kind, edge_count))
        dim += edge_count
    if dim == 0:
        raise ValueError("graph has no edges; nothing to realize")
    for kind, k in plan:
        if kind == "cycle":
            for t in range(k - 1):
                vec = [ZERO] * dim
                vec[offset + t] = HALF
                vec[offset + t + 1] = -HALF
                gens.append(tuple(vec))
            vec = [ZERO] * dim
            vec[offset] = HALF
            vec[offset + k - 1] = -HALF
            gens.append(tuple(vec))
        else:
            for t in range(k):
                vec = [ZERO] * dim
                vec[offset + t] = ONE
                gens.append(tuple(vec))
        offset += k
    return canonicalize(gens, dim=dim)
