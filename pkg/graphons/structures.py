"""
Exact combinatorial structures: multigraphs, step graphons and k-tuple indices.

Every real number is a ``fractions.Fraction``; no floating point is used anywhere.
All values are immutable once constructed.
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from utils.rationals import parse_rational
from .exceptions import (
    AsymmetricWeights,
    EmptyGraph,
    MalformedDocument,
    MassSumNotOne,
    NotSimple,
    SelfLoop,
    WeightOutOfRange,
    ZeroMass,
)

Rational = Fraction
Edge = Tuple[int, int, int]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction"""
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise MalformedDocument(str(exc)) from exc


@dataclass(frozen=True)
class MultiGraph:
    """
    Loop-free multigraph on vertices ``0 .. vertex_count - 1``.

    Edges are stored canonically as sorted ``(u, v, multiplicity)`` triples with
    ``u < v`` and one entry per unordered pair; duplicate pairs passed to the
    constructor are merged by adding their multiplicities.
    """
    vertex_count: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise MalformedDocument(f"Negative vertex count {self.vertex_count}")
        merged: Dict[Tuple[int, int], int] = {}
        for edge in self.edges:
            if len(edge) == 2:
                u, v, multiplicity = edge[0], edge[1], 1
            else:
                u, v, multiplicity = edge
            if u == v:
                raise SelfLoop(f"Self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise MalformedDocument(f"Edge ({u}, {v}) references a vertex outside [0, {self.vertex_count})")
            if multiplicity < 1:
                raise MalformedDocument(f"Edge ({u}, {v}) has non-positive multiplicity {multiplicity}")
            key = (min(u, v), max(u, v))
            merged[key] = merged.get(key, 0) + multiplicity
        object.__setattr__(self, 'edges', tuple(sorted((u, v, m) for (u, v), m in merged.items())))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        """Total number of edges counted with multiplicity"""
        return sum(m for _, _, m in self.edges)

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        for a, b, m in self.edges:
            if (a, b) == key:
                return m
        return 0

    def adjacency(self) -> Dict[int, Dict[int, int]]:
        """Neighbor -> multiplicity map per vertex"""
        adjacency = {v: {} for v in self.vertices}
        for u, v, m in self.edges:
            adjacency[u][v] = m
            adjacency[v][u] = m
        return adjacency

    def degree(self, v: int) -> int:
        return sum(m for a, b, m in self.edges if v in (a, b))

    def isolated_vertices(self) -> List[int]:
        touched = {u for u, _, _ in self.edges} | {v for _, v, _ in self.edges}
        return [v for v in self.vertices if v not in touched]

    def without_isolated_vertices(self) -> 'MultiGraph':
        keep = [v for v in self.vertices if v not in set(self.isolated_vertices())]
        position = {v: i for i, v in enumerate(keep)}
        return MultiGraph(len(keep), tuple((position[u], position[v], m) for u, v, m in self.edges))

    def relabel(self, mapping: Sequence[int]) -> 'MultiGraph':
        """Return the graph with vertex ``v`` renamed to ``mapping[v]``"""
        return MultiGraph(self.vertex_count, tuple((mapping[u], mapping[v], m) for u, v, m in self.edges))

    def to_networkx(self) -> nx.Graph:
        """Underlying simple graph, with the multiplicity kept as an edge attribute"""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for u, v, m in self.edges:
            graph.add_edge(u, v, multiplicity=m)
        return graph

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return False
        return nx.is_connected(self.to_networkx())

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'MultiGraph':
        nodes = sorted(graph.nodes())
        position = {v: i for i, v in enumerate(nodes)}
        edges = []
        for u, v, data in graph.edges(data=True):
            edges.append((position[u], position[v], data.get('multiplicity', 1)))
        return cls(len(nodes), tuple(edges))

    def __str__(self):
        edges = ', '.join(f"{u}-{v}" + (f"x{m}" if m > 1 else '') for u, v, m in self.edges)
        return f"MultiGraph(n={self.vertex_count}; {edges})"


def empty_graph(n: int) -> MultiGraph:
    return MultiGraph(n, ())


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((u, v, 1) for u, v in itertools.combinations(range(n), 2)))


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1, 1) for i in range(n - 1)))


def cycle_graph(n: int) -> MultiGraph:
    """C_n; C_2 is the double edge and C_1 is rejected as a loop"""
    if n == 2:
        return MultiGraph(2, ((0, 1, 2),))
    return MultiGraph(n, tuple((i, (i + 1) % n, 1) for i in range(n)))


def simplify_multigraph(graph: MultiGraph) -> MultiGraph:
    """Merge parallel edges into single edges"""
    return MultiGraph(graph.vertex_count, tuple((u, v, 1) for u, v, _ in graph.edges))


def disjoint_union(first: MultiGraph, second: MultiGraph) -> MultiGraph:
    offset = first.vertex_count
    shifted = tuple((u + offset, v + offset, m) for u, v, m in second.edges)
    return MultiGraph(first.vertex_count + second.vertex_count, first.edges + shifted)


@dataclass(frozen=True)
class StepGraphon:
    """
    Step graphon on the index set [n]: strictly positive vertex masses summing to
    one and a symmetric weight matrix with entries in [0, 1].

    Diagonal weights may be non-zero (loops in the target are allowed).
    """
    masses: Tuple[Fraction, ...]
    weights: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        masses = tuple(as_rational(m) for m in self.masses)
        weights = tuple(tuple(as_rational(w) for w in row) for row in self.weights)
        n = len(masses)
        if n == 0:
            raise MalformedDocument("A step graphon needs at least one vertex")
        if len(weights) != n or any(len(row) != n for row in weights):
            raise MalformedDocument(f"Weight matrix must be {n}x{n}")
        for x, mass in enumerate(masses):
            if mass == 0:
                raise ZeroMass(f"Vertex {x} has zero mass; delete it instead")
            if mass < 0:
                raise MalformedDocument(f"Vertex {x} has negative mass {mass}")
        if sum(masses) != 1:
            raise MassSumNotOne(f"Masses sum to {sum(masses)}, expected exactly 1")
        for x in range(n):
            for y in range(n):
                if not 0 <= weights[x][y] <= 1:
                    raise WeightOutOfRange(f"Weight W({x},{y}) = {weights[x][y]} is outside [0, 1]")
                if weights[x][y] != weights[y][x]:
                    raise AsymmetricWeights(f"W({x},{y}) = {weights[x][y]} differs from W({y},{x}) = {weights[y][x]}")
        object.__setattr__(self, 'masses', masses)
        object.__setattr__(self, 'weights', weights)

    @property
    def n(self) -> int:
        return len(self.masses)

    def weight(self, x: int, y: int) -> Fraction:
        return self.weights[x][y]

    def mass(self, x: int) -> Fraction:
        return self.masses[x]

    def tuple_mass(self, coordinates: Iterable[int]) -> Fraction:
        """Product measure of a k-tuple"""
        total = Fraction(1)
        for x in coordinates:
            total *= self.masses[x]
        return total

    @property
    def is_zero_one(self) -> bool:
        return all(w in (0, 1) for row in self.weights for w in row)

    @property
    def is_graph_like(self) -> bool:
        """0/1 weights, empty diagonal and uniform masses: the image of a simple graph"""
        uniform = all(m == self.masses[0] for m in self.masses)
        loopless = all(self.weights[x][x] == 0 for x in range(self.n))
        return self.is_zero_one and uniform and loopless

    def __str__(self):
        return f"StepGraphon(n={self.n})"


def graph_to_step_graphon(graph: MultiGraph) -> StepGraphon:
    """One interval of mass 1/n per vertex, weight 1 on edges and 0 elsewhere"""
    if graph.vertex_count == 0:
        raise EmptyGraph("Cannot turn the empty graph into a step graphon")
    if not graph.is_simple:
        raise NotSimple(f"{graph} has parallel edges")
    n = graph.vertex_count
    weights = [[Fraction(0)] * n for _ in range(n)]
    for u, v, _ in graph.edges:
        weights[u][v] = weights[v][u] = Fraction(1)
    return StepGraphon(tuple(Fraction(1, n) for _ in range(n)), tuple(tuple(row) for row in weights))


def step_graphon_to_graph(graphon: StepGraphon) -> MultiGraph:
    """Inverse of graph_to_step_graphon for graph-like step graphons"""
    if not graphon.is_graph_like:
        raise NotSimple(f"{graphon} is not the step graphon of a simple graph")
    edges = [(x, y, 1) for x, y in itertools.combinations(range(graphon.n), 2) if graphon.weights[x][y] == 1]
    return MultiGraph(graphon.n, tuple(edges))


def permute_graphon(graphon: StepGraphon, permutation: Sequence[int]) -> StepGraphon:
    """Relabel so that new vertex ``i`` is old vertex ``permutation[i]``"""
    if sorted(permutation) != list(range(graphon.n)):
        raise MalformedDocument(f"{list(permutation)} is not a permutation of [0, {graphon.n})")
    masses = tuple(graphon.masses[p] for p in permutation)
    weights = tuple(tuple(graphon.weights[p][q] for q in permutation) for p in permutation)
    return StepGraphon(masses, weights)


def split_vertex(graphon: StepGraphon, x: int, parts: int = 2) -> StepGraphon:
    """
    Split the atom ``x`` into ``parts`` twins of equal mass.

    The result has the same homomorphism densities as the input.
    """
    n = graphon.n
    origin = list(range(n)) + [x] * (parts - 1)
    share = graphon.masses[x] / parts
    masses = tuple(share if origin[i] == x else graphon.masses[origin[i]] for i in range(len(origin)))
    weights = tuple(tuple(graphon.weights[origin[i]][origin[j]] for j in range(len(origin))) for i in range(len(origin)))
    return StepGraphon(masses, weights)


@dataclass(frozen=True)
class KTupleIndex:
    """
    A k-tuple of vertices of an ambient step graphon on [n].

    Coordinates are 0-based; slot arguments ``j`` are 0-based as well.
    """
    k: int
    coordinates: Tuple[int, ...]
    n: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coordinates) != self.k:
            raise MalformedDocument(f"Expected {self.k} coordinates, got {len(self.coordinates)}")
        if self.n is not None and any(not 0 <= x < self.n for x in self.coordinates):
            raise MalformedDocument(f"Coordinates {self.coordinates} are outside [0, {self.n})")

    def substitute(self, j: int, y: int) -> 'KTupleIndex':
        """The tuple with the j-th component replaced by y"""
        coordinates = self.coordinates[:j] + (y,) + self.coordinates[j + 1:]
        return KTupleIndex(self.k, coordinates, self.n)

    def without(self, j: int) -> Tuple[int, ...]:
        return self.coordinates[:j] + self.coordinates[j + 1:]

    def rank(self, n: int) -> int:
        """Row-major position in [n]^k"""
        return tuple_rank(self.coordinates, n)

    def mass(self, graphon: StepGraphon) -> Fraction:
        return graphon.tuple_mass(self.coordinates)

    @classmethod
    def all(cls, n: int, k: int) -> Iterator['KTupleIndex']:
        for coordinates in all_tuples(n, k):
            yield cls(k, coordinates, n)


def all_tuples(n: int, k: int) -> List[Tuple[int, ...]]:
    """[n]^k in row-major order"""
    return list(itertools.product(range(n), repeat=k))


def tuple_rank(coordinates: Sequence[int], n: int) -> int:
    rank = 0
    for x in coordinates:
        rank = rank * n + x
    return rank


def substitute(coordinates: Tuple[int, ...], j: int, y: int) -> Tuple[int, ...]:
    return coordinates[:j] + (y,) + coordinates[j + 1:]
