"""
Bi-labeled graphs and the generator families used to build them.

A bi-labeled graph is a multigraph together with a vector of input vertices and a
vector of output vertices. Vertex indices are 0-based; generator slots (the ``j``,
``i`` and ``V`` arguments, permutation entries) are 1-based, matching the textual
term syntax.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from graphons.limits import check_limit
from graphons.structures import MultiGraph
from .exceptions import ArityMismatch, BadGeneratorIndex, LabelCollision

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BiLabeledGraph:
    graph: MultiGraph
    inputs: Tuple[int, ...] = ()
    outputs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'inputs', tuple(self.inputs))
        object.__setattr__(self, 'outputs', tuple(self.outputs))
        for name, labels in (('input', self.inputs), ('output', self.outputs)):
            if len(set(labels)) != len(labels):
                raise LabelCollision(f"A vertex carries two {name} labels: {labels}")
            for v in labels:
                if not 0 <= v < self.graph.vertex_count:
                    raise LabelCollision(f"{name.capitalize()} label on missing vertex {v}")

    @property
    def in_arity(self) -> int:
        return len(self.inputs)

    @property
    def out_arity(self) -> int:
        return len(self.outputs)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def underlying_is_simple(self) -> bool:
        return self.graph.is_simple

    @property
    def labeled_vertices(self) -> FrozenSet[int]:
        return frozenset(self.inputs) | frozenset(self.outputs)

    def drop_outputs(self) -> 'BiLabeledGraph':
        return BiLabeledGraph(self.graph, self.inputs, ())

    def without_unlabeled_isolates(self) -> 'BiLabeledGraph':
        """Delete isolated vertices that carry no label (density-neutral)"""
        labeled = self.labeled_vertices
        isolated = set(self.graph.isolated_vertices()) - labeled
        keep = [v for v in self.graph.vertices if v not in isolated]
        position = {v: i for i, v in enumerate(keep)}
        graph = MultiGraph(len(keep), tuple((position[u], position[v], m) for u, v, m in self.graph.edges))
        return BiLabeledGraph(graph, tuple(position[v] for v in self.inputs), tuple(position[v] for v in self.outputs))

    def __str__(self):
        return f"BiLabeledGraph({self.graph}; in={list(self.inputs)}; out={list(self.outputs)})"


def compose(first: BiLabeledGraph, second: BiLabeledGraph) -> BiLabeledGraph:
    """
    Glue the outputs of ``first`` to the inputs of ``second``.

    Output i of ``first`` is identified with input i of ``second``; inputs come
    from ``first`` and outputs from ``second``. Parallel edges accumulate.
    """
    if first.out_arity != second.in_arity:
        raise ArityMismatch(
            f"Cannot compose: first has {first.out_arity} outputs, second has {second.in_arity} inputs"
        )
    mapping: Dict[int, int] = {a: b for a, b in zip(second.inputs, first.outputs)}
    next_vertex = first.vertex_count
    for v in second.graph.vertices:
        if v not in mapping:
            mapping[v] = next_vertex
            next_vertex += 1
    edges = first.graph.edges + tuple((mapping[u], mapping[v], m) for u, v, m in second.graph.edges)
    return BiLabeledGraph(
        MultiGraph(next_vertex, edges),
        first.inputs,
        tuple(mapping[v] for v in second.outputs),
    )


def compose_all(graphs: Sequence[BiLabeledGraph]) -> BiLabeledGraph:
    result = graphs[0]
    for graph in graphs[1:]:
        result = compose(result, graph)
    return result


def schur(first: BiLabeledGraph, second: BiLabeledGraph) -> BiLabeledGraph:
    """Glue input i of ``first`` to input i of ``second``; both must be output-free"""
    if first.out_arity or second.out_arity:
        raise ArityMismatch("Schur products are only defined for graphs without output labels")
    if first.in_arity != second.in_arity:
        raise ArityMismatch(f"Schur product of arities {first.in_arity} and {second.in_arity}")
    mapping: Dict[int, int] = {a2: a1 for a1, a2 in zip(first.inputs, second.inputs)}
    next_vertex = first.vertex_count
    for v in second.graph.vertices:
        if v not in mapping:
            mapping[v] = next_vertex
            next_vertex += 1
    edges = first.graph.edges + tuple((mapping[u], mapping[v], m) for u, v, m in second.graph.edges)
    return BiLabeledGraph(MultiGraph(next_vertex, edges), first.inputs, ())


def transpose(graph: BiLabeledGraph) -> BiLabeledGraph:
    return BiLabeledGraph(graph.graph, graph.outputs, graph.inputs)


# Generators

def _check_slot(k: int, j: int, what: str = 'j'):
    if not 1 <= j <= k:
        raise BadGeneratorIndex(f"Slot {what}={j} outside [1, {k}]")


class Generator:
    """Base for the generator families; ``build`` returns the bi-labeled graph"""
    k: int
    family_height = 0

    @property
    def arity(self) -> Tuple[int, int]:
        return (self.k, self.k)

    def build(self) -> BiLabeledGraph:
        raise NotImplementedError

    def validate(self):
        if self.k < 0:
            raise BadGeneratorIndex(f"Negative arity {self.k}")


@dataclass(frozen=True)
class One(Generator):
    k: int

    @property
    def arity(self):
        return (self.k, 0)

    def build(self):
        return BiLabeledGraph(MultiGraph(self.k), tuple(range(self.k)), ())


@dataclass(frozen=True)
class Introduce(Generator):
    """Vertices [k]; all k are inputs and all but slot j are outputs"""
    k: int
    j: int

    @property
    def arity(self):
        return (self.k, self.k - 1)

    def validate(self):
        _check_slot(self.k, self.j)

    def build(self):
        outputs = tuple(v for v in range(self.k) if v != self.j - 1)
        return BiLabeledGraph(MultiGraph(self.k), tuple(range(self.k)), outputs)


@dataclass(frozen=True)
class Forget(Generator):
    k: int
    j: int

    @property
    def arity(self):
        return (self.k - 1, self.k)

    def validate(self):
        _check_slot(self.k, self.j)

    def build(self):
        return transpose(Introduce(self.k, self.j).build())


@dataclass(frozen=True)
class Neighbor(Generator):
    """Introduce(k, j) composed with Forget(k, j): slot j is split in two"""
    k: int
    j: int
    family_height = 1

    def validate(self):
        _check_slot(self.k, self.j)

    def build(self):
        inputs = tuple(range(self.k))
        outputs = tuple(self.k if v == self.j - 1 else v for v in range(self.k))
        return BiLabeledGraph(MultiGraph(self.k + 1), inputs, outputs)


@dataclass(frozen=True)
class Adjacency(Generator):
    k: int
    i: int
    j: int

    def validate(self):
        _check_slot(self.k, self.i, 'i')
        _check_slot(self.k, self.j)
        if self.i == self.j:
            raise BadGeneratorIndex(f"Adjacency needs two distinct slots, got i = j = {self.i}")

    def build(self):
        labels = tuple(range(self.k))
        return BiLabeledGraph(MultiGraph(self.k, ((self.i - 1, self.j - 1, 1),)), labels, labels)


@dataclass(frozen=True)
class Permutation(Generator):
    """Edgeless graph on [k]; input m sits on vertex m, output m on vertex pi(m)"""
    k: int
    pi: Tuple[int, ...]

    def validate(self):
        if sorted(self.pi) != list(range(1, self.k + 1)):
            raise BadGeneratorIndex(f"{list(self.pi)} is not a permutation of [1, {self.k}]")

    @property
    def is_identity(self) -> bool:
        return tuple(self.pi) == tuple(range(1, self.k + 1))

    def build(self):
        return BiLabeledGraph(MultiGraph(self.k), tuple(range(self.k)), tuple(p - 1 for p in self.pi))


@dataclass(frozen=True)
class AdjNei(Generator):
    """Neighbor(k, j) after adjacency to every slot of V: edges from the new slot-j vertex to V"""
    k: int
    j: int
    V: FrozenSet[int] = frozenset()
    family_height = 1

    def __post_init__(self):
        object.__setattr__(self, 'V', frozenset(self.V))

    def validate(self):
        _check_slot(self.k, self.j)
        for i in self.V:
            _check_slot(self.k, i, 'i')
        if self.j in self.V:
            raise BadGeneratorIndex(f"V must not contain j = {self.j}")

    def build(self):
        inputs = tuple(range(self.k))
        outputs = tuple(self.k if v == self.j - 1 else v for v in range(self.k))
        edges = tuple((i - 1, self.k, 1) for i in sorted(self.V))
        return BiLabeledGraph(MultiGraph(self.k + 1, edges), inputs, outputs)


@dataclass(frozen=True)
class NonObliviousSimple(Generator):
    """Forget(k+1, j1), then adjacency of slot j1 to V, then Introduce(k+1, j2)"""
    k: int
    j1: int
    V: FrozenSet[int]
    j2: int
    family_height = 1

    def __post_init__(self):
        object.__setattr__(self, 'V', frozenset(self.V))

    def validate(self):
        _check_slot(self.k + 1, self.j1, 'j1')
        _check_slot(self.k + 1, self.j2, 'j2')
        for i in self.V:
            _check_slot(self.k + 1, i, 'i')
        if self.j1 in self.V:
            raise BadGeneratorIndex(f"V must not contain j1 = {self.j1}")

    def build(self):
        chain = [Forget(self.k + 1, self.j1).build()]
        chain += [Adjacency(self.k + 1, i, self.j1).build() for i in sorted(self.V)]
        chain.append(Introduce(self.k + 1, self.j2).build())
        return compose_all(chain)


GENERATOR_TYPES = (One, Introduce, Forget, Neighbor, Adjacency, Permutation, AdjNei, NonObliviousSimple)


def make_generator(generator: Generator) -> BiLabeledGraph:
    if not isinstance(generator, GENERATOR_TYPES):
        raise BadGeneratorIndex(f"Unknown generator {generator!r}")
    generator.validate()
    return generator.build()


def edge_operator_graph() -> BiLabeledGraph:
    """Single edge with one input and one output end; its operator is T_W"""
    return BiLabeledGraph(MultiGraph(2, ((0, 1, 1),)), (0,), (1,))


def oblivious_family(k: int) -> List[Generator]:
    """Neighbor and adjacency generators of arity k"""
    family: List[Generator] = [Neighbor(k, j) for j in range(1, k + 1)]
    family += [Adjacency(k, i, j) for i, j in itertools.combinations(range(1, k + 1), 2)]
    return family


def simple_family(k: int) -> List[Generator]:
    """AdjNei(k, j, V) for every j and every V avoiding j"""
    family: List[Generator] = []
    for j in range(1, k + 1):
        others = [i for i in range(1, k + 1) if i != j]
        for size in range(len(others) + 1):
            for subset in itertools.combinations(others, size):
                family.append(AdjNei(k, j, frozenset(subset)))
    return family


def non_oblivious_simple_family(k: int) -> List[Generator]:
    family: List[Generator] = []
    for j1 in range(1, k + 2):
        others = [i for i in range(1, k + 2) if i != j1]
        for j2 in range(1, k + 2):
            for size in range(len(others) + 1):
                for subset in itertools.combinations(others, size):
                    family.append(NonObliviousSimple(k, j1, frozenset(subset), j2))
    return family


# Isomorphism and canonical forms

def _vertex_invariant(graph: BiLabeledGraph, adjacency, v: int):
    input_position = graph.inputs.index(v) if v in graph.inputs else -1
    output_position = graph.outputs.index(v) if v in graph.outputs else -1
    degrees = tuple(sorted(adjacency[v].values()))
    neighbor_degrees = tuple(sorted(sum(adjacency[w].values()) for w in adjacency[v]))
    return (input_position, output_position, sum(degrees), degrees, neighbor_degrees)


def _forced_mapping(first: BiLabeledGraph, second: BiLabeledGraph) -> Optional[Dict[int, int]]:
    mapping: Dict[int, int] = {}
    for labels1, labels2 in ((first.inputs, second.inputs), (first.outputs, second.outputs)):
        for u, v in zip(labels1, labels2):
            if mapping.get(u, v) != v:
                return None
            mapping[u] = v
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


def are_isomorphic(first: BiLabeledGraph, second: BiLabeledGraph) -> bool:
    """
    Decide isomorphism of bi-labeled graphs by backtracking.

    Labels are matched positionally; candidate images are pruned by a vertex
    invariant (label positions, degree, neighbor degrees).
    """
    if (first.vertex_count, first.in_arity, first.out_arity) != (second.vertex_count, second.in_arity, second.out_arity):
        return False
    if sorted(m for _, _, m in first.graph.edges) != sorted(m for _, _, m in second.graph.edges):
        return False
    check_limit('MAX_ISO_VERTICES', first.vertex_count, 'vertices for isomorphism test')

    adjacency1 = first.graph.adjacency()
    adjacency2 = second.graph.adjacency()
    invariant1 = {v: _vertex_invariant(first, adjacency1, v) for v in first.graph.vertices}
    invariant2 = {v: _vertex_invariant(second, adjacency2, v) for v in second.graph.vertices}
    if sorted(invariant1.values()) != sorted(invariant2.values()):
        return False

    mapping = _forced_mapping(first, second)
    if mapping is None:
        return False
    if any(invariant1[u] != invariant2[v] for u, v in mapping.items()):
        return False

    def consistent(u: int, v: int, current: Dict[int, int]) -> bool:
        for w, m in adjacency1[u].items():
            if w in current and adjacency2[v].get(current[w], 0) != m:
                return False
        for w, image in current.items():
            if adjacency1[u].get(w, 0) != adjacency2[v].get(image, 0):
                return False
        return True

    for u, v in mapping.items():
        if not consistent(u, v, {w: x for w, x in mapping.items() if w != u}):
            return False

    remaining = sorted((v for v in first.graph.vertices if v not in mapping), key=lambda v: -len(adjacency1[v]))

    def extend(index: int, current: Dict[int, int], used: set) -> bool:
        if index == len(remaining):
            return True
        u = remaining[index]
        for v in second.graph.vertices:
            if v in used or invariant1[u] != invariant2[v]:
                continue
            if consistent(u, v, current):
                current[u] = v
                used.add(v)
                if extend(index + 1, current, used):
                    return True
                del current[u]
                used.discard(v)
        return False

    return extend(0, dict(mapping), set(mapping.values()))


def _relabelings(graph: BiLabeledGraph) -> Iterator[List[int]]:
    """Bijections old -> new that respect the sorted order of vertex invariants"""
    adjacency = graph.graph.adjacency()
    keys = {v: _vertex_invariant(graph, adjacency, v) for v in graph.graph.vertices}
    # labeled vertices first, by label position
    order_key = lambda key: (key[0] < 0 and key[1] < 0, key)  # noqa: E731
    classes: Dict[tuple, List[int]] = {}
    for v in graph.graph.vertices:
        classes.setdefault(keys[v], []).append(v)
    ordered = [classes[key] for key in sorted(classes, key=order_key)]
    for choice in itertools.product(*(itertools.permutations(members) for members in ordered)):
        mapping = [0] * graph.vertex_count
        position = 0
        for block in choice:
            for v in block:
                mapping[v] = position
                position += 1
        yield mapping


def canonical_form(graph: BiLabeledGraph) -> tuple:
    """Minimum serialized form over invariant-respecting relabelings"""
    check_limit('MAX_ISO_VERTICES', graph.vertex_count, 'vertices for canonical form')
    best = None
    for mapping in _relabelings(graph):
        edges = tuple(sorted((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]), m) for u, v, m in graph.graph.edges))
        form = (
            graph.vertex_count,
            tuple(mapping[v] for v in graph.inputs),
            tuple(mapping[v] for v in graph.outputs),
            edges,
        )
        if best is None or form < best:
            best = form
    return best


def canonical_graph_form(graph: MultiGraph) -> tuple:
    return canonical_form(BiLabeledGraph(graph))


def graphs_isomorphic(first: MultiGraph, second: MultiGraph) -> bool:
    return are_isomorphic(BiLabeledGraph(first), BiLabeledGraph(second))
