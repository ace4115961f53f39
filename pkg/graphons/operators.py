"""
Graphon operators of bi-labeled graphs, specialised to step graphons.

A function on X^k is a KTensor over [n]^k. Input coordinates of a bi-labeled
graph are free variables; every other vertex is summed over [n] with its mass
as weight, so the finite sums here are the exact values of the integrals.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

from algebra.bilabeled import BiLabeledGraph, make_generator
from algebra.terms import Compose, OneLeaf, Schur, Term
from .exceptions import HasOutputs, ShapeMismatch
from .limits import check_limit
from .matrices import Matrix
from .structures import MultiGraph, StepGraphon, all_tuples, tuple_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KTensor:
    """Dense row-major tensor over [n]^k; k = 0 is a scalar"""
    k: int
    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.n ** self.k:
            raise ShapeMismatch(f"A {self.k}-tensor over [{self.n}] needs {self.n ** self.k} values, got {len(self.values)}")

    @classmethod
    def ones(cls, k: int, n: int) -> 'KTensor':
        return cls(k, n, (Fraction(1),) * n ** k)

    @classmethod
    def zeros(cls, k: int, n: int) -> 'KTensor':
        return cls(k, n, (Fraction(0),) * n ** k)

    @classmethod
    def from_function(cls, k: int, n: int, function: Callable[[Tuple[int, ...]], Fraction]) -> 'KTensor':
        return cls(k, n, tuple(Fraction(function(x)) for x in all_tuples(n, k)))

    @classmethod
    def indicator(cls, k: int, n: int, members: Iterable[Tuple[int, ...]]) -> 'KTensor':
        members = set(members)
        return cls.from_function(k, n, lambda x: 1 if x in members else 0)

    @classmethod
    def scalar(cls, value, n: int) -> 'KTensor':
        return cls(0, n, (Fraction(value),))

    def __getitem__(self, coordinates: Sequence[int]) -> Fraction:
        return self.values[tuple_rank(coordinates, self.n)]

    def _check_shape(self, other: 'KTensor'):
        if (self.k, self.n) != (other.k, other.n):
            raise ShapeMismatch(f"Tensor shapes ({self.k}, {self.n}) and ({other.k}, {other.n}) differ")

    def __mul__(self, other):
        if isinstance(other, KTensor):
            self._check_shape(other)
            return KTensor(self.k, self.n, tuple(a * b for a, b in zip(self.values, other.values)))
        return KTensor(self.k, self.n, tuple(a * other for a in self.values))

    __rmul__ = __mul__

    def __add__(self, other: 'KTensor') -> 'KTensor':
        self._check_shape(other)
        return KTensor(self.k, self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: 'KTensor') -> 'KTensor':
        self._check_shape(other)
        return KTensor(self.k, self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def max_abs(self) -> Fraction:
        return max(abs(v) for v in self.values)

    def extend_ones(self) -> 'KTensor':
        """f (x) 1: the (k+1)-tensor that ignores its last coordinate"""
        return KTensor(self.k + 1, self.n, tuple(v for v in self.values for _ in range(self.n)))

    def as_column(self) -> List[Fraction]:
        return list(self.values)


def _check_graphon(tensor: KTensor, graphon: StepGraphon):
    if tensor.n != graphon.n:
        raise ShapeMismatch(f"Tensor over [{tensor.n}] used with a step graphon on [{graphon.n}]")


def inner_product(f: KTensor, g: KTensor, graphon: StepGraphon) -> Fraction:
    """Sum of f(x) g(x) mu(x) over [n]^k"""
    f._check_shape(g)
    _check_graphon(f, graphon)
    return sum(
        (a * b * graphon.tuple_mass(x) for a, b, x in zip(f.values, g.values, all_tuples(f.n, f.k)) if a and b),
        Fraction(0),
    )


def hom_density_bruteforce(pattern: MultiGraph, graphon: StepGraphon) -> Fraction:
    """t(F, W) summed over all maps V(F) -> [n]"""
    n = graphon.n
    if n > 1:
        check_limit('MAX_DENSITY_BITS', math.ceil(pattern.vertex_count * math.log2(n)), 'bits of the density search')
    total = Fraction(0)
    for assignment in itertools.product(range(n), repeat=pattern.vertex_count):
        term = graphon.tuple_mass(assignment)
        for u, v, m in pattern.edges:
            if not term:
                break
            term *= graphon.weights[assignment[u]][assignment[v]] ** m
        total += term
    return total


def _assignments(graph: BiLabeledGraph, graphon: StepGraphon) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], Fraction]]:
    """
    Yield (input tuple, output tuple, weight) for every assignment of the graph's
    vertices to [n]; the weight is the product of masses of the non-input
    vertices and of W over the edges. Unlabeled isolated vertices are skipped
    since they contribute a factor of one.
    """
    n = graphon.n
    inputs = set(graph.inputs)
    skipped = set(graph.graph.isolated_vertices()) - graph.labeled_vertices
    free = [v for v in graph.graph.vertices if v not in inputs and v not in skipped]
    check_limit('MAX_DENSITY_BITS', math.ceil((len(inputs) + len(free)) * math.log2(max(n, 2))), 'bits of the operator sum')
    image = [0] * graph.vertex_count
    for x in itertools.product(range(n), repeat=len(graph.inputs)):
        for v, value in zip(graph.inputs, x):
            image[v] = value
        for y in itertools.product(range(n), repeat=len(free)):
            weight = Fraction(1)
            for v, value in zip(free, y):
                image[v] = value
                weight *= graphon.masses[value]
            for u, v, m in graph.graph.edges:
                if not weight:
                    break
                weight *= graphon.weights[image[u]][image[v]] ** m
            if weight:
                yield x, tuple(image[v] for v in graph.outputs), weight


def apply_operator(graph: BiLabeledGraph, graphon: StepGraphon, f: KTensor) -> KTensor:
    """(T_F f)(x_a) = sum over the other vertices of prod W * f(x_b) * prod mu"""
    if f.k != graph.out_arity:
        raise ShapeMismatch(f"Operator expects a {graph.out_arity}-tensor, got arity {f.k}")
    _check_graphon(f, graphon)
    n = graphon.n
    values = [Fraction(0)] * n ** graph.in_arity
    for x, y, weight in _assignments(graph, graphon):
        value = f.values[tuple_rank(y, n)]
        if value:
            values[tuple_rank(x, n)] += weight * value
    return KTensor(graph.in_arity, n, tuple(values))


def hom_function(graph: BiLabeledGraph, graphon: StepGraphon) -> KTensor:
    if graph.out_arity:
        raise HasOutputs(f"Homomorphism functions need a graph without output labels, got {graph.out_arity}")
    n = graphon.n
    values = [Fraction(0)] * n ** graph.in_arity
    for x, _, weight in _assignments(graph, graphon):
        values[tuple_rank(x, n)] += weight
    return KTensor(graph.in_arity, n, tuple(values))


def eval_term_hom(term: Term, graphon: StepGraphon) -> KTensor:
    if isinstance(term, OneLeaf):
        return KTensor.ones(term.k, graphon.n)
    if isinstance(term, Compose):
        return apply_operator(make_generator(term.generator), graphon, eval_term_hom(term.term, graphon))
    if isinstance(term, Schur):
        return eval_term_hom(term.left, graphon) * eval_term_hom(term.right, graphon)
    raise TypeError(f"Not a term: {term!r}")


def term_density(term: Term, graphon: StepGraphon) -> Fraction:
    tensor = eval_term_hom(term, graphon)
    return inner_product(KTensor.ones(term.k, graphon.n), tensor, graphon)


def operator_matrix(graph: BiLabeledGraph, graphon: StepGraphon) -> Matrix:
    """
    Materialize T_F as an n^k x n^l matrix: apply_operator(F, W, f) = M f.

    Entry (x, y) collects the weights of assignments with inputs x and outputs y.
    """
    n = graphon.n
    rows, columns = n ** graph.in_arity, n ** graph.out_arity
    check_limit('MAX_OPERATOR_MATRIX_ENTRIES', rows * columns, 'operator matrix entries')
    entries: List[Dict[int, Fraction]] = [dict() for _ in range(rows)]
    for x, y, weight in _assignments(graph, graphon):
        row = entries[tuple_rank(x, n)]
        column = tuple_rank(y, n)
        row[column] = row.get(column, Fraction(0)) + weight
    return Matrix.from_sparse_rows(entries, columns)


def degree_function(graphon: StepGraphon) -> KTensor:
    """x -> sum_y mu(y) W(x, y)"""
    return KTensor.from_function(
        1, graphon.n, lambda x: sum(graphon.masses[y] * graphon.weights[x[0]][y] for y in range(graphon.n))
    )
