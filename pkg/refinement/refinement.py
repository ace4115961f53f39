"""
Color refinement, oblivious k-WL and simple k-WL on step graphons.

Colors are interned in a ColorTable: a color is the integer id of a canonical
descriptor built from exact rationals and earlier color ids. Two objects are
only ever compared after being refined against the same table.
"""
import hashlib
import itertools
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from graphons.exceptions import ShapeMismatch
from graphons.limits import check_limit
from graphons.operators import KTensor
from graphons.structures import StepGraphon, all_tuples, substitute, tuple_rank
from .exceptions import ModeViolation, NotStabilized, UnknownAlgorithm

logger = logging.getLogger(__name__)

GRAPHON_MODE = 'graphon'
GRAPH_MODE = 'graph'
MODES = (GRAPHON_MODE, GRAPH_MODE)


class ColorTable:
    """Maps canonical color descriptors to dense integer ids"""

    def __init__(self):
        self._ids: Dict[Hashable, int] = {}

    def intern(self, descriptor: Hashable) -> int:
        color = self._ids.get(descriptor)
        if color is None:
            color = len(self._ids)
            self._ids[descriptor] = color
        return color

    def __len__(self):
        return len(self._ids)


@dataclass
class Coloring:
    k: int
    n: int
    rounds: List[Tuple[int, ...]] = field(default_factory=list)
    stabilized: bool = False

    @property
    def final(self) -> Tuple[int, ...]:
        return self.rounds[-1]

    def class_count(self, round_index: int = -1) -> int:
        return len(set(self.rounds[round_index]))

    def partition(self, round_index: int = -1) -> List[FrozenSet[Tuple[int, ...]]]:
        classes: Dict[int, set] = {}
        for x, color in zip(all_tuples(self.n, self.k), self.rounds[round_index]):
            classes.setdefault(color, set()).add(x)
        return sorted((frozenset(c) for c in classes.values()), key=lambda c: min(c))

    def color_of(self, coordinates: Sequence[int], round_index: int = -1) -> int:
        return self.rounds[round_index][tuple_rank(coordinates, self.n)]


RoundFingerprint = Tuple[Tuple[int, Fraction], ...]


@dataclass(frozen=True)
class Fingerprint:
    """Per round: sorted (color id, class mass) pairs; the last round is terminal"""
    rounds: Tuple[RoundFingerprint, ...]

    @property
    def terminal(self) -> RoundFingerprint:
        return self.rounds[-1]

    def digest(self) -> str:
        text = repr(tuple(tuple((c, str(m)) for c, m in r) for r in self.rounds))
        return hashlib.sha256(text.encode('utf-8')).hexdigest()[:16]


@dataclass(frozen=True)
class Algorithm:
    name: str
    k: int = 1
    mode: str = GRAPHON_MODE

    @classmethod
    def parse(cls, text: str) -> 'Algorithm':
        """Accept "colref", "owl(k)", "owl(k,mode)" and "simple(k)" """
        text = text.strip().lower().replace(' ', '')
        if text in ('colref', '1wl'):
            return cls('colref')
        match = re.fullmatch(r'owl\((\d+)(?:,(graphon|graph))?\)', text)
        if match:
            return cls('owl', int(match.group(1)), match.group(2) or GRAPHON_MODE)
        match = re.fullmatch(r'simple\((\d+)\)', text)
        if match:
            return cls('simple', int(match.group(1)))
        raise UnknownAlgorithm(f"Unknown refinement algorithm {text!r}")

    def __str__(self):
        if self.name == 'colref':
            return 'colref'
        if self.name == 'owl':
            return f"owl({self.k},{self.mode})"
        return f"simple({self.k})"


class Refiner:
    """Holds one step graphon and produces successive rounds of colors"""

    def __init__(self, graphon: StepGraphon, k: int, table: ColorTable):
        check_limit('MAX_K', k, 'k')
        check_limit('MAX_N', graphon.n, 'graphon steps')
        check_limit('MAX_TENSOR_ENTRIES', graphon.n ** k, 'n^k')
        self.graphon = graphon
        self.k = k
        self.n = graphon.n
        self.table = table
        self.tuples = all_tuples(self.n, k)
        self.masses = [graphon.tuple_mass(x) for x in self.tuples]
        # successor[r][j][y] = rank of x[y/j]
        self.successor = [
            [[tuple_rank(substitute(x, j, y), self.n) for y in range(self.n)] for j in range(k)]
            for x in self.tuples
        ]

    def initial(self) -> Tuple[int, ...]:
        raise NotImplementedError

    def signature(self, colors: Sequence[int], r: int) -> Hashable:
        raise NotImplementedError

    def step(self, colors: Sequence[int]) -> Tuple[int, ...]:
        return tuple(self.table.intern((colors[r], self.signature(colors, r))) for r in range(len(self.tuples)))

    def fingerprint_round(self, colors: Sequence[int]) -> RoundFingerprint:
        masses: Dict[int, Fraction] = {}
        for color, mass in zip(colors, self.masses):
            masses[color] = masses.get(color, Fraction(0)) + mass
        return tuple(sorted(masses.items()))


def _sorted_items(accumulator: Dict[int, Fraction]) -> Tuple[Tuple[int, Fraction], ...]:
    return tuple(sorted((c, v) for c, v in accumulator.items() if v))


class ColorRefiner(Refiner):
    """Color refinement: signature is the W-weighted color distribution of the neighborhood"""

    def __init__(self, graphon: StepGraphon, table: ColorTable):
        super().__init__(graphon, 1, table)

    def initial(self):
        color = self.table.intern(('colref',))
        return (color,) * self.n

    def signature(self, colors, r):
        x = self.tuples[r][0]
        accumulator: Dict[int, Fraction] = {}
        for y in range(self.n):
            value = self.graphon.masses[y] * self.graphon.weights[x][y]
            if value:
                accumulator[colors[y]] = accumulator.get(colors[y], Fraction(0)) + value
        return _sorted_items(accumulator)


class ObliviousRefiner(Refiner):
    """
    Oblivious k-WL. In graphon mode the initial color is (W(x_i, x_j))_{i<j} and
    successors are weighted by mass; in graph mode the initial color is the
    atomic type (2 equal, 1 adjacent, 0 otherwise) and successors are counted.
    """

    def __init__(self, graphon: StepGraphon, k: int, table: ColorTable, mode: str = GRAPHON_MODE):
        if mode not in MODES:
            raise ModeViolation(f"Unknown mode {mode!r}")
        if mode == GRAPH_MODE and not graphon.is_graph_like:
            raise ModeViolation("Graph mode needs the step graphon of a simple graph")
        super().__init__(graphon, k, table)
        self.mode = mode

    def _initial_descriptor(self, x: Tuple[int, ...]):
        pairs = itertools.combinations(range(self.k), 2)
        W = self.graphon.weights
        if self.mode == GRAPHON_MODE:
            return ('owl', self.k, tuple(W[x[i]][x[j]] for i, j in pairs))
        return ('atp', self.k, tuple(2 if x[i] == x[j] else int(W[x[i]][x[j]] == 1) for i, j in pairs))

    def initial(self):
        return tuple(self.table.intern(self._initial_descriptor(x)) for x in self.tuples)

    def signature(self, colors, r):
        per_slot = []
        for j in range(self.k):
            accumulator: Dict[int, Fraction] = {}
            for y, target in enumerate(self.successor[r][j]):
                value = self.graphon.masses[y] if self.mode == GRAPHON_MODE else 1
                accumulator[colors[target]] = accumulator.get(colors[target], 0) + value
            per_slot.append(_sorted_items(accumulator))
        return tuple(per_slot)


def simple_index_set(k: int) -> List[Tuple[int, FrozenSet[int]]]:
    """All (j, V) with V a subset of the other slots; 0-based"""
    index_set = []
    for j in range(k):
        others = [i for i in range(k) if i != j]
        for size in range(len(others) + 1):
            for subset in itertools.combinations(others, size):
                index_set.append((j, frozenset(subset)))
    return index_set


class SimpleRefiner(Refiner):
    """Simple k-WL: successor mass weighted by the edges from y to the kept slots V"""

    def __init__(self, graphon: StepGraphon, k: int, table: ColorTable):
        super().__init__(graphon, k, table)
        self.index_set = simple_index_set(k)

    def initial(self):
        color = self.table.intern(('simple', self.k))
        return (color,) * len(self.tuples)

    def signature(self, colors, r):
        x = self.tuples[r]
        W = self.graphon.weights
        per_index = []
        for j, V in self.index_set:
            accumulator: Dict[int, Fraction] = {}
            for y, target in enumerate(self.successor[r][j]):
                value = self.graphon.masses[y]
                for i in V:
                    value *= W[x[i]][y]
                if value:
                    accumulator[colors[target]] = accumulator.get(colors[target], Fraction(0)) + value
            per_index.append(_sorted_items(accumulator))
        return tuple(per_index)


def make_refiner(algorithm: Algorithm, graphon: StepGraphon, table: ColorTable) -> Refiner:
    if algorithm.name == 'colref':
        return ColorRefiner(graphon, table)
    if algorithm.name == 'owl':
        return ObliviousRefiner(graphon, algorithm.k, table, algorithm.mode)
    if algorithm.name == 'simple':
        return SimpleRefiner(graphon, algorithm.k, table)
    raise UnknownAlgorithm(f"Unknown refinement algorithm {algorithm.name!r}")


def run_refiner(refiner: Refiner) -> Tuple[Coloring, Fingerprint]:
    """Refine until the class count stops growing; the extra round is kept as terminal"""
    coloring = Coloring(refiner.k, refiner.n, [refiner.initial()])
    max_rounds = len(refiner.tuples) + 1
    while not coloring.stabilized:
        if len(coloring.rounds) > max_rounds:
            raise NotStabilized(f"No fixpoint after {max_rounds} rounds")
        previous = coloring.final
        current = refiner.step(previous)
        coloring.rounds.append(current)
        coloring.stabilized = len(set(current)) == len(set(previous))
        logger.debug(f"{type(refiner).__name__} k={refiner.k} round {len(coloring.rounds) - 1}: {len(set(current))} classes")
    fingerprint = Fingerprint(tuple(refiner.fingerprint_round(colors) for colors in coloring.rounds))
    return coloring, fingerprint


def color_refinement(graphon: StepGraphon, table: Optional[ColorTable] = None) -> Tuple[Coloring, Fingerprint]:
    return run_refiner(ColorRefiner(graphon, table or ColorTable()))


def oblivious_kwl(graphon: StepGraphon, k: int, mode: str = GRAPHON_MODE,
                  table: Optional[ColorTable] = None) -> Tuple[Coloring, Fingerprint]:
    return run_refiner(ObliviousRefiner(graphon, k, table or ColorTable(), mode))


def simple_kwl(graphon: StepGraphon, k: int, table: Optional[ColorTable] = None) -> Tuple[Coloring, Fingerprint]:
    return run_refiner(SimpleRefiner(graphon, k, table or ColorTable()))


def refine(graphon: StepGraphon, algorithm: Algorithm, table: Optional[ColorTable] = None) -> Tuple[Coloring, Fingerprint]:
    return run_refiner(make_refiner(algorithm, graphon, table or ColorTable()))


@dataclass
class Comparison:
    algorithm: Algorithm
    equal: bool
    first_difference: Optional[int]
    colorings: Tuple[Coloring, Coloring]
    fingerprints: Tuple[Fingerprint, Fingerprint]

    @property
    def verdict(self) -> str:
        return 'EQUAL' if self.equal else 'DIFFER'


def compare(first: StepGraphon, second: StepGraphon, algorithm: Algorithm, run_to_fixpoint: bool = False) -> Comparison:
    """
    Refine both objects in lockstep against one ColorTable.

    The verdict is EQUAL iff every round's fingerprint (terminal included)
    matches. Unless ``run_to_fixpoint`` is set, refinement stops at the first
    differing round.
    """
    table = ColorTable()
    refiners = (make_refiner(algorithm, first, table), make_refiner(algorithm, second, table))
    colorings = tuple(Coloring(r.k, r.n, [r.initial()]) for r in refiners)
    prints = [[r.fingerprint_round(c.final)] for r, c in zip(refiners, colorings)]
    first_difference = 0 if prints[0][0] != prints[1][0] else None
    max_rounds = max(len(r.tuples) for r in refiners) + 1

    while not all(c.stabilized for c in colorings):
        if first_difference is not None and not run_to_fixpoint:
            break
        if len(colorings[0].rounds) > max_rounds:
            raise NotStabilized(f"No fixpoint after {max_rounds} rounds")
        for refiner, coloring, fingerprints in zip(refiners, colorings, prints):
            previous = coloring.final
            current = refiner.step(previous)
            coloring.rounds.append(current)
            coloring.stabilized = coloring.stabilized or len(set(current)) == len(set(previous))
            fingerprints.append(refiner.fingerprint_round(current))
        if first_difference is None and prints[0][-1] != prints[1][-1]:
            first_difference = len(prints[0]) - 1

    result = Comparison(
        algorithm,
        first_difference is None,
        first_difference,
        colorings,
        (Fingerprint(tuple(prints[0])), Fingerprint(tuple(prints[1]))),
    )
    logger.debug(f"compare {algorithm}: {result.verdict} (first difference {first_difference})")
    return result


def compare_fingerprints(first: StepGraphon, second: StepGraphon, algorithm) -> bool:
    if isinstance(algorithm, str):
        algorithm = Algorithm.parse(algorithm)
    return compare(first, second, algorithm).equal


def stable_partition(coloring: Coloring) -> List[FrozenSet[Tuple[int, ...]]]:
    if not coloring.stabilized:
        raise NotStabilized("The coloring has not reached its fixpoint")
    return coloring.partition()


def condexp(partition: Sequence[FrozenSet[Tuple[int, ...]]], f: KTensor, graphon: StepGraphon) -> KTensor:
    """Replace f on each class by its mass-weighted class average"""
    if f.n != graphon.n:
        raise ShapeMismatch(f"Tensor over [{f.n}] used with a step graphon on [{graphon.n}]")
    covered = sorted(x for block in partition for x in block)
    if covered != all_tuples(f.n, f.k):
        raise ShapeMismatch(f"The partition does not cover [{f.n}]^{f.k} exactly once")
    values = list(f.values)
    for block in partition:
        total_mass = sum((graphon.tuple_mass(x) for x in block), Fraction(0))
        average = sum((f[x] * graphon.tuple_mass(x) for x in block), Fraction(0)) / total_mass
        for x in block:
            values[tuple_rank(x, f.n)] = average
    return KTensor(f.k, f.n, tuple(values))


def equitable_parameters(coloring: Coloring, graphon: StepGraphon):
    """
    For a stable color-refinement coloring: class masses and, for each ordered
    pair of classes (a, b), the value sum_{y in b} mu(y) W(x, y) shared by every x in a.
    """
    if coloring.k != 1:
        raise ShapeMismatch("Equitable parameters are defined for vertex colorings")
    final = coloring.final
    masses: Dict[int, Fraction] = {}
    for x, color in enumerate(final):
        masses[color] = masses.get(color, Fraction(0)) + graphon.masses[x]
    parameters: Dict[Tuple[int, int], Fraction] = {}
    for x, color in enumerate(final):
        totals: Dict[int, Fraction] = {c: Fraction(0) for c in masses}
        for y, other in enumerate(final):
            totals[other] += graphon.masses[y] * graphon.weights[x][y]
        for other, value in totals.items():
            known = parameters.setdefault((color, other), value)
            if known != value:
                raise NotStabilized(f"Classes {color} and {other} are not equitable")
    return masses, parameters
