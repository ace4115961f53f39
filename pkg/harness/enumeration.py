"""
Enumeration of small patterns up to isomorphism and distinguisher search
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from algebra.bilabeled import canonical_graph_form
from algebra.treedecomp import treewidth
from graphons.exceptions import MalformedDocument
from graphons.limits import check_limit
from graphons.operators import hom_density_bruteforce
from graphons.structures import MultiGraph, StepGraphon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationSpec:
    max_vertices: int
    max_edge_multiplicity: int = 1
    treewidth_bound: int = 1
    simple_only: bool = False
    connected_only: bool = True

    def __post_init__(self):
        check_limit('MAX_PATTERN_VERTICES', self.max_vertices, 'pattern vertices')
        check_limit('MAX_PATTERN_MULTIPLICITY', self.max_edge_multiplicity, 'pattern edge multiplicity')
        if self.max_vertices < 0 or self.max_edge_multiplicity < 1 or self.treewidth_bound < 0:
            raise MalformedDocument(f"Invalid enumeration bounds {self}")

    @property
    def multiplicity(self) -> int:
        return 1 if self.simple_only else self.max_edge_multiplicity


def _add_edge(graph: MultiGraph, u: int, v: int) -> MultiGraph:
    return MultiGraph(graph.vertex_count, graph.edges + ((u, v, 1),))


def _graphs_on(n: int, spec: EnumerationSpec, widths: Dict[FrozenSet, int]) -> Iterator[MultiGraph]:
    """All graphs on n vertices within the bounds, one per isomorphism class"""
    level = {canonical_graph_form(MultiGraph(n)): MultiGraph(n)}
    while level:
        yield from level.values()
        following: Dict[tuple, MultiGraph] = {}
        for graph in level.values():
            for u, v in itertools.combinations(range(n), 2):
                if graph.multiplicity(u, v) >= spec.multiplicity:
                    continue
                candidate = _add_edge(graph, u, v)
                key = canonical_graph_form(candidate)
                if key in following:
                    continue
                support = frozenset((a, b) for a, b, _ in candidate.edges)
                if support not in widths:
                    widths[support] = treewidth(candidate)
                # supergraphs never have smaller treewidth
                if widths[support] > spec.treewidth_bound:
                    continue
                following[key] = candidate
        level = following


def enumerate_patterns(spec: EnumerationSpec) -> List[MultiGraph]:
    """Sorted by (vertices, edges with multiplicity), then canonical form"""
    patterns: List[Tuple[tuple, MultiGraph]] = []
    widths: Dict[FrozenSet, int] = {}
    for n in range(1, spec.max_vertices + 1):
        for graph in _graphs_on(n, spec, widths):
            if spec.connected_only and not graph.is_connected():
                continue
            patterns.append(((n, graph.edge_count, canonical_graph_form(graph)), graph))
    patterns.sort(key=lambda item: item[0])
    logger.debug(f"Enumerated {len(patterns)} patterns for {spec}")
    return [graph for _, graph in patterns]


@dataclass(frozen=True)
class Distinguisher:
    pattern: MultiGraph
    first_density: Fraction
    second_density: Fraction


def search_distinguisher(first: StepGraphon, second: StepGraphon, patterns: List[MultiGraph]) -> Optional[Distinguisher]:
    for pattern in patterns:
        a = hom_density_bruteforce(pattern, first)
        b = hom_density_bruteforce(pattern, second)
        if a != b:
            return Distinguisher(pattern, a, b)
    return None


def find_distinguisher(first: StepGraphon, second: StepGraphon, k: int, spec: EnumerationSpec) -> Optional[MultiGraph]:
    """First enumerated pattern of treewidth at most k-1 whose densities differ"""
    if spec.treewidth_bound != k - 1:
        raise MalformedDocument(f"Distinguishers for k = {k} need treewidth bound {k - 1}, got {spec.treewidth_bound}")
    found = search_distinguisher(first, second, enumerate_patterns(spec))
    return found.pattern if found else None
