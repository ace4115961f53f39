"""
Seeded instance generators for the cross-validation suites.

Every random pair is drawn from its own seed, so a single pair can be rebuilt
from the id and seed stored with its report.
"""
import random
import re
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

import networkx as nx

from graphons.structures import (
    MultiGraph,
    StepGraphon,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_to_step_graphon,
    permute_graphon,
    split_vertex,
)
from .exceptions import UnknownPair

GraphPair = Tuple[str, MultiGraph, MultiGraph]
GraphonPair = Tuple[str, StepGraphon, StepGraphon]

GRAPH_SUITES = ('colref', 'kwl')

GENERATED_PAIR_ID = re.compile(r'^seed(?P<seed>\d+)-(?P<index>\d+)-')


def fig1_pair() -> Tuple[StepGraphon, StepGraphon]:
    """Uniform K3 against the constant 2/3 graphon on three atoms (loops included)"""
    left = graph_to_step_graphon(complete_graph(3))
    third = Fraction(1, 3)
    right = StepGraphon((third,) * 3, ((Fraction(2, 3),) * 3,) * 3)
    return left, right


def curated_graph_pairs() -> List[GraphPair]:
    return [
        ('C6-vs-2C3', cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))),
        ('K3-vs-K3', complete_graph(3), complete_graph(3)),
        ('K2-vs-2K1', complete_graph(2), empty_graph(2)),
    ]


def pair_seeds(seed: int, count: int) -> List[int]:
    """One independent seed per random pair of a run"""
    rng = random.Random(seed)
    return [rng.randrange(2 ** 31) for _ in range(count)]


def _relabeled(graph: MultiGraph, rng: random.Random) -> MultiGraph:
    mapping = list(graph.vertices)
    rng.shuffle(mapping)
    return graph.relabel(mapping)


def random_graph_pair(index: int, pair_seed: int, min_vertices: int = 3, max_vertices: int = 6) -> GraphPair:
    """
    A simple-graph pair on a common vertex count. The kind rotates with the
    index between independent G(n, p) samples, two random regular graphs of
    the same degree and a graph against a relabeled copy of itself.
    """
    rng = random.Random(pair_seed)
    n = rng.randint(min_vertices, max_vertices)
    kind = index % 3
    if kind == 0:
        p = rng.choice((0.3, 0.5, 0.7))
        first = MultiGraph.from_networkx(nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32)))
        second = MultiGraph.from_networkx(nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32)))
        label = f"gnp-{n}-{p}"
    elif kind == 1:
        degrees = [d for d in range(1, n) if (d * n) % 2 == 0]
        d = rng.choice(degrees)
        first = MultiGraph.from_networkx(nx.random_regular_graph(d, n, seed=rng.randrange(2 ** 32)))
        second = MultiGraph.from_networkx(nx.random_regular_graph(d, n, seed=rng.randrange(2 ** 32)))
        label = f"regular-{n}-{d}"
    else:
        first = MultiGraph.from_networkx(nx.gnp_random_graph(n, 0.5, seed=rng.randrange(2 ** 32)))
        second = _relabeled(first, rng)
        label = f"relabeled-{n}"
    return f"seed{pair_seed}-{index}-{label}", first, second


def random_graph_pairs(count: int, seed: int, min_vertices: int = 3, max_vertices: int = 6) -> List[GraphPair]:
    return [
        random_graph_pair(index, pair_seed, min_vertices, max_vertices)
        for index, pair_seed in enumerate(pair_seeds(seed, count))
    ]


def random_step_graphon(rng: random.Random, n: int, max_denominator: int = 6) -> StepGraphon:
    """Masses proportional to small positive integers, weights with denominators up to max_denominator"""
    parts = [rng.randint(1, max_denominator) for _ in range(n)]
    total = sum(parts)
    masses = tuple(Fraction(p, total) for p in parts)
    weights = [[Fraction(0)] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            denominator = rng.randint(1, max_denominator)
            weights[x][y] = weights[y][x] = Fraction(rng.randint(0, denominator), denominator)
    return StepGraphon(masses, tuple(tuple(row) for row in weights))


def random_graphon_pair(index: int, pair_seed: int, max_n: int = 4) -> GraphonPair:
    """
    A step-graphon pair. The kind rotates with the index between independent
    samples, a graphon against a permuted copy, a graphon against a twin-split
    copy, and step graphons of regular graphs.
    """
    rng = random.Random(pair_seed)
    kind = index % 4
    if kind == 0:
        first = random_step_graphon(rng, rng.randint(1, max_n))
        second = random_step_graphon(rng, rng.randint(1, max_n))
        label = 'independent'
    elif kind == 1:
        first = random_step_graphon(rng, rng.randint(2, max_n))
        permutation = list(range(first.n))
        rng.shuffle(permutation)
        second = permute_graphon(first, permutation)
        label = 'permuted'
    elif kind == 2:
        first = random_step_graphon(rng, rng.randint(1, max_n - 1))
        second = split_vertex(first, rng.randrange(first.n))
        label = 'split'
    else:
        n = 4 if max_n >= 4 else max_n
        degrees = [d for d in range(1, n) if (d * n) % 2 == 0] or [0]
        d = rng.choice(degrees)
        first = graph_to_step_graphon(MultiGraph.from_networkx(nx.random_regular_graph(d, n, seed=rng.randrange(2 ** 32))))
        second = random_step_graphon(rng, n)
        label = f"regular-{n}-{d}"
    return f"seed{pair_seed}-{index}-{label}", first, second


def random_graphon_pairs(count: int, seed: int, max_n: int = 4) -> List[GraphonPair]:
    return [random_graphon_pair(index, pair_seed, max_n) for index, pair_seed in enumerate(pair_seeds(seed, count))]


class SuitePairs(NamedTuple):
    graph_pairs: List[GraphPair]
    graphon_pairs: List[GraphonPair]
    # pair id -> pair seed, random pairs only
    seeds: Dict[str, int]


def pairs_for_suite(suite: str, count: int, seed: int, include_curated: bool = True) -> SuitePairs:
    """Graph and graphon pairs for a suite; the curated pairs come first"""
    if suite in GRAPH_SUITES:
        generated = random_graph_pairs(count, seed)
        graph_pairs = (curated_graph_pairs() if include_curated else []) + generated
        graphon_pairs = []
    else:
        generated = random_graphon_pairs(count, seed)
        graph_pairs = []
        graphon_pairs = ([('fig1', *fig1_pair())] if include_curated else []) + generated
    seeds = {pair_id: pair_seed for (pair_id, _, _), pair_seed in zip(generated, pair_seeds(seed, count))}
    return SuitePairs(graph_pairs, graphon_pairs, seeds)


def regenerate_pair(suite: str, pair_id: str, pair_seed: int):
    """Rebuild a random pair from the id and seed stored with its report"""
    match = GENERATED_PAIR_ID.match(pair_id)
    if match is None:
        raise UnknownPair(f"{pair_id!r} is not a generated pair")
    index = int(match['index'])
    if suite in GRAPH_SUITES:
        return random_graph_pair(index, pair_seed)
    return random_graphon_pair(index, pair_seed)
