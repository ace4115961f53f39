"""
Builders for the indistinguishability systems: L^k(G, H), doubly stochastic
commutants AX = XB, Markov commutants of step graphons and the step-down of a
Markov operator.
"""
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from networkx.algorithms.isomorphism import GraphMatcher

from algebra.bilabeled import (
    Forget,
    Introduce,
    Neighbor,
    Permutation,
    edge_operator_graph,
    make_generator,
    oblivious_family,
    simple_family,
)
from graphons.exceptions import NotSimple, ShapeMismatch
from graphons.limits import check_limit
from graphons.matrices import Matrix
from graphons.operators import operator_matrix
from graphons.structures import MultiGraph, StepGraphon, all_tuples
from .exceptions import UnknownSystem
from .simplex import FeasibilityResult, LinearSystem, feasible, feasible_up_to_symmetry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartialMap:
    """A set of (v, w) pairs, stored sorted"""
    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'pairs', tuple(sorted(set(self.pairs))))

    def __len__(self):
        return len(self.pairs)

    def extend(self, v: int, w: int) -> 'PartialMap':
        return PartialMap(self.pairs + ((v, w),))

    def __str__(self):
        return '{' + ', '.join(f"{v}->{w}" for v, w in self.pairs) + '}'


def _require_simple(*graphs: MultiGraph):
    for graph in graphs:
        if not graph.is_simple:
            raise NotSimple(f"{graph} has parallel edges")


def is_partial_isomorphism(pi: PartialMap, G: MultiGraph, H: MultiGraph) -> bool:
    """Injective, well defined, and preserving adjacency and non-adjacency"""
    sources = [v for v, _ in pi.pairs]
    targets = [w for _, w in pi.pairs]
    if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
        return False
    edges_g = {(u, v) for u, v, _ in G.edges}
    edges_h = {(u, v) for u, v, _ in H.edges}
    for (v1, w1), (v2, w2) in itertools.combinations(pi.pairs, 2):
        if ((min(v1, v2), max(v1, v2)) in edges_g) != ((min(w1, w2), max(w1, w2)) in edges_h):
            return False
    return True


def build_Lk(G: MultiGraph, H: MultiGraph, k: int) -> LinearSystem:
    """
    Variables X_pi for every set pi of at most k pairs; X_empty = 1; X_pi = 0 for
    non partial isomorphisms; for |pi| < k and every w (resp. v) the sum over all v
    (resp. w) of X_{pi + (v, w)} equals X_pi. A pair already in pi contributes X_pi itself.
    """
    _require_simple(G, H)
    pairs = [(v, w) for v in G.vertices for w in H.vertices]
    check_limit('MAX_LP_VARIABLES', sum(comb(len(pairs), size) for size in range(k + 1)), f"variables of L^{k}")
    system = LinearSystem(name=f"L^{k}")
    for size in range(k + 1):
        for subset in itertools.combinations(pairs, size):
            system.add_variable(PartialMap(subset))

    system.add_constraint({PartialMap(): 1}, 1)
    for name in system.names:
        if not is_partial_isomorphism(name, G, H):
            system.add_constraint({name: 1}, 0)

    for name in list(system.names):
        if len(name) >= k:
            continue
        for w in H.vertices:
            row: Dict[Hashable, Fraction] = {name: Fraction(-1)}
            for v in G.vertices:
                extended = name.extend(v, w)
                row[extended] = row.get(extended, Fraction(0)) + 1
            system.add_constraint(row, 0)
        for v in G.vertices:
            row = {name: Fraction(-1)}
            for w in H.vertices:
                extended = name.extend(v, w)
                row[extended] = row.get(extended, Fraction(0)) + 1
            system.add_constraint(row, 0)
    logger.debug(f"Built L^{k}: {system.size[0]} constraints over {system.size[1]} variables")
    return system


def automorphisms(graph: MultiGraph) -> List[Tuple[int, ...]]:
    """Vertex permutations preserving every edge multiplicity"""
    underlying = graph.to_networkx()
    matcher = GraphMatcher(underlying, underlying, edge_match=lambda a, b: a['multiplicity'] == b['multiplicity'])
    return [tuple(mapping[v] for v in graph.vertices) for mapping in matcher.isomorphisms_iter()]


def generating_set(group: Sequence[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """A subset of the permutations that generates the same group"""
    if not group:
        return []
    generated = {tuple(range(len(group[0])))}
    generators: List[Tuple[int, ...]] = []
    for permutation in group:
        if permutation in generated:
            continue
        generators.append(permutation)
        frontier = list(generated)
        while frontier:
            found = []
            for element in frontier:
                for generator in generators:
                    product = tuple(generator[i] for i in element)
                    if product not in generated:
                        generated.add(product)
                        found.append(product)
            frontier = found
    return generators


def lk_orbits(G: MultiGraph, H: MultiGraph, names: Sequence[PartialMap]) -> Dict[PartialMap, PartialMap]:
    """Representative of each variable's orbit under Aut(G) x Aut(H)"""
    moves = [(sigma, None) for sigma in generating_set(automorphisms(G))]
    moves += [(None, tau) for tau in generating_set(automorphisms(H))]
    parent = {name: name for name in names}

    def find(name):
        while parent[name] != name:
            parent[name] = parent[parent[name]]
            name = parent[name]
        return name

    for name in names:
        for sigma, tau in moves:
            image = PartialMap(tuple(
                (v if sigma is None else sigma[v], w if tau is None else tau[w]) for v, w in name.pairs
            ))
            root, other = find(name), find(image)
            if root != other:
                parent[other] = root
    return {name: find(name) for name in names}


def decide_Lk(G: MultiGraph, H: MultiGraph, k: int) -> Tuple[LinearSystem, FeasibilityResult]:
    """Build L^k and decide it on the orbits of Aut(G) x Aut(H)"""
    system = build_Lk(G, H, k)
    orbits = lk_orbits(G, H, system.names)
    return system, feasible_up_to_symmetry(system, orbits.__getitem__)


def adjacency_matrix(graph: MultiGraph) -> List[List[int]]:
    matrix = [[0] * graph.vertex_count for _ in graph.vertices]
    for u, v, m in graph.edges:
        matrix[u][v] = matrix[v][u] = m
    return matrix


def build_doubly_stochastic_commutant(G: MultiGraph, H: MultiGraph) -> LinearSystem:
    """X >= 0 with unit row and column sums and AX = XB"""
    _require_simple(G, H)
    A, B = adjacency_matrix(G), adjacency_matrix(H)
    system = LinearSystem(name='doubly-stochastic')
    for v in G.vertices:
        for w in H.vertices:
            system.add_variable((v, w))
    for v in G.vertices:
        system.add_constraint({(v, w): 1 for w in H.vertices}, 1)
    for w in H.vertices:
        system.add_constraint({(v, w): 1 for v in G.vertices}, 1)
    for v in G.vertices:
        for w in H.vertices:
            row: Dict[Hashable, Fraction] = {}
            for u in G.vertices:
                if A[v][u]:
                    row[(u, w)] = row.get((u, w), Fraction(0)) + A[v][u]
            for u in H.vertices:
                if B[u][w]:
                    row[(v, u)] = row.get((v, u), Fraction(0)) - B[u][w]
            system.add_constraint(row, 0)
    return system


MARKOV_FAMILIES = ('oblivious', 'colref', 'simple')


def commutant_family(k: int, family: str = 'oblivious'):
    """Bi-labeled graphs whose operators the Markov operator has to commute with"""
    if family == 'oblivious':
        return [make_generator(g) for g in oblivious_family(k)]
    if family == 'simple':
        return [make_generator(g) for g in simple_family(k)]
    if family == 'colref':
        if k != 1:
            raise ShapeMismatch("The color refinement family acts on functions of one variable")
        return [make_generator(Neighbor(1, 1)), edge_operator_graph()]
    raise UnknownSystem(f"Unknown operator family {family!r}")


def adjacent_transpositions(k: int) -> List[Tuple[int, ...]]:
    result = []
    for i in range(1, k):
        pi = list(range(1, k + 1))
        pi[i - 1], pi[i] = pi[i], pi[i - 1]
        result.append(tuple(pi))
    return result


def _add_commutation(system: LinearSystem, left: Matrix, right: Matrix):
    """left S = S right, entrywise"""
    rows, columns = len(left.rows), len(right.rows)
    for x in range(rows):
        for y in range(columns):
            row: Dict[int, Fraction] = {}
            for z, coefficient in enumerate(left.rows[x]):
                if coefficient:
                    index = system.variables[(z, y)]
                    row[index] = row.get(index, Fraction(0)) + coefficient
            for z in range(columns):
                coefficient = right.rows[z][y]
                if coefficient:
                    index = system.variables[(x, z)]
                    row[index] = row.get(index, Fraction(0)) - coefficient
            system.add_indexed_constraint(row, 0)


def build_markov_commutant(
    U: StepGraphon,
    W: StepGraphon,
    k: int,
    family: str = 'oblivious',
    perm_invariant: bool = False,
) -> LinearSystem:
    """
    Variables S[x][y] for x in [n]^k, y in [m]^k with S >= 0, S1 = 1,
    sum_x mu_U(x) S[x][y] = mu_W(y) (the adjoint fixes 1) and T_U S = S T_W for
    every operator of the family; optionally T_pi S = S T_pi for transpositions.
    """
    rows_u, rows_w = U.n ** k, W.n ** k
    check_limit('MAX_LP_VARIABLES', rows_u * rows_w, 'Markov operator entries')
    system = LinearSystem(name=f"markov({family}, k={k}{', perm' if perm_invariant else ''})")
    for x in range(rows_u):
        for y in range(rows_w):
            system.add_variable((x, y))

    for x in range(rows_u):
        system.add_constraint({(x, y): 1 for y in range(rows_w)}, 1)
    masses_u = [U.tuple_mass(x) for x in all_tuples(U.n, k)]
    masses_w = [W.tuple_mass(y) for y in all_tuples(W.n, k)]
    for y in range(rows_w):
        system.add_constraint({(x, y): masses_u[x] for x in range(rows_u)}, masses_w[y])

    for graph in commutant_family(k, family):
        _add_commutation(system, operator_matrix(graph, U), operator_matrix(graph, W))
    if perm_invariant:
        for pi in adjacent_transpositions(k):
            graph = make_generator(Permutation(k, pi))
            _add_commutation(system, operator_matrix(graph, U), operator_matrix(graph, W))
    logger.debug(f"Built {system.name}: {system.size[0]} constraints over {system.size[1]} variables")
    return system


def markov_matrix(result: FeasibilityResult, U: StepGraphon, W: StepGraphon, k: int) -> Matrix:
    """Read the Markov operator back out of a feasible witness"""
    rows_u, rows_w = U.n ** k, W.n ** k
    return Matrix(tuple(tuple(result.witness[(x, y)] for y in range(rows_w)) for x in range(rows_u)))


def is_markov(S: Matrix, U: StepGraphon, W: StepGraphon, k: int) -> bool:
    """Nonnegative, fixes 1, and its adjoint fixes 1"""
    if S.shape != (U.n ** k, W.n ** k):
        return False
    if not S.is_nonnegative() or any(total != 1 for total in S.row_sums()):
        return False
    masses_u = [U.tuple_mass(x) for x in all_tuples(U.n, k)]
    masses_w = [W.tuple_mass(y) for y in all_tuples(W.n, k)]
    for y in range(len(masses_w)):
        if sum((masses_u[x] * S.rows[x][y] for x in range(len(masses_u))), Fraction(0)) != masses_w[y]:
            return False
    return True


def commutes(S: Matrix, U: StepGraphon, W: StepGraphon, graphs: Sequence) -> bool:
    return all(operator_matrix(g, U) @ S == S @ operator_matrix(g, W) for g in graphs)


def step_down(S: Matrix, U: StepGraphon, W: StepGraphon, k: int, slot: Optional[int] = None) -> Matrix:
    """Forget(k, slot) S Introduce(k, slot): a Markov operator on (k-1)-tuples"""
    slot = k if slot is None else slot
    if k < 1:
        raise ShapeMismatch("Step-down needs k >= 1")
    if S.shape != (U.n ** k, W.n ** k):
        raise ShapeMismatch(f"Expected a {U.n ** k}x{W.n ** k} operator, got {S.shape}")
    forget = operator_matrix(make_generator(Forget(k, slot)), U)
    introduce = operator_matrix(make_generator(Introduce(k, slot)), W)
    return forget @ S @ introduce


def step_down_hierarchy(S: Matrix, U: StepGraphon, W: StepGraphon, k: int) -> List[Matrix]:
    """[S_k, S_{k-1}, ..., S_0]"""
    hierarchy = [S]
    for level in range(k, 0, -1):
        hierarchy.append(step_down(hierarchy[-1], U, W, level))
    return hierarchy


def check_feasibility(kind: str, first, second, k: int = 1, perm_invariant: bool = False,
                      family: Optional[str] = None) -> Tuple[LinearSystem, FeasibilityResult]:
    """Build and decide one of the systems by name: lk, ds or markov"""
    if kind == 'lk':
        return decide_Lk(first, second, k)
    elif kind == 'ds':
        system = build_doubly_stochastic_commutant(first, second)
    elif kind == 'markov':
        system = build_markov_commutant(first, second, k, family or ('colref' if k == 1 else 'oblivious'), perm_invariant)
    else:
        raise UnknownSystem(f"Unknown system kind {kind!r}")
    return system, feasible(system)
