"""
Tree decompositions: validation, exact treewidth for small graphs, nice
decompositions and their compilation into terms.
"""
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from graphons.limits import check_limit
from graphons.structures import MultiGraph
from .bilabeled import Adjacency, AdjNei, Neighbor, Permutation
from .exceptions import (
    EdgeNotCovered,
    MalformedDocument,
    NotATree,
    NotSimple,
    VertexBagsDisconnected,
    WidthExceedsK,
)
from .terms import Compose, OneLeaf, Schur, Term

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TreeDecomposition:
    bags: Tuple[FrozenSet[int], ...]
    tree_edges: Tuple[Tuple[int, int], ...] = ()
    root: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'bags', tuple(frozenset(b) for b in self.bags))
        object.__setattr__(self, 'tree_edges', tuple(tuple(e) for e in self.tree_edges))

    @property
    def width(self) -> int:
        return max(0, max((len(b) for b in self.bags), default=0) - 1)

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.bags)))
        tree.add_edges_from(self.tree_edges)
        return tree

    def to_dict(self) -> Dict:
        return {
            'bags': [sorted(b) for b in self.bags],
            'tree_edges': [list(e) for e in self.tree_edges],
            'root': self.root,
        }


def parse_tree_decomposition(text) -> TreeDecomposition:
    """Parse a {"bags": [[v...]...], "tree_edges": [[a, b]...], "root": i} document"""
    document = json.loads(text) if isinstance(text, (str, bytes)) else text
    try:
        bags = [frozenset(int(v) for v in bag) for bag in document['bags']]
        edges = [(int(a), int(b)) for a, b in document.get('tree_edges', [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDocument(f"Malformed tree decomposition document: {exc}") from exc
    root = document.get('root')
    return TreeDecomposition(tuple(bags), tuple(edges), root)


def validate(graph: MultiGraph, td: TreeDecomposition) -> int:
    """Check the tree decomposition axioms and return the width"""
    if not td.bags:
        raise NotATree("A tree decomposition needs at least one bag")
    for a, b in td.tree_edges:
        if not (0 <= a < len(td.bags) and 0 <= b < len(td.bags)):
            raise NotATree(f"Tree edge ({a}, {b}) references a missing bag")
    tree = td.tree()
    if tree.number_of_edges() != len(td.tree_edges) or not nx.is_tree(tree):
        raise NotATree("The bags are not connected by a tree")
    if td.root is not None and not 0 <= td.root < len(td.bags):
        raise NotATree(f"Root {td.root} is not a bag")

    for bag in td.bags:
        for v in bag:
            if not 0 <= v < graph.vertex_count:
                raise MalformedDocument(f"Bag vertex {v} is outside [0, {graph.vertex_count})")

    for v in graph.vertices:
        holding = [index for index, bag in enumerate(td.bags) if v in bag]
        if not holding:
            raise VertexBagsDisconnected(f"Vertex {v} is in no bag")
        if not nx.is_connected(tree.subgraph(holding)):
            raise VertexBagsDisconnected(f"The bags containing vertex {v} are not connected")

    for u, v, _ in graph.edges:
        if not any(u in bag and v in bag for bag in td.bags):
            raise EdgeNotCovered(f"Edge ({u}, {v}) is not inside any bag")

    return td.width


def _elimination_cost(adjacency: Sequence[int], eliminated: int, v: int) -> int:
    """Number of non-eliminated vertices reachable from v through eliminated ones"""
    seen = 1 << v
    frontier = [v]
    reached = 0
    while frontier:
        u = frontier.pop()
        neighbors = adjacency[u] & ~seen
        seen |= neighbors
        while neighbors:
            w = (neighbors & -neighbors).bit_length() - 1
            neighbors &= neighbors - 1
            if eliminated >> w & 1:
                frontier.append(w)
            else:
                reached += 1
    return reached


def exact_treewidth(graph: MultiGraph) -> Tuple[int, TreeDecomposition]:
    """
    Exact treewidth by dynamic programming over sets of eliminated vertices.

    Multiplicities are ignored. Returns the width and a witness decomposition
    built from an optimal elimination ordering.
    """
    n = graph.vertex_count
    check_limit('MAX_TREEWIDTH_VERTICES', n, 'vertices for exact treewidth')
    if n == 0:
        return 0, TreeDecomposition((frozenset(),), (), 0)

    adjacency = [0] * n
    for u, v, _ in graph.edges:
        adjacency[u] |= 1 << v
        adjacency[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(eliminated: int) -> Tuple[int, int]:
        """(cost, last vertex) for eliminating exactly this set first"""
        if eliminated == 0:
            return -1, -1
        result = (n + 1, -1)
        rest = eliminated
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            before = eliminated & ~(1 << v)
            cost = max(best(before)[0], _elimination_cost(adjacency, before, v))
            if cost < result[0]:
                result = (cost, v)
        return result

    full = (1 << n) - 1
    width = best(full)[0]
    ordering: List[int] = []
    eliminated = full
    while eliminated:
        v = best(eliminated)[1]
        ordering.append(v)
        eliminated &= ~(1 << v)
    ordering.reverse()
    best.cache_clear()

    td = _decomposition_from_ordering(n, graph, ordering)
    logger.debug(f"Exact treewidth of {graph} is {width} (ordering {ordering})")
    return max(width, 0), td


def _decomposition_from_ordering(n: int, graph: MultiGraph, ordering: List[int]) -> TreeDecomposition:
    position = {v: i for i, v in enumerate(ordering)}
    filled = {v: set() for v in range(n)}
    for u, v, _ in graph.edges:
        filled[u].add(v)
        filled[v].add(u)

    bags: List[FrozenSet[int]] = []
    parents: List[Optional[int]] = []
    for v in ordering:
        later = {w for w in filled[v] if position[w] > position[v]}
        bags.append(frozenset(later | {v}))
        for a in later:
            filled[a] |= later - {a}
        parents.append(min((position[w] for w in later), default=None))

    edges = []
    roots = []
    for index, parent in enumerate(parents):
        if parent is None:
            roots.append(index)
        else:
            edges.append((index, parent))
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(tuple(bags), tuple(edges), roots[-1])


def treewidth(graph: MultiGraph) -> int:
    return exact_treewidth(graph)[0]


# Nice tree decompositions

LEAF = 'leaf'
INTRODUCE = 'introduce'
FORGET = 'forget'
JOIN = 'join'


@dataclass(frozen=True)
class NiceNode:
    kind: str
    bag: FrozenSet[int]
    vertex: Optional[int] = None
    children: Tuple['NiceNode', ...] = field(default=())


@dataclass(frozen=True)
class NiceTreeDecomposition:
    root: NiceNode

    def nodes(self) -> Iterator[NiceNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(node.children)

    @property
    def width(self) -> int:
        return max(0, max(len(node.bag) for node in self.nodes()) - 1)

    @property
    def is_path(self) -> bool:
        return all(node.kind != JOIN for node in self.nodes())

    def check(self):
        """Raise MalformedDocument unless every node is consistent with its kind"""
        if self.root.bag:
            raise MalformedDocument("The root bag of a nice decomposition must be empty")
        for node in self.nodes():
            children = node.children
            if node.kind == LEAF:
                ok = not children and not node.bag
            elif node.kind == INTRODUCE:
                ok = len(children) == 1 and node.vertex in node.bag and children[0].bag == node.bag - {node.vertex}
            elif node.kind == FORGET:
                ok = (len(children) == 1 and node.vertex not in node.bag
                      and children[0].bag == node.bag | {node.vertex})
            elif node.kind == JOIN:
                ok = len(children) == 2 and all(child.bag == node.bag for child in children)
            else:
                ok = False
            if not ok:
                raise MalformedDocument(f"Inconsistent {node.kind} node with bag {sorted(node.bag)}")

    def as_tree_decomposition(self) -> TreeDecomposition:
        bags: List[FrozenSet[int]] = []
        edges: List[Tuple[int, int]] = []
        stack: List[Tuple[NiceNode, Optional[int]]] = [(self.root, None)]
        while stack:
            node, parent = stack.pop()
            index = len(bags)
            bags.append(node.bag)
            if parent is not None:
                edges.append((parent, index))
            stack.extend((child, index) for child in node.children)
        return TreeDecomposition(tuple(bags), tuple(edges), 0)


def _chain_up(node: NiceNode, target: FrozenSet[int]) -> NiceNode:
    """Forget what target lacks, then introduce what target adds"""
    for v in sorted(node.bag - target):
        node = NiceNode(FORGET, node.bag - {v}, v, (node,))
    for v in sorted(target - node.bag):
        node = NiceNode(INTRODUCE, node.bag | {v}, v, (node,))
    return node


def make_nice(graph: MultiGraph, td: TreeDecomposition) -> NiceTreeDecomposition:
    """Expand a valid decomposition into leaf/introduce/forget/join form"""
    validate(graph, td)
    tree = td.tree()
    root = td.root if td.root is not None else 0

    def build(index: int, parent: Optional[int]) -> NiceNode:
        bag = td.bags[index]
        branches = [
            _chain_up(build(child, index), bag)
            for child in sorted(tree.neighbors(index))
            if child != parent
        ]
        if not branches:
            return _chain_up(NiceNode(LEAF, frozenset()), bag)
        node = branches[0]
        for other in branches[1:]:
            node = NiceNode(JOIN, bag, None, (node, other))
        return node

    nice = NiceTreeDecomposition(_chain_up(build(root, None), frozenset()))
    nice.check()
    return nice


# Compilation into terms

def nice_td_to_term(graph: MultiGraph, ntd: NiceTreeDecomposition, k: int) -> Term:
    """
    Compile a nice decomposition into a term over Neighbor, Adjacency and Permutation.

    Each term carries a slot map (slot -> graph vertex, or None for a padding
    isolate). Forgetting u emits one Adjacency per edge multiplicity between u
    and the rest of the bag, then a Neighbor step on u's slot; introducing v
    claims a free slot; joins permute the second branch onto the first.
    """
    if ntd.width > k - 1:
        raise WidthExceedsK(f"Decomposition width {ntd.width} needs more than k = {k} slots")
    adjacency = graph.adjacency()

    def build(node: NiceNode) -> Tuple[Term, List[Optional[int]]]:
        if node.kind == LEAF:
            return OneLeaf(k), [None] * k
        if node.kind == INTRODUCE:
            term, slots = build(node.children[0])
            slots = list(slots)
            slots[slots.index(None)] = node.vertex
            return term, slots
        if node.kind == FORGET:
            term, slots = build(node.children[0])
            u = node.vertex
            s = slots.index(u)
            for t, w in enumerate(slots):
                if w is None or w == u:
                    continue
                for _ in range(adjacency[u].get(w, 0)):
                    term = Compose(Adjacency(k, min(s, t) + 1, max(s, t) + 1), term)
            term = Compose(Neighbor(k, s + 1), term)
            slots = list(slots)
            slots[s] = None
            return term, slots
        # join
        left, left_slots = build(node.children[0])
        right, right_slots = build(node.children[1])
        target = {v: s for s, v in enumerate(left_slots) if v is not None}
        free_targets = iter(s for s, v in enumerate(left_slots) if v is None)
        pi = [target[v] + 1 if v is not None else next(free_targets) + 1 for v in right_slots]
        permutation = Permutation(k, tuple(pi))
        if not permutation.is_identity:
            right = Compose(permutation, right)
        return Schur(left, right), left_slots

    term, _ = build(ntd.root)
    return term


def _global_slots(ntd: NiceTreeDecomposition, k: int) -> Dict[int, int]:
    """Slot per graph vertex, distinct within every bag; assigned top-down at forget nodes"""
    slots: Dict[int, int] = {}
    stack = [ntd.root]
    while stack:
        node = stack.pop()
        if node.kind == FORGET:
            taken = {slots[w] for w in node.bag}
            slots[node.vertex] = min(s for s in range(k) if s not in taken)
        stack.extend(node.children)
    return slots


def nice_td_to_simple_term(graph: MultiGraph, ntd: NiceTreeDecomposition, k: int) -> Term:
    """
    Compile a nice decomposition of a simple graph into a term over AdjNei only.

    A forgotten vertex is joined to all of its bag neighbors in the same step,
    so no edge is ever emitted twice.
    """
    if not graph.is_simple:
        raise NotSimple(f"{graph} has parallel edges")
    if ntd.width > k - 1:
        raise WidthExceedsK(f"Decomposition width {ntd.width} needs more than k = {k} slots")
    adjacency = graph.adjacency()
    slots = _global_slots(ntd, k)

    def build(node: NiceNode) -> Term:
        if node.kind == LEAF:
            return OneLeaf(k)
        if node.kind == INTRODUCE:
            return build(node.children[0])
        if node.kind == FORGET:
            u = node.vertex
            neighbors = frozenset(slots[w] + 1 for w in node.bag if w in adjacency[u])
            return Compose(AdjNei(k, slots[u] + 1, neighbors), build(node.children[0]))
        return Schur(build(node.children[0]), build(node.children[1]))

    return build(ntd.root)


def graph_to_term(graph: MultiGraph, k: int, simple: bool = False) -> Term:
    """Exact treewidth witness, made nice, compiled"""
    _, td = exact_treewidth(graph)
    ntd = make_nice(graph, td)
    if simple:
        return nice_td_to_simple_term(graph, ntd, k)
    return nice_td_to_term(graph, ntd, k)
