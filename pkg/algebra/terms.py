"""
Terms over a generator family and their s-expression syntax.

    (one k)
    (comp GEN TERM)
    (schur TERM TERM)

    GEN ::= (N k j) | (A k i j) | (P k p1 ... pk) | (S k j (i ...))

Indices are 1-based.
"""
import itertools
import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Union

from graphons.structures import MultiGraph

from .bilabeled import (
    AdjNei,
    Adjacency,
    BiLabeledGraph,
    Generator,
    Neighbor,
    Permutation,
    canonical_form,
    compose,
    make_generator,
    oblivious_family,
    schur,
    simple_family,
)
from .exceptions import ArityMismatch, TermSyntaxError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OneLeaf:
    k: int


@dataclass(frozen=True)
class Compose:
    generator: Generator
    term: 'Term'

    def __post_init__(self):
        if self.generator.arity != (self.term.k, self.term.k):
            raise ArityMismatch(
                f"Generator {self.generator} has arity {self.generator.arity}; terms of arity {self.term.k} "
                f"only accept generators in M^{{{self.term.k},{self.term.k}}}"
            )

    @property
    def k(self) -> int:
        return self.term.k


@dataclass(frozen=True)
class Schur:
    left: 'Term'
    right: 'Term'

    def __post_init__(self):
        if self.left.k != self.right.k:
            raise ArityMismatch(f"Schur product of terms with arities {self.left.k} and {self.right.k}")

    @property
    def k(self) -> int:
        return self.left.k


Term = Union[OneLeaf, Compose, Schur]


def eval_term(term: Term) -> BiLabeledGraph:
    if isinstance(term, OneLeaf):
        return BiLabeledGraph(MultiGraph(term.k), tuple(range(term.k)), ())
    if isinstance(term, Compose):
        return compose(make_generator(term.generator), eval_term(term.term))
    return schur(eval_term(term.left), eval_term(term.right))


def height(term: Term) -> int:
    if isinstance(term, OneLeaf):
        return 0
    if isinstance(term, Compose):
        return height(term.term) + term.generator.family_height
    return max(height(term.left), height(term.right))


def size(term: Term) -> int:
    if isinstance(term, OneLeaf):
        return 1
    if isinstance(term, Compose):
        return 1 + size(term.term)
    return 1 + size(term.left) + size(term.right)


def is_path_term(term: Term) -> bool:
    """Terms without Schur products (the path closure)"""
    if isinstance(term, OneLeaf):
        return True
    if isinstance(term, Compose):
        return is_path_term(term.term)
    return False


def generators_of(term: Term) -> List[Generator]:
    if isinstance(term, OneLeaf):
        return []
    if isinstance(term, Compose):
        return [term.generator] + generators_of(term.term)
    return generators_of(term.left) + generators_of(term.right)


def compose_chain(generators: Iterable[Generator], term: Term) -> Term:
    """Compose generators onto a term; the first generator ends up outermost"""
    for generator in reversed(list(generators)):
        term = Compose(generator, term)
    return term


# Textual syntax

TOKEN_PATTERN = re.compile(r'\(|\)|[^\s()]+')


def _tokenize(text: str) -> List[str]:
    tokens = TOKEN_PATTERN.findall(text)
    if not tokens:
        raise TermSyntaxError("Empty term")
    return tokens


def _read(tokens: List[str], position: int):
    token = tokens[position]
    if token == '(':
        items = []
        position += 1
        while position < len(tokens) and tokens[position] != ')':
            item, position = _read(tokens, position)
            items.append(item)
        if position >= len(tokens):
            raise TermSyntaxError("Unbalanced parentheses: missing ')'")
        return items, position + 1
    if token == ')':
        raise TermSyntaxError("Unexpected ')'")
    return token, position + 1


def _int(token, what: str) -> int:
    if not isinstance(token, str) or not re.fullmatch(r'\d+', token):
        raise TermSyntaxError(f"Expected a non-negative integer for {what}, got {token!r}")
    return int(token)


def _generator(expression) -> Generator:
    if not isinstance(expression, list) or not expression:
        raise TermSyntaxError(f"Malformed generator {expression!r}")
    head, *args = expression
    if head == 'N' and len(args) == 2:
        generator = Neighbor(_int(args[0], 'k'), _int(args[1], 'j'))
    elif head == 'A' and len(args) == 3:
        generator = Adjacency(_int(args[0], 'k'), _int(args[1], 'i'), _int(args[2], 'j'))
    elif head == 'P' and len(args) >= 1:
        k = _int(args[0], 'k')
        generator = Permutation(k, tuple(_int(a, 'permutation entry') for a in args[1:]))
    elif head == 'S' and len(args) == 3 and isinstance(args[2], list):
        generator = AdjNei(_int(args[0], 'k'), _int(args[1], 'j'), frozenset(_int(a, 'V entry') for a in args[2]))
    else:
        raise TermSyntaxError(f"Unknown generator form {expression!r}")
    make_generator(generator)
    return generator


def _term(expression) -> Term:
    if not isinstance(expression, list) or not expression:
        raise TermSyntaxError(f"Malformed term {expression!r}")
    head, *args = expression
    if head == 'one' and len(args) == 1:
        return OneLeaf(_int(args[0], 'k'))
    if head == 'comp' and len(args) == 2:
        return Compose(_generator(args[0]), _term(args[1]))
    if head == 'schur' and len(args) == 2:
        return Schur(_term(args[0]), _term(args[1]))
    raise TermSyntaxError(f"Unknown term form {expression!r}")


def parse_term(text: str) -> Term:
    tokens = _tokenize(text)
    expression, position = _read(tokens, 0)
    if position != len(tokens):
        raise TermSyntaxError(f"Trailing input after term: {' '.join(tokens[position:])}")
    return _term(expression)


def format_generator(generator: Generator) -> str:
    if isinstance(generator, Neighbor):
        return f"(N {generator.k} {generator.j})"
    if isinstance(generator, Adjacency):
        return f"(A {generator.k} {generator.i} {generator.j})"
    if isinstance(generator, Permutation):
        return f"(P {generator.k} {' '.join(str(p) for p in generator.pi)})"
    if isinstance(generator, AdjNei):
        return f"(S {generator.k} {generator.j} ({' '.join(str(i) for i in sorted(generator.V))}))"
    raise TermSyntaxError(f"{generator!r} has no textual form")


def format_term(term: Term) -> str:
    if isinstance(term, OneLeaf):
        return f"(one {term.k})"
    if isinstance(term, Compose):
        return f"(comp {format_generator(term.generator)} {format_term(term.term)})"
    return f"(schur {format_term(term.left)} {format_term(term.right)})"


# Enumeration

FAMILIES = {
    'oblivious': oblivious_family,
    'simple': simple_family,
}


def enumerate_terms(
    k: int,
    max_height: int,
    max_size: int,
    family: str = 'oblivious',
    max_terms: Optional[int] = None,
) -> List[Term]:
    """
    Terms over a generator family, one per isomorphism class of evaluated graph.

    Terms are grown by size; two terms whose evaluations agree after dropping
    unlabeled isolated vertices are considered duplicates and only the first is kept.
    """
    generators = FAMILIES[family](k)
    by_size: Dict[int, List[Term]] = {1: [OneLeaf(k)]}
    seen = {canonical_form(eval_term(OneLeaf(k)).without_unlabeled_isolates())}
    result: List[Term] = [OneLeaf(k)]

    def accept(candidate: Term) -> bool:
        if height(candidate) > max_height:
            return False
        key = canonical_form(eval_term(candidate).without_unlabeled_isolates())
        if key in seen:
            return False
        seen.add(key)
        return True

    for current in range(2, max_size + 1):
        level: List[Term] = []
        for inner in by_size.get(current - 1, []):
            for generator in generators:
                candidate = Compose(generator, inner)
                if accept(candidate):
                    level.append(candidate)
        for left_size in range(1, current - 1):
            right_size = current - 1 - left_size
            if left_size > right_size:
                break
            for left, right in itertools.product(by_size.get(left_size, []), by_size.get(right_size, [])):
                candidate = Schur(left, right)
                if accept(candidate):
                    level.append(candidate)
        by_size[current] = level
        result.extend(level)
        logger.debug(f"Term enumeration k={k} size={current}: {len(level)} new classes")
        if max_terms is not None and len(result) >= max_terms:
            return result[:max_terms]
    return result
