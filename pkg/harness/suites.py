"""
Cross-validation suites.

Each suite evaluates, pair by pair, several characterizations that are known to
coincide and classifies the outcome:

- consistent: every definite verdict agrees
- theorem_violation: two characterizations proven equivalent disagree definitively
- inconclusive_budget: a budgeted search (patterns, distinguishers) came up empty
"""
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from django.conf import settings

from feasibility.simplex import feasible
from feasibility.systems import (
    build_doubly_stochastic_commutant,
    build_markov_commutant,
    decide_Lk,
    markov_matrix,
)
from graphons.operators import hom_density_bruteforce
from graphons.structures import MultiGraph, StepGraphon, complete_graph, cycle_graph, graph_to_step_graphon
from refinement.refinement import GRAPH_MODE, GRAPHON_MODE, Algorithm, compare, equitable_parameters
from utils.rationals import format_rational
from .exceptions import UnknownSuite
from .enumeration import EnumerationSpec, enumerate_patterns, search_distinguisher
from .generators import GraphonPair, GraphPair, fig1_pair

logger = logging.getLogger(__name__)

CONSISTENT = 'consistent'
THEOREM_VIOLATION = 'theorem_violation'
INCONCLUSIVE_BUDGET = 'inconclusive_budget'
CLASSIFICATIONS = (CONSISTENT, THEOREM_VIOLATION, INCONCLUSIVE_BUDGET)

SUITES = ('colref', 'kwl', 'graphon', 'simple')


@dataclass
class EquivalenceReport:
    pair_id: str
    suite: str
    k: int
    verdicts: Dict[str, Any] = field(default_factory=dict)
    classification: str = CONSISTENT
    details: str = ''
    findings: List[str] = field(default_factory=list)
    seed: Optional[int] = None

    @property
    def is_violation(self) -> bool:
        return self.classification == THEOREM_VIOLATION

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _harness_setting(name: str) -> int:
    return settings.WL_HARNESS[name]


def _log(report: EquivalenceReport):
    if report.classification == THEOREM_VIOLATION:
        logger.warning(f"THEOREM VIOLATION {report.suite} k={report.k} {report.pair_id}: {report.details} {report.verdicts}")
    else:
        logger.info(f"{report.suite} k={report.k} {report.pair_id}: {report.classification}")
    for finding in report.findings:
        logger.warning(f"Finding {report.suite} k={report.k} {report.pair_id}: {finding}")


def _densities_agree(patterns: List[MultiGraph], first: StepGraphon, second: StepGraphon):
    found = search_distinguisher(first, second, patterns)
    if found is None:
        return True, None
    return False, f"{found.pattern}: {format_rational(found.first_density)} vs {format_rational(found.second_density)}"


# Color refinement on graphs

def tree_patterns(max_vertices: int = 5) -> List[MultiGraph]:
    return enumerate_patterns(EnumerationSpec(max_vertices, 1, 1, simple_only=True, connected_only=True))


def evaluate_colref_pair(pair_id: str, G: MultiGraph, H: MultiGraph, trees: Optional[List[MultiGraph]] = None) -> EquivalenceReport:
    U, W = graph_to_step_graphon(G), graph_to_step_graphon(H)
    report = EquivalenceReport(pair_id, 'colref', 1)
    comparison = compare(U, W, Algorithm('colref'), run_to_fixpoint=True)
    ds = feasible(build_doubly_stochastic_commutant(G, H))
    trees_equal, witness = _densities_agree(trees if trees is not None else tree_patterns(), U, W)
    masses_u, parameters_u = equitable_parameters(comparison.colorings[0], U)
    masses_w, parameters_w = equitable_parameters(comparison.colorings[1], W)
    parameters_equal = (masses_u, parameters_u) == (masses_w, parameters_w)

    report.verdicts = {
        'fingerprint_equal': comparison.equal,
        'first_difference': comparison.first_difference,
        'doubly_stochastic_feasible': ds.feasible,
        'tree_densities_equal': trees_equal,
        'equitable_parameters_equal': parameters_equal,
    }
    if witness:
        report.verdicts['tree_distinguisher'] = witness

    definite = {comparison.equal, ds.feasible, parameters_equal}
    if len(definite) > 1:
        report.classification = THEOREM_VIOLATION
        report.details = 'fingerprints, AX = XB and equitable parameters disagree'
    elif comparison.equal and not trees_equal:
        report.classification = THEOREM_VIOLATION
        report.details = f"equal colors but tree densities differ ({witness})"
    elif not comparison.equal and trees_equal:
        report.classification = INCONCLUSIVE_BUDGET
        report.details = 'no distinguishing tree within the pattern budget'
    _log(report)
    return report


def run_colref_suite(pairs: List[GraphPair]) -> List[EquivalenceReport]:
    trees = tree_patterns()
    return [evaluate_colref_pair(pair_id, G, H, trees) for pair_id, G, H in pairs]


# k-WL on graphs

def evaluate_kwl_pair(pair_id: str, G: MultiGraph, H: MultiGraph, k: int,
                      patterns: Optional[List[MultiGraph]] = None) -> EquivalenceReport:
    """Oblivious (k+1)-WL in graph mode against L^{k+1} and treewidth-k pattern counts"""
    U, W = graph_to_step_graphon(G), graph_to_step_graphon(H)
    report = EquivalenceReport(pair_id, 'kwl', k)
    comparison = compare(U, W, Algorithm('owl', k + 1, GRAPH_MODE))
    _, lp = decide_Lk(G, H, k + 1)
    if patterns is None:
        patterns = enumerate_patterns(EnumerationSpec(_harness_setting('PATTERN_MAX_VERTICES'), 1, k, simple_only=True))
    patterns_equal, witness = _densities_agree(patterns, U, W)

    report.verdicts = {
        'fingerprint_equal': comparison.equal,
        'first_difference': comparison.first_difference,
        f"L{k + 1}_feasible": lp.feasible,
        'pattern_densities_equal': patterns_equal,
    }
    if witness:
        report.verdicts['distinguisher'] = witness

    if comparison.equal != lp.feasible:
        report.classification = THEOREM_VIOLATION
        report.details = f"oblivious {k + 1}-WL and L^{k + 1} disagree"
    elif comparison.equal and not patterns_equal:
        report.classification = THEOREM_VIOLATION
        report.details = f"equal colors but a treewidth-{k} pattern separates ({witness})"
    _log(report)
    return report


def run_kwl_suite(pairs: List[GraphPair], k: int) -> List[EquivalenceReport]:
    patterns = enumerate_patterns(EnumerationSpec(_harness_setting('PATTERN_MAX_VERTICES'), 1, k, simple_only=True))
    return [evaluate_kwl_pair(pair_id, G, H, k, patterns) for pair_id, G, H in pairs]


# Oblivious k-WL on step graphons

def multigraph_patterns(k: int) -> List[MultiGraph]:
    return enumerate_patterns(EnumerationSpec(
        _harness_setting('PATTERN_MAX_VERTICES'),
        _harness_setting('PATTERN_MAX_MULTIPLICITY'),
        k - 1,
    ))


def _markov_verdict(U: StepGraphon, W: StepGraphon, k: int, family: str, report: EquivalenceReport, label: str):
    plain = feasible(build_markov_commutant(U, W, k, family))
    invariant = feasible(build_markov_commutant(U, W, k, family, perm_invariant=True)) if k > 1 else plain
    report.verdicts[f"{label}_feasible"] = plain.feasible
    report.verdicts[f"{label}_perm_invariant_feasible"] = invariant.feasible
    if plain.feasible != invariant.feasible:
        report.findings.append(f"{label}: permutation invariance changes feasibility ({plain.verdict} vs {invariant.verdict})")
    return plain, invariant


def evaluate_graphon_pair(pair_id: str, U: StepGraphon, W: StepGraphon, k: int,
                          patterns: Optional[List[MultiGraph]] = None) -> EquivalenceReport:
    report = EquivalenceReport(pair_id, 'graphon', k)
    comparison = compare(U, W, Algorithm('owl', k, GRAPHON_MODE))
    patterns = patterns if patterns is not None else multigraph_patterns(k)
    densities_equal, witness = _densities_agree(patterns, U, W)
    report.verdicts = {
        'fingerprint_equal': comparison.equal,
        'first_difference': comparison.first_difference,
        'pattern_densities_equal': densities_equal,
    }
    if witness:
        report.verdicts['distinguisher'] = witness

    if comparison.equal and not densities_equal:
        report.classification = THEOREM_VIOLATION
        report.details = f"equal colors but densities differ ({witness})"
    elif not comparison.equal and densities_equal:
        report.classification = INCONCLUSIVE_BUDGET
        report.details = 'no distinguishing multigraph within the pattern budget'

    plain, invariant = _markov_verdict(U, W, k, 'oblivious', report, 'markov')
    if invariant.feasible != comparison.equal:
        report.findings.append(
            f"Markov commutant {invariant.verdict} while fingerprints {comparison.verdict} (atoms: {U.n} and {W.n})"
        )
    if k == 1:
        colref = compare(U, W, Algorithm('colref'))
        colref_markov, _ = _markov_verdict(U, W, 1, 'colref', report, 'colref_markov')
        report.verdicts['colref_equal'] = colref.equal
        if colref.equal != colref_markov.feasible:
            report.findings.append(
                f"colref {colref.verdict} while the degree-operator commutant is {colref_markov.verdict}"
            )
    _log(report)
    return report


def run_graphon_suite(pairs: List[GraphonPair], k: int) -> List[EquivalenceReport]:
    patterns = multigraph_patterns(k)
    return [evaluate_graphon_pair(pair_id, U, W, k, patterns) for pair_id, U, W in pairs]


# Simple k-WL on step graphons

def simple_patterns(k: int) -> List[MultiGraph]:
    return enumerate_patterns(EnumerationSpec(
        _harness_setting('SIMPLE_PATTERN_MAX_VERTICES'), 1, k - 1, simple_only=True,
    ))


def evaluate_simple_pair(pair_id: str, U: StepGraphon, W: StepGraphon, k: int,
                         patterns: Optional[List[MultiGraph]] = None) -> EquivalenceReport:
    report = EquivalenceReport(pair_id, 'simple', k)
    comparison = compare(U, W, Algorithm('simple', k))
    patterns = patterns if patterns is not None else simple_patterns(k)
    densities_equal, witness = _densities_agree(patterns, U, W)
    report.verdicts = {
        'fingerprint_equal': comparison.equal,
        'first_difference': comparison.first_difference,
        'simple_pattern_densities_equal': densities_equal,
    }
    if witness:
        report.verdicts['distinguisher'] = witness
    if comparison.equal and not densities_equal:
        report.classification = THEOREM_VIOLATION
        report.details = f"equal simple colors but simple densities differ ({witness})"
    elif not comparison.equal and densities_equal:
        report.classification = INCONCLUSIVE_BUDGET
        report.details = 'no distinguishing simple graph within the pattern budget'
    _log(report)
    return report


def run_simple_suite(pairs: List[GraphonPair], k: int) -> List[EquivalenceReport]:
    patterns = simple_patterns(k)
    return [evaluate_simple_pair(pair_id, U, W, k, patterns) for pair_id, U, W in pairs]


# The weighted counterexample

@dataclass
class CounterexampleReport:
    colref: str
    markov_k1: str
    owl2: str
    owl2_first_difference: Optional[int]
    simple2: str
    simple3: str
    c2_densities: tuple
    k3_densities: tuple

    @property
    def matches_expectation(self) -> bool:
        return (
            self.colref == 'EQUAL' and self.markov_k1 == 'FEASIBLE' and self.owl2 == 'DIFFER'
            and self.owl2_first_difference == 0 and self.simple2 == 'EQUAL' and self.simple3 == 'DIFFER'
            and self.c2_densities == (Fraction(2, 3), Fraction(4, 9))
            and self.k3_densities == (Fraction(2, 9), Fraction(8, 27))
        )

    def rows(self) -> List[tuple]:
        return [
            ('color refinement', self.colref),
            ('Markov commutant, k=1 (degree operator)', self.markov_k1),
            ('oblivious 2-WL', f"{self.owl2} (first difference at round {self.owl2_first_difference})"),
            ('t(C2)', ' vs '.join(format_rational(d) for d in self.c2_densities)),
            ('simple 2-WL', self.simple2),
            ('simple 3-WL', self.simple3),
            ('t(K3)', ' vs '.join(format_rational(d) for d in self.k3_densities)),
        ]


def counterexample_fig1() -> CounterexampleReport:
    """Uniform K3 against the constant 2/3 graphon"""
    left, right = fig1_pair()
    owl2 = compare(left, right, Algorithm('owl', 2, GRAPHON_MODE))
    markov = feasible(build_markov_commutant(left, right, 1, 'colref'))
    if markov.feasible:
        logger.debug(f"Fig-1 Markov witness:\n{markov_matrix(markov, left, right, 1)}")
    return CounterexampleReport(
        colref=compare(left, right, Algorithm('colref')).verdict,
        markov_k1=markov.verdict,
        owl2=owl2.verdict,
        owl2_first_difference=owl2.first_difference,
        simple2=compare(left, right, Algorithm('simple', 2)).verdict,
        simple3=compare(left, right, Algorithm('simple', 3)).verdict,
        c2_densities=(hom_density_bruteforce(cycle_graph(2), left), hom_density_bruteforce(cycle_graph(2), right)),
        k3_densities=(hom_density_bruteforce(complete_graph(3), left), hom_density_bruteforce(complete_graph(3), right)),
    )


def run_suite(suite: str, k: int, graph_pairs: List[GraphPair] = (), graphon_pairs: List[GraphonPair] = (),
              seeds: Optional[Dict[str, int]] = None) -> List[EquivalenceReport]:
    """Evaluate every pair; reports of generated pairs carry the seed they were drawn from"""
    if suite == 'colref':
        reports = run_colref_suite(list(graph_pairs))
    elif suite == 'kwl':
        reports = run_kwl_suite(list(graph_pairs), k)
    elif suite == 'graphon':
        reports = run_graphon_suite(list(graphon_pairs), k)
    elif suite == 'simple':
        reports = run_simple_suite(list(graphon_pairs), k)
    else:
        raise UnknownSuite(f"Unknown suite {suite!r}")
    for report in reports:
        report.seed = (seeds or {}).get(report.pair_id)
    return reports
