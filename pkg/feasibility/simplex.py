"""
Exact linear feasibility over the rationals.

Systems are sparse equalities over named variables with nonnegativity flags.
``feasible`` runs a presolve pass, builds a crash basis from the homogeneous
rows and finishes with a phase-1 simplex, then re-checks every witness against
the original system. ``feasible_up_to_symmetry`` solves the quotient of a
system by a symmetry group instead and lifts the witness back.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Set, Tuple

from graphons.limits import check_limit
from .exceptions import InfeasiblePresolve, UnknownVariable, WitnessValidationError

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)

# consecutive degenerate pivots before switching to Bland's rule
DEGENERATE_PIVOT_LIMIT = 50


@dataclass
class LinearSystem:
    """Equalities sum_v a_v x_v = b over a catalog of named variables"""
    name: str = ''
    variables: Dict[Hashable, int] = field(default_factory=dict)
    names: List[Hashable] = field(default_factory=list)
    nonnegative: List[bool] = field(default_factory=list)
    rows: List[Dict[int, Fraction]] = field(default_factory=list)
    rhs: List[Fraction] = field(default_factory=list)

    def add_variable(self, name: Hashable, nonnegative: bool = True) -> int:
        if name in self.variables:
            return self.variables[name]
        index = len(self.names)
        self.variables[name] = index
        self.names.append(name)
        self.nonnegative.append(nonnegative)
        check_limit('MAX_LP_VARIABLES', len(self.names), f"variables of {self.name or 'linear system'}")
        return index

    def index(self, name: Hashable) -> int:
        try:
            return self.variables[name]
        except KeyError:
            raise UnknownVariable(f"Variable {name!r} is not in the catalog") from None

    def add_constraint(self, coefficients: Dict[Hashable, Fraction], rhs=0):
        """Add sum coefficients[name] * name = rhs; repeated names accumulate"""
        row: Dict[int, Fraction] = {}
        for name, coefficient in coefficients.items():
            index = self.index(name)
            row[index] = row.get(index, Fraction(0)) + Fraction(coefficient)
        self.rows.append({i: c for i, c in row.items() if c})
        self.rhs.append(Fraction(rhs))

    def add_indexed_constraint(self, row: Dict[int, Fraction], rhs=0):
        self.rows.append({i: Fraction(c) for i, c in row.items() if c})
        self.rhs.append(Fraction(rhs))

    @property
    def size(self) -> Tuple[int, int]:
        return len(self.rows), len(self.names)

    def check(self, values: List[Fraction]) -> Optional[str]:
        """Return a description of the first violated constraint, or None"""
        for index, value in enumerate(values):
            if self.nonnegative[index] and value < 0:
                return f"{self.names[index]!r} = {value} is negative"
        for number, (row, rhs) in enumerate(zip(self.rows, self.rhs)):
            total = sum((c * values[i] for i, c in row.items()), Fraction(0))
            if total != rhs:
                return f"constraint {number} evaluates to {total}, expected {rhs}"
        return None


@dataclass
class FeasibilityResult:
    feasible: bool
    witness: Optional[Dict[Hashable, Fraction]] = None
    pivots: int = 0
    presolved_variables: int = 0

    @property
    def verdict(self) -> str:
        return 'FEASIBLE' if self.feasible else 'INFEASIBLE'

    def value(self, name: Hashable) -> Fraction:
        return self.witness[name]


def _presolve(system: LinearSystem) -> Tuple[Dict[int, Fraction], List[Tuple[Dict[int, Fraction], Fraction]]]:
    """
    Fix variables forced by singleton rows and by all-same-sign rows with zero
    right-hand side, substituting until nothing changes, then drop rows that
    repeat an earlier row up to scaling.
    """
    fixed: Dict[int, Fraction] = {}
    rows = [(dict(row), rhs) for row, rhs in zip(system.rows, system.rhs)]
    changed = True
    while changed:
        changed = False
        remaining = []
        for row, rhs in rows:
            for index in [i for i in row if i in fixed]:
                rhs -= row.pop(index) * fixed[index]
            if not row:
                if rhs != 0:
                    raise InfeasiblePresolve(f"0 = {rhs}")
                continue
            signs = {c > 0 for c in row.values()}
            all_nonnegative = all(system.nonnegative[i] for i in row)
            if len(row) == 1:
                (index, coefficient), = row.items()
                value = rhs / coefficient
                if system.nonnegative[index] and value < 0:
                    raise InfeasiblePresolve(f"{system.names[index]!r} forced to {value}")
                fixed[index] = value
                changed = True
                continue
            if all_nonnegative and len(signs) == 1:
                positive = signs.pop()
                if rhs == 0:
                    for index in row:
                        fixed[index] = Fraction(0)
                    changed = True
                    continue
                if (rhs > 0) != positive:
                    raise InfeasiblePresolve(f"same-sign row with right-hand side {rhs}")
            remaining.append((row, rhs))
        rows = remaining
    return fixed, _drop_duplicate_rows(rows)


def _normalized(row: Dict[int, Fraction], rhs: Fraction) -> Tuple[Tuple[Tuple[int, Fraction], ...], Fraction]:
    lead = row[min(row)]
    return tuple(sorted((i, c / lead) for i, c in row.items())), rhs / lead


def _drop_duplicate_rows(rows: List[Tuple[Dict[int, Fraction], Fraction]]) -> List[Tuple[Dict[int, Fraction], Fraction]]:
    """Remove rows that are scalar multiples of an earlier row"""
    seen: Dict[Tuple, Fraction] = {}
    unique = []
    for row, rhs in rows:
        key, scaled = _normalized(row, rhs)
        if key in seen:
            if seen[key] != scaled:
                raise InfeasiblePresolve(f"parallel rows with right-hand sides {seen[key]} and {scaled}")
            continue
        seen[key] = scaled
        unique.append((row, rhs))
    return unique


class _Tableau:
    """Sparse simplex tableau over Fractions; row r reads sum rows[r][c] x_c = values[r]"""

    def __init__(self):
        self.rows: List[Dict[int, Fraction]] = []
        self.values: List[Fraction] = []
        self.basis: List[Optional[int]] = []
        self.column_rows: Dict[int, Set[int]] = defaultdict(set)
        self.cost: Dict[int, Fraction] = {}
        # the cost row reads sum cost[c] x_c = cost_value, so the objective is -cost_value
        self.cost_value = Fraction(0)

    def add_row(self, row: Dict[int, Fraction], value: Fraction) -> int:
        index = len(self.rows)
        self.rows.append(row)
        self.values.append(value)
        self.basis.append(None)
        for column in row:
            self.column_rows[column].add(index)
        return index

    def _subtract(self, target: Dict[int, Fraction], index: Optional[int], factor: Fraction, pivot_row: Dict[int, Fraction]):
        for column, coefficient in pivot_row.items():
            updated = target.get(column, ZERO) - factor * coefficient
            if updated:
                if index is not None and column not in target:
                    self.column_rows[column].add(index)
                target[column] = updated
            elif column in target:
                del target[column]
                if index is not None:
                    self.column_rows[column].discard(index)

    def pivot(self, r: int, column: int):
        pivot_row = self.rows[r]
        pivot = pivot_row[column]
        if pivot != 1:
            for c in pivot_row:
                pivot_row[c] /= pivot
            self.values[r] /= pivot
        for other in list(self.column_rows[column]):
            if other == r:
                continue
            factor = self.rows[other][column]
            self._subtract(self.rows[other], other, factor, pivot_row)
            self.values[other] -= factor * self.values[r]
        factor = self.cost.get(column)
        if factor:
            self._subtract(self.cost, None, factor, pivot_row)
            self.cost_value -= factor * self.values[r]
        self.basis[r] = column

    def drop_column(self, column: int):
        for r in self.column_rows.pop(column, ()):
            del self.rows[r][column]
        self.cost.pop(column, None)

    @property
    def objective(self) -> Fraction:
        return -self.cost_value


def _crash_basis(tableau: _Tableau) -> None:
    """
    Pivot on every homogeneous row, sparsest first, choosing the column with the
    fewest entries. Right-hand sides never change since each pivot row has value 0;
    rows that empty out are dependent and stay inert.
    """
    pending = {r for r, value in enumerate(tableau.values) if value == 0}
    while pending:
        r = min(pending, key=lambda i: (len(tableau.rows[i]), i))
        pending.discard(r)
        row = tableau.rows[r]
        if not row:
            continue
        column = min(row, key=lambda c: (len(tableau.column_rows[c]), c))
        tableau.pivot(r, column)


def _phase_one(rows: List[Tuple[Dict[int, Fraction], Fraction]], columns: List[int]) -> Tuple[Optional[Dict[int, Fraction]], int]:
    """
    Phase-1 simplex on rows over nonnegative columns. Returns (values, pivots)
    with values None when the system is infeasible.

    Homogeneous rows get a crash basis; the others get an artificial column
    unless a column occurring only in that row can be basic. Entering columns
    follow Dantzig's rule and fall back to Bland's rule after a run of
    degenerate pivots.
    """
    position = {c: i for i, c in enumerate(columns)}
    width = len(columns)
    tableau = _Tableau()
    for row, rhs in rows:
        tableau.add_row({position[i]: c for i, c in row.items()}, rhs)

    _crash_basis(tableau)
    pivots = sum(1 for column in tableau.basis if column is not None)

    artificials: Set[int] = set()
    for r, value in enumerate(tableau.values):
        if tableau.basis[r] is not None:
            continue
        row = tableau.rows[r]
        if not row:
            if value != 0:
                return None, pivots
            continue
        if value < 0:
            for c in row:
                row[c] = -row[c]
            tableau.values[r] = value = -value
        if value == 0:
            continue
        singleton = next((c for c in sorted(row) if row[c] > 0 and len(tableau.column_rows[c]) == 1), None)
        if singleton is not None:
            tableau.pivot(r, singleton)
            continue
        artificial = width + r
        row[artificial] = ONE
        tableau.column_rows[artificial].add(r)
        tableau.basis[r] = artificial
        artificials.add(artificial)
        tableau.cost_value -= value
        for c, coefficient in row.items():
            if c != artificial:
                tableau.cost[c] = tableau.cost.get(c, ZERO) - coefficient
    tableau.cost = {c: d for c, d in tableau.cost.items() if d}

    degenerate_run = 0
    while tableau.objective > 0:
        candidates = [(d, c) for c, d in tableau.cost.items() if d < 0]
        if not candidates:
            break
        bland = degenerate_run >= DEGENERATE_PIVOT_LIMIT
        entering = min(c for _, c in candidates) if bland else min(candidates)[1]

        leaving = None
        best = None
        for r in tableau.column_rows[entering]:
            coefficient = tableau.rows[r][entering]
            if coefficient <= 0:
                continue
            ratio = tableau.values[r] / coefficient
            basic = tableau.basis[r]
            # prefer pushing artificials out unless anti-cycling is on
            key = (ratio, basic) if bland else (ratio, basic not in artificials, basic)
            if best is None or key < best:
                leaving, best = r, key
        if leaving is None:
            # the phase-1 objective is bounded below
            break

        degenerate_run = degenerate_run + 1 if best[0] == 0 else 0
        outgoing = tableau.basis[leaving]
        tableau.pivot(leaving, entering)
        pivots += 1
        if outgoing in artificials:
            artificials.discard(outgoing)
            tableau.drop_column(outgoing)
        if pivots % 200 == 0:
            logger.debug(f"{pivots} pivots, objective {tableau.objective}, {len(artificials)} artificials left")

    if tableau.objective != 0:
        return None, pivots
    solution = {
        columns[column]: tableau.values[r]
        for r, column in enumerate(tableau.basis)
        if column is not None and column < width
    }
    return solution, pivots


def feasible(system: LinearSystem) -> FeasibilityResult:
    """Decide feasibility exactly; a feasible verdict carries a validated witness"""
    rows_count, columns_count = system.size
    try:
        fixed, rows = _presolve(system)
    except InfeasiblePresolve as exc:
        logger.info(f"{system.name or 'system'} ({rows_count}x{columns_count}): INFEASIBLE in presolve ({exc.message})")
        return FeasibilityResult(False)

    # free variables are split into a positive and a negative part
    split: Dict[int, int] = {}
    next_column = len(system.names)
    columns = sorted({i for row, _ in rows for i in row})
    expanded_rows = []
    for row, rhs in rows:
        expanded = dict(row)
        for index, coefficient in row.items():
            if not system.nonnegative[index]:
                if index not in split:
                    split[index] = next_column
                    next_column += 1
                expanded[split[index]] = -coefficient
        expanded_rows.append((expanded, rhs))
    columns += sorted(split.values())

    solution, pivots = _phase_one(expanded_rows, columns) if expanded_rows else ({}, 0)
    if solution is None:
        logger.info(f"{system.name or 'system'} ({rows_count}x{columns_count}): INFEASIBLE after {pivots} pivots")
        return FeasibilityResult(False, pivots=pivots, presolved_variables=len(fixed))

    values = [Fraction(0)] * len(system.names)
    for index, value in fixed.items():
        values[index] = value
    for column, value in solution.items():
        if column < len(system.names):
            values[column] += value
    for index, negative in split.items():
        values[index] -= solution.get(negative, Fraction(0))

    problem = system.check(values)
    if problem:
        raise WitnessValidationError(f"Witness for {system.name or 'system'} fails: {problem}")
    logger.info(f"{system.name or 'system'} ({rows_count}x{columns_count}): FEASIBLE after {pivots} pivots")
    witness = {name: values[index] for index, name in enumerate(system.names)}
    return FeasibilityResult(True, witness, pivots, len(fixed))


def quotient(system: LinearSystem, orbit: Callable[[Hashable], Hashable]) -> LinearSystem:
    """
    Merge the variables of each orbit into one. If the system is invariant under
    a group whose orbits these are, averaging a solution over the group gives
    a solution constant on orbits, so the quotient is feasible exactly when the
    system is.
    """
    reduced = LinearSystem(name=f"{system.name or 'system'}/sym")
    for index, name in enumerate(system.names):
        reduced.add_variable(orbit(name), system.nonnegative[index])
    for row, rhs in zip(system.rows, system.rhs):
        merged: Dict[int, Fraction] = {}
        for index, coefficient in row.items():
            target = reduced.variables[orbit(system.names[index])]
            merged[target] = merged.get(target, ZERO) + coefficient
        reduced.add_indexed_constraint(merged, rhs)
    return reduced


def feasible_up_to_symmetry(system: LinearSystem, orbit: Callable[[Hashable], Hashable]) -> FeasibilityResult:
    """Decide the quotient, then check the lifted witness against the full system"""
    reduced = quotient(system, orbit)
    logger.debug(f"{system.name or 'system'}: {system.size[1]} variables in {reduced.size[1]} orbits")
    result = feasible(reduced)
    if not result.feasible:
        return result
    values = [result.witness[orbit(name)] for name in system.names]
    problem = system.check(values)
    if problem:
        raise WitnessValidationError(f"Lifted witness for {system.name or 'system'} fails: {problem}")
    witness = {name: values[index] for index, name in enumerate(system.names)}
    return FeasibilityResult(True, witness, result.pivots, result.presolved_variables)
