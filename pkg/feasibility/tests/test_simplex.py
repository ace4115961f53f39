from fractions import Fraction
from unittest import mock

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from feasibility.exceptions import UnknownVariable
from feasibility.simplex import LinearSystem, feasible, feasible_up_to_symmetry, quotient
from feasibility.systems import build_doubly_stochastic_commutant
from graphons.exceptions import SizeLimitExceeded
from graphons.structures import cycle_graph, disjoint_union, path_graph


def two_variable_system(*rows):
    system = LinearSystem(name='test')
    system.add_variable('x')
    system.add_variable('y')
    for coefficients, rhs in rows:
        system.add_constraint(coefficients, rhs)
    return system


class LinearSystemTests(SimpleTestCase):

    def test_catalog(self):
        system = two_variable_system()
        self.assertEqual(system.add_variable('x'), 0)
        self.assertEqual(system.index('y'), 1)
        with self.assertRaises(UnknownVariable):
            system.index('z')
        with self.assertRaises(UnknownVariable):
            system.add_constraint({'z': 1}, 0)

    def test_repeated_names_accumulate(self):
        system = two_variable_system()
        system.add_constraint({'x': 1, 'y': 0}, 2)
        self.assertEqual(system.rows, [{0: Fraction(1)}])
        self.assertEqual(system.size, (1, 2))

    def test_check(self):
        system = two_variable_system(({'x': 1, 'y': 1}, 1))
        self.assertIsNone(system.check([Fraction(1, 4), Fraction(3, 4)]))
        self.assertIn('negative', system.check([Fraction(2), Fraction(-1)]))
        self.assertIn('constraint 0', system.check([Fraction(1), Fraction(1)]))

    def test_variable_limit(self):
        with override_settings(WL_LIMITS={**settings.WL_LIMITS, 'MAX_LP_VARIABLES': 1}):
            with self.assertRaises(SizeLimitExceeded):
                two_variable_system()


class FeasibleTests(SimpleTestCase):

    def test_feasible_with_witness(self):
        result = feasible(two_variable_system(({'x': 1, 'y': 1}, 1), ({'x': 1, 'y': -1}, 0)))
        self.assertTrue(result.feasible)
        self.assertEqual(result.verdict, 'FEASIBLE')
        self.assertEqual(result.value('x'), Fraction(1, 2))
        self.assertEqual(result.value('y'), Fraction(1, 2))

    def test_infeasible_in_presolve(self):
        result = feasible(two_variable_system(({'x': 1, 'y': 1}, -1)))
        self.assertFalse(result.feasible)
        self.assertIsNone(result.witness)

    def test_infeasible_in_simplex(self):
        result = feasible(two_variable_system(({'x': 1, 'y': 1}, 1), ({'x': 1, 'y': 2}, 3)))
        self.assertEqual(result.verdict, 'INFEASIBLE')
        self.assertGreater(result.pivots, 0)

    def test_parallel_rows(self):
        result = feasible(two_variable_system(({'x': 1, 'y': 1}, 1), ({'x': 2, 'y': 2}, 3)))
        self.assertFalse(result.feasible)
        self.assertEqual(result.pivots, 0)

        result = feasible(two_variable_system(({'x': 1, 'y': 3}, 2), ({'x': -2, 'y': -6}, -4)))
        self.assertTrue(result.feasible)
        self.assertEqual(result.value('x') + 3 * result.value('y'), 2)

    def test_zero_rows_force_zero(self):
        result = feasible(two_variable_system(({'x': 1, 'y': 2}, 0), ({'x': 1}, 0)))
        self.assertTrue(result.feasible)
        self.assertEqual(result.witness, {'x': 0, 'y': 0})

    def test_free_variables_may_go_negative(self):
        system = LinearSystem(name='free')
        system.add_variable('x', nonnegative=False)
        system.add_variable('y')
        system.add_constraint({'x': 1, 'y': 1}, -2)
        system.add_constraint({'y': 1}, 1)
        result = feasible(system)
        self.assertTrue(result.feasible)
        self.assertEqual(result.value('x'), -3)

    def test_free_variable_in_simplex(self):
        system = LinearSystem(name='free')
        system.add_variable('x', nonnegative=False)
        system.add_variable('y')
        system.add_variable('z')
        system.add_constraint({'x': 1, 'y': 1, 'z': 1}, -2)
        system.add_constraint({'y': 1, 'z': -1}, 0)
        result = feasible(system)
        self.assertTrue(result.feasible)
        self.assertIsNone(system.check([result.value(name) for name in system.names]))

    def test_empty_system(self):
        self.assertTrue(feasible(LinearSystem()).feasible)

    def test_bland_rule_from_the_first_pivot(self):
        system = build_doubly_stochastic_commutant(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)))
        with mock.patch('feasibility.simplex.DEGENERATE_PIVOT_LIMIT', 0):
            result = feasible(system)
        self.assertTrue(result.feasible)
        self.assertIsNone(system.check([result.value(name) for name in system.names]))

    def test_homogeneous_rows_need_no_artificials(self):
        system = LinearSystem(name='homogeneous')
        for name in 'abc':
            system.add_variable(name)
        system.add_constraint({'a': 1, 'b': -1}, 0)
        system.add_constraint({'b': 1, 'c': -1}, 0)
        system.add_constraint({'a': 1, 'c': -1}, 0)
        result = feasible(system)
        self.assertTrue(result.feasible)
        self.assertEqual(result.witness, {'a': 0, 'b': 0, 'c': 0})

    def test_path_is_not_an_edge_plus_vertex(self):
        system = build_doubly_stochastic_commutant(path_graph(3), disjoint_union(path_graph(2), path_graph(1)))
        self.assertFalse(feasible(system).feasible)


class SymmetryQuotientTests(SimpleTestCase):

    def swap_invariant_system(self):
        system = LinearSystem(name='swap')
        for name in ('x', 'y', 'z'):
            system.add_variable(name)
        system.add_constraint({'x': 1, 'y': 1, 'z': 1}, 3)
        system.add_constraint({'x': 2, 'y': 2, 'z': -1}, 1)
        return system

    def test_quotient_merges_orbits(self):
        system = self.swap_invariant_system()
        reduced = quotient(system, lambda name: 'xy' if name in 'xy' else name)
        self.assertEqual(reduced.size, (2, 2))
        self.assertEqual(reduced.rows[0], {0: 2, 1: 1})
        self.assertEqual(reduced.rows[1], {0: 4, 1: -1})

    def test_lifted_witness_is_constant_on_orbits(self):
        system = self.swap_invariant_system()
        result = feasible_up_to_symmetry(system, lambda name: 'xy' if name in 'xy' else name)
        self.assertTrue(result.feasible)
        self.assertEqual(result.witness, {'x': Fraction(2, 3), 'y': Fraction(2, 3), 'z': Fraction(5, 3)})

    def test_infeasible_quotient(self):
        system = self.swap_invariant_system()
        system.add_constraint({'z': 1}, 4)
        self.assertFalse(feasible_up_to_symmetry(system, lambda name: 'xy' if name in 'xy' else name).feasible)
