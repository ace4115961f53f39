import time
from fractions import Fraction

from django.test import SimpleTestCase, tag

from algebra.bilabeled import Permutation, make_generator
from feasibility.exceptions import UnknownSystem
from feasibility.systems import (
    PartialMap,
    adjacent_transpositions,
    automorphisms,
    build_doubly_stochastic_commutant,
    build_Lk,
    build_markov_commutant,
    check_feasibility,
    commutant_family,
    commutes,
    decide_Lk,
    generating_set,
    is_markov,
    is_partial_isomorphism,
    lk_orbits,
    markov_matrix,
    step_down,
    step_down_hierarchy,
)
from graphons.exceptions import NotSimple, ShapeMismatch
from graphons.matrices import Matrix
from graphons.structures import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph_to_step_graphon,
    path_graph,
)
from feasibility.simplex import feasible
from harness.generators import fig1_pair


def hexagon_and_triangles():
    return cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))


class PartialMapTests(SimpleTestCase):

    def test_pairs_are_sorted_sets(self):
        self.assertEqual(PartialMap(((2, 1), (0, 0), (2, 1))), PartialMap(((0, 0), (2, 1))))
        self.assertEqual(len(PartialMap().extend(1, 1).extend(1, 1)), 1)
        self.assertEqual(str(PartialMap(((0, 1),))), '{0->1}')

    def test_partial_isomorphism(self):
        path, triangle = path_graph(3), complete_graph(3)
        self.assertTrue(is_partial_isomorphism(PartialMap(((0, 0), (1, 1))), path, triangle))
        self.assertFalse(is_partial_isomorphism(PartialMap(((0, 0), (2, 1))), path, triangle))
        self.assertFalse(is_partial_isomorphism(PartialMap(((0, 0), (1, 0))), path, triangle))
        self.assertFalse(is_partial_isomorphism(PartialMap(((0, 0), (0, 1))), path, triangle))


class LkTests(SimpleTestCase):

    def test_variable_catalog(self):
        system = build_Lk(path_graph(2), path_graph(2), 1)
        self.assertEqual(system.size[1], 1 + 4)

    def test_isomorphic_graphs(self):
        _, result = check_feasibility('lk', path_graph(3), path_graph(3), 2)
        self.assertTrue(result.feasible)
        self.assertEqual(result.value(PartialMap()), 1)

    def test_hexagon_and_triangles_at_level_two(self):
        first, second = hexagon_and_triangles()
        started = time.perf_counter()
        system, result = check_feasibility('lk', first, second, 2)
        elapsed = time.perf_counter() - started
        self.assertEqual(system.size[1], 1 + 36 + 630)
        self.assertTrue(result.feasible)
        self.assertEqual(result.value(PartialMap()), 1)
        self.assertLess(elapsed, 120, f"L^2 took {elapsed:.1f}s")

    def test_degree_differences_show_at_level_two(self):
        _, result = check_feasibility('lk', path_graph(3), complete_graph(3), 2)
        self.assertFalse(result.feasible)

    @tag('slow')
    def test_hexagon_and_triangles_at_level_three(self):
        first, second = hexagon_and_triangles()
        _, result = check_feasibility('lk', first, second, 3)
        self.assertFalse(result.feasible)

    def test_needs_simple_graphs(self):
        with self.assertRaises(NotSimple):
            build_Lk(cycle_graph(2), path_graph(2), 1)

    def test_quotient_agrees_with_the_full_system(self):
        for first, second, k in [
            (path_graph(3), path_graph(3), 2),
            (path_graph(3), complete_graph(3), 2),
            (cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)), 1),
            (path_graph(4), disjoint_union(path_graph(2), path_graph(2)), 1),
        ]:
            with self.subTest(first=str(first), second=str(second), k=k):
                system, result = decide_Lk(first, second, k)
                self.assertEqual(result.feasible, feasible(system).feasible)
                if result.feasible:
                    self.assertIsNone(system.check([result.value(name) for name in system.names]))


class SymmetryTests(SimpleTestCase):

    def test_automorphism_counts(self):
        self.assertEqual(len(automorphisms(cycle_graph(6))), 12)
        self.assertEqual(len(automorphisms(disjoint_union(cycle_graph(3), cycle_graph(3)))), 72)
        self.assertEqual(len(automorphisms(path_graph(4))), 2)
        self.assertEqual(len(automorphisms(complete_graph(4))), 24)

    def test_generating_set_closes_to_the_group(self):
        group = automorphisms(complete_graph(4))
        generators = generating_set(group)
        self.assertLess(len(generators), 5)
        closure = {tuple(range(4))}
        frontier = list(closure)
        while frontier:
            found = []
            for element in frontier:
                for generator in generators:
                    product = tuple(generator[i] for i in element)
                    if product not in closure:
                        closure.add(product)
                        found.append(product)
            frontier = found
        self.assertEqual(closure, set(group))

    def test_orbits_of_partial_maps(self):
        first, second = hexagon_and_triangles()
        system = build_Lk(first, second, 2)
        orbits = lk_orbits(first, second, system.names)
        singletons = {orbits[name] for name in system.names if len(name) == 1}
        self.assertEqual(len(singletons), 1)
        self.assertEqual(orbits[PartialMap()], PartialMap())
        adjacent = PartialMap(((0, 0), (1, 1)))
        self.assertEqual(orbits[adjacent], orbits[PartialMap(((2, 3), (3, 4)))])
        self.assertNotEqual(orbits[adjacent], orbits[PartialMap(((0, 0), (2, 1)))])


class DoublyStochasticTests(SimpleTestCase):

    def test_fractional_isomorphism(self):
        first, second = hexagon_and_triangles()
        system, result = check_feasibility('ds', first, second)
        self.assertEqual(system.size, (6 + 6 + 36, 36))
        self.assertTrue(result.feasible)
        for v in range(6):
            self.assertEqual(sum(result.value((v, w)) for w in range(6)), 1)

    def test_different_degrees(self):
        result = check_feasibility('ds', path_graph(3), complete_graph(3))[1]
        self.assertFalse(result.feasible)

    def test_system_shape(self):
        system = build_doubly_stochastic_commutant(path_graph(2), path_graph(2))
        self.assertEqual(system.size, (2 + 2 + 4, 4))


class MarkovTests(SimpleTestCase):

    def test_counterexample_is_colref_equivalent(self):
        triangle, constant = fig1_pair()
        system, result = check_feasibility('markov', triangle, constant, 1)
        self.assertTrue(result.feasible)
        self.assertEqual(system.name, 'markov(colref, k=1)')
        S = markov_matrix(result, triangle, constant, 1)
        self.assertTrue(is_markov(S, triangle, constant, 1))
        self.assertTrue(commutes(S, triangle, constant, commutant_family(1, 'colref')))

    def test_counterexample_is_separated_by_pairs(self):
        triangle, constant = fig1_pair()
        _, result = check_feasibility('markov', triangle, constant, 2, family='oblivious')
        self.assertFalse(result.feasible)

    def test_identity_is_feasible_with_permutations(self):
        triangle = graph_to_step_graphon(complete_graph(3))
        system = build_markov_commutant(triangle, triangle, 2, 'oblivious', perm_invariant=True)
        self.assertEqual(system.size[1], 81)
        identity = Matrix.identity(9)
        self.assertTrue(is_markov(identity, triangle, triangle, 2))
        self.assertIsNone(system.check([identity[x, y] for x, y in system.names]))

    def test_families(self):
        self.assertEqual(len(commutant_family(2, 'oblivious')), 3)
        self.assertEqual(len(commutant_family(2, 'simple')), 4)
        with self.assertRaises(ShapeMismatch):
            commutant_family(2, 'colref')
        with self.assertRaises(UnknownSystem):
            commutant_family(2, 'hyper')

    def test_transpositions(self):
        self.assertEqual(adjacent_transpositions(3), [(2, 1, 3), (1, 3, 2)])
        for pi in adjacent_transpositions(3):
            make_generator(Permutation(3, pi))

    def test_is_markov_rejects(self):
        triangle, constant = fig1_pair()
        self.assertFalse(is_markov(Matrix.identity(2), triangle, constant, 1))
        self.assertFalse(is_markov(Matrix.from_lists([[1, 0, 0], [1, 0, 0], [1, 0, 0]]), triangle, constant, 1))

    def test_unknown_system(self):
        with self.assertRaises(UnknownSystem):
            check_feasibility('sdp', path_graph(2), path_graph(2))


class StepDownTests(SimpleTestCase):

    def test_identity_steps_down_to_identity(self):
        triangle = graph_to_step_graphon(complete_graph(3))
        hierarchy = step_down_hierarchy(Matrix.identity(9), triangle, triangle, 2)
        self.assertEqual([level.shape for level in hierarchy], [(9, 9), (3, 3), (1, 1)])
        self.assertEqual(hierarchy[1], Matrix.identity(3))
        self.assertEqual(hierarchy[2], Matrix.identity(1))

    def test_step_down_stays_markov(self):
        triangle, constant = fig1_pair()
        _, result = check_feasibility('markov', triangle, constant, 1)
        S = markov_matrix(result, triangle, constant, 1)
        lower = step_down(S, triangle, constant, 1)
        self.assertEqual(lower.rows, ((Fraction(1),),))

    def test_shape_checks(self):
        triangle = graph_to_step_graphon(complete_graph(3))
        with self.assertRaises(ShapeMismatch):
            step_down(Matrix.identity(3), triangle, triangle, 2)
        with self.assertRaises(ShapeMismatch):
            step_down(Matrix.identity(1), triangle, triangle, 0)
