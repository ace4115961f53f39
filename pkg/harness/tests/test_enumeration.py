from fractions import Fraction

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from algebra.bilabeled import graphs_isomorphic
from graphons.exceptions import MalformedDocument, SizeLimitExceeded
from graphons.structures import complete_graph, cycle_graph, disjoint_union, graph_to_step_graphon, path_graph
from harness.enumeration import EnumerationSpec, enumerate_patterns, find_distinguisher, search_distinguisher
from harness.generators import fig1_pair


def contains(patterns, graph):
    return any(graphs_isomorphic(pattern, graph) for pattern in patterns)


class EnumerationTests(SimpleTestCase):

    def test_small_multigraphs(self):
        patterns = enumerate_patterns(EnumerationSpec(2, max_edge_multiplicity=2, treewidth_bound=1))
        self.assertEqual(len(patterns), 3)
        self.assertTrue(contains(patterns, cycle_graph(2)))

    def test_simple_trees(self):
        patterns = enumerate_patterns(EnumerationSpec(3, treewidth_bound=1, simple_only=True))
        self.assertEqual(len(patterns), 3)
        self.assertFalse(contains(patterns, complete_graph(3)))

    def test_treewidth_two_adds_the_triangle(self):
        patterns = enumerate_patterns(EnumerationSpec(3, treewidth_bound=2, simple_only=True))
        self.assertEqual(len(patterns), 4)
        self.assertTrue(graphs_isomorphic(patterns[-1], complete_graph(3)))

    def test_simple_only_ignores_multiplicity(self):
        spec = EnumerationSpec(2, max_edge_multiplicity=3, treewidth_bound=1, simple_only=True)
        self.assertEqual(spec.multiplicity, 1)
        self.assertEqual(len(enumerate_patterns(spec)), 2)

    def test_trees_on_four_vertices(self):
        patterns = enumerate_patterns(EnumerationSpec(4, treewidth_bound=1, simple_only=True))
        self.assertEqual(sum(1 for p in patterns if p.vertex_count == 4), 2)

    def test_disconnected_patterns(self):
        patterns = enumerate_patterns(EnumerationSpec(2, treewidth_bound=1, simple_only=True, connected_only=False))
        self.assertEqual(len(patterns), 3)

    def test_order(self):
        patterns = enumerate_patterns(EnumerationSpec(4, max_edge_multiplicity=2, treewidth_bound=1))
        keys = [(p.vertex_count, p.edge_count) for p in patterns]
        self.assertEqual(keys, sorted(keys))

    def test_bounds(self):
        with self.assertRaises(MalformedDocument):
            EnumerationSpec(3, max_edge_multiplicity=0)
        with override_settings(WL_LIMITS={**settings.WL_LIMITS, 'MAX_PATTERN_VERTICES': 3}):
            with self.assertRaises(SizeLimitExceeded):
                EnumerationSpec(4)


class DistinguisherTests(SimpleTestCase):

    def test_double_edge_separates_the_counterexample(self):
        triangle, constant = fig1_pair()
        spec = EnumerationSpec(4, max_edge_multiplicity=3, treewidth_bound=1)
        found = find_distinguisher(triangle, constant, 2, spec)
        self.assertTrue(graphs_isomorphic(found, cycle_graph(2)))

        details = search_distinguisher(triangle, constant, enumerate_patterns(spec))
        self.assertEqual((details.first_density, details.second_density), (Fraction(2, 3), Fraction(4, 9)))

    def test_nothing_of_treewidth_zero(self):
        triangle, constant = fig1_pair()
        self.assertIsNone(find_distinguisher(triangle, constant, 1, EnumerationSpec(4, treewidth_bound=0)))

    def test_triangle_separates_hexagon_from_triangles(self):
        first = graph_to_step_graphon(cycle_graph(6))
        second = graph_to_step_graphon(disjoint_union(cycle_graph(3), cycle_graph(3)))
        found = find_distinguisher(first, second, 3, EnumerationSpec(3, treewidth_bound=2, simple_only=True))
        self.assertTrue(graphs_isomorphic(found, complete_graph(3)))
        self.assertIsNone(find_distinguisher(first, second, 2, EnumerationSpec(4, treewidth_bound=1, simple_only=True)))

    def test_bound_must_match_k(self):
        triangle, constant = fig1_pair()
        with self.assertRaises(MalformedDocument):
            find_distinguisher(triangle, constant, 3, EnumerationSpec(3, treewidth_bound=1))

    def test_path_is_found_for_different_degrees(self):
        first, second = graph_to_step_graphon(path_graph(3)), graph_to_step_graphon(complete_graph(3))
        found = find_distinguisher(first, second, 2, EnumerationSpec(3, treewidth_bound=1, simple_only=True))
        self.assertTrue(graphs_isomorphic(found, complete_graph(2)))
