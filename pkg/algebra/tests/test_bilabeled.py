from django.test import SimpleTestCase

from algebra.bilabeled import (
    Adjacency,
    AdjNei,
    BiLabeledGraph,
    Forget,
    Introduce,
    Neighbor,
    NonObliviousSimple,
    One,
    Permutation,
    are_isomorphic,
    canonical_form,
    compose,
    compose_all,
    edge_operator_graph,
    graphs_isomorphic,
    make_generator,
    non_oblivious_simple_family,
    oblivious_family,
    schur,
    simple_family,
    transpose,
)
from algebra.exceptions import ArityMismatch, BadGeneratorIndex, LabelCollision
from graphons.structures import MultiGraph, cycle_graph, path_graph


def labeled_edge():
    return BiLabeledGraph(MultiGraph(2, ((0, 1, 1),)), (0, 1), ())


class BiLabeledGraphTests(SimpleTestCase):

    def test_label_collisions(self):
        with self.assertRaises(LabelCollision):
            BiLabeledGraph(MultiGraph(2), (0, 0), ())
        with self.assertRaises(LabelCollision):
            BiLabeledGraph(MultiGraph(2), (0,), (2,))

    def test_without_unlabeled_isolates_keeps_labels(self):
        graph = BiLabeledGraph(MultiGraph(4, ((1, 3, 1),)), (0,), (3,))
        stripped = graph.without_unlabeled_isolates()
        self.assertEqual(stripped.vertex_count, 3)
        self.assertEqual(stripped.inputs, (0,))
        self.assertEqual(stripped.outputs, (2,))
        self.assertEqual(stripped.graph.edges, ((1, 2, 1),))


class GeneratorTests(SimpleTestCase):

    def test_adjacency(self):
        graph = make_generator(Adjacency(3, 1, 2))
        self.assertEqual(graph.graph.edges, ((0, 1, 1),))
        self.assertEqual(graph.inputs, (0, 1, 2))
        self.assertEqual(graph.outputs, (0, 1, 2))

    def test_neighbor(self):
        graph = make_generator(Neighbor(3, 2))
        self.assertEqual(graph.vertex_count, 4)
        self.assertEqual(graph.inputs, (0, 1, 2))
        self.assertEqual(graph.outputs, (0, 3, 2))
        self.assertEqual(graph.graph.edges, ())

    def test_adj_nei(self):
        graph = make_generator(AdjNei(2, 2, {1}))
        self.assertEqual(graph.vertex_count, 3)
        self.assertEqual(graph.graph.edges, ((0, 2, 1),))
        self.assertEqual(graph.outputs, (0, 2))

    def test_adj_nei_is_neighbor_then_adjacencies(self):
        chain = compose_all([
            Neighbor(3, 2).build(),
            Adjacency(3, 1, 2).build(),
            Adjacency(3, 2, 3).build(),
        ])
        self.assertTrue(are_isomorphic(make_generator(AdjNei(3, 2, {1, 3})), chain))

    def test_introduce_and_forget(self):
        introduce = make_generator(Introduce(3, 2))
        self.assertEqual(Introduce(3, 2).arity, (3, 2))
        self.assertEqual(Forget(3, 2).arity, (2, 3))
        self.assertEqual(introduce.outputs, (0, 2))
        self.assertEqual(transpose(introduce), make_generator(Forget(3, 2)))

    def test_permutation(self):
        graph = make_generator(Permutation(3, (2, 3, 1)))
        self.assertEqual(graph.outputs, (1, 2, 0))
        self.assertTrue(Permutation(2, (1, 2)).is_identity)
        self.assertFalse(Permutation(2, (2, 1)).is_identity)

    def test_one(self):
        graph = make_generator(One(2))
        self.assertEqual((graph.in_arity, graph.out_arity), (2, 0))

    def test_non_oblivious_step_with_adjacency_is_edge_operator(self):
        graph = make_generator(NonObliviousSimple(1, 1, {2}, 2))
        self.assertTrue(are_isomorphic(graph, edge_operator_graph()))

    def test_bad_indices(self):
        for generator in (
            Adjacency(2, 1, 1),
            Adjacency(2, 0, 1),
            Neighbor(2, 3),
            Permutation(3, (1, 1, 2)),
            AdjNei(2, 1, {1}),
            NonObliviousSimple(1, 1, {1}, 2),
        ):
            with self.subTest(generator=generator):
                with self.assertRaises(BadGeneratorIndex):
                    make_generator(generator)

    def test_family_sizes(self):
        self.assertEqual(len(oblivious_family(3)), 6)
        self.assertEqual(len(simple_family(2)), 4)
        self.assertEqual(len(simple_family(3)), 12)

    def test_non_oblivious_family_for_one_slot(self):
        family = non_oblivious_simple_family(1)
        self.assertEqual(len(family), 8)
        forms = {canonical_form(make_generator(generator)) for generator in family}
        self.assertEqual(len(forms), 4)

    def test_adj_nei_chains_stay_simple(self):
        chain = compose_all([make_generator(AdjNei(2, j, {3 - j})) for j in (1, 2, 1, 2)])
        self.assertTrue(chain.underlying_is_simple)
        twice = compose(make_generator(Adjacency(2, 1, 2)), make_generator(Adjacency(2, 1, 2)))
        self.assertFalse(twice.underlying_is_simple)


class AlgebraTests(SimpleTestCase):

    def test_introduce_then_forget_is_neighbor(self):
        for k, j in ((2, 1), (3, 2)):
            with self.subTest(k=k, j=j):
                glued = compose(Introduce(k, j).build(), Forget(k, j).build())
                self.assertTrue(are_isomorphic(glued, Neighbor(k, j).build()))

    def test_compose_accumulates_multiplicity(self):
        edge = Adjacency(2, 1, 2).build()
        self.assertEqual(compose(edge, edge).graph.edges, ((0, 1, 2),))

    def test_compose_arity_mismatch(self):
        with self.assertRaises(ArityMismatch):
            compose(Introduce(3, 1).build(), Adjacency(3, 1, 2).build())

    def test_schur(self):
        doubled = schur(labeled_edge(), labeled_edge())
        self.assertEqual(doubled.vertex_count, 2)
        self.assertEqual(doubled.graph, cycle_graph(2))
        self.assertEqual(schur(labeled_edge(), One(2).build()), labeled_edge())

    def test_schur_rejects_outputs(self):
        with self.assertRaises(ArityMismatch):
            schur(Adjacency(2, 1, 2).build(), labeled_edge())
        with self.assertRaises(ArityMismatch):
            schur(labeled_edge(), One(3).build())

    def test_transpose_is_involutive(self):
        graph = Neighbor(3, 1).build()
        self.assertEqual(transpose(transpose(graph)), graph)


class IsomorphismTests(SimpleTestCase):

    def test_neighbor_is_symmetric(self):
        graph = Neighbor(2, 1).build()
        self.assertTrue(are_isomorphic(graph, transpose(graph)))

    def test_multiplicity_matters(self):
        double = BiLabeledGraph(cycle_graph(2), (0, 1), ())
        self.assertFalse(are_isomorphic(labeled_edge(), double))

    def test_labels_matter(self):
        path = MultiGraph(3, ((0, 1, 1), (1, 2, 1)))
        end = BiLabeledGraph(path, (0,), ())
        middle = BiLabeledGraph(path, (1,), ())
        self.assertFalse(are_isomorphic(end, middle))
        self.assertTrue(are_isomorphic(end, BiLabeledGraph(path, (2,), ())))

    def test_canonical_form_is_invariant(self):
        first = MultiGraph(4, ((0, 1, 1), (1, 2, 1), (2, 3, 1)))
        second = MultiGraph(4, ((2, 0, 1), (0, 3, 1), (3, 1, 1)))
        self.assertTrue(graphs_isomorphic(first, second))
        self.assertEqual(canonical_form(BiLabeledGraph(first)), canonical_form(BiLabeledGraph(second)))
        self.assertNotEqual(
            canonical_form(BiLabeledGraph(first)),
            canonical_form(BiLabeledGraph(MultiGraph(4, ((0, 1, 1), (0, 2, 1), (0, 3, 1))))),
        )

    def test_graphs_isomorphic(self):
        self.assertTrue(graphs_isomorphic(path_graph(3), MultiGraph(3, ((0, 2), (2, 1)))))
        self.assertFalse(graphs_isomorphic(cycle_graph(6), MultiGraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)))))
