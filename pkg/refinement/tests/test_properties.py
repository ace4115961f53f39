import random
from fractions import Fraction

from django.test import SimpleTestCase

from algebra.bilabeled import Neighbor, edge_operator_graph, make_generator, oblivious_family, simple_family
from graphons.operators import KTensor, apply_operator, inner_product
from graphons.structures import graph_to_step_graphon, permute_graphon
from harness.generators import random_graph_pairs, random_step_graphon
from refinement.refinement import GRAPH_MODE, Algorithm, compare, condexp, refine, stable_partition

ALGORITHMS = (Algorithm('colref'), Algorithm('owl', 2), Algorithm('simple', 2))


def family_for(algorithm):
    if algorithm.name == 'colref':
        return [edge_operator_graph(), make_generator(Neighbor(1, 1))]
    if algorithm.name == 'owl':
        return [make_generator(g) for g in oblivious_family(algorithm.k)]
    return [make_generator(g) for g in simple_family(algorithm.k)]


def refines(finer, coarser):
    block_of = {x: index for index, block in enumerate(coarser) for x in block}
    return all(len({block_of[x] for x in block}) == 1 for block in finer)


def is_measurable(f, partition):
    return all(len({f[x] for x in block}) == 1 for block in partition)


def random_function(rng, k, n):
    return KTensor.from_function(k, n, lambda x: Fraction(rng.randint(-5, 5), rng.randint(1, 4)))


class RefinementPropertyTests(SimpleTestCase):

    def setUp(self):
        rng = random.Random(41)
        self.graphons = [random_step_graphon(rng, n) for n in (1, 2, 2, 3, 3, 3, 4, 4)]

    def test_rounds_refine_each_other(self):
        for algorithm in ALGORITHMS:
            for index, W in enumerate(self.graphons):
                with self.subTest(algorithm=str(algorithm), graphon=index):
                    coloring, _ = refine(W, algorithm)
                    self.assertTrue(coloring.stabilized)
                    for r in range(len(coloring.rounds) - 1):
                        self.assertTrue(refines(coloring.partition(r + 1), coloring.partition(r)))
                    self.assertEqual(len(coloring.partition(-1)), len(coloring.partition(-2)))

    def test_relabeling_does_not_change_the_verdict(self):
        rng = random.Random(42)
        for algorithm in ALGORITHMS:
            for index, W in enumerate(self.graphons):
                permutation = list(range(W.n))
                rng.shuffle(permutation)
                with self.subTest(algorithm=str(algorithm), graphon=index, permutation=permutation):
                    comparison = compare(W, permute_graphon(W, permutation), algorithm, run_to_fixpoint=True)
                    self.assertTrue(comparison.equal)
                    self.assertIsNone(comparison.first_difference)

    def test_family_operators_preserve_measurability(self):
        rng = random.Random(43)
        for algorithm in ALGORITHMS:
            family = family_for(algorithm)
            for index, W in enumerate(self.graphons):
                coloring, _ = refine(W, algorithm)
                partition = stable_partition(coloring)
                f = condexp(partition, random_function(rng, coloring.k, W.n), W)
                for graph in family:
                    with self.subTest(algorithm=str(algorithm), graphon=index, operator=str(graph)):
                        self.assertTrue(is_measurable(apply_operator(graph, W, f), partition))

    def test_condexp_is_an_orthogonal_projection(self):
        rng = random.Random(44)
        for algorithm in ALGORITHMS:
            for index, W in enumerate(self.graphons):
                coloring, _ = refine(W, algorithm)
                f, g = random_function(rng, coloring.k, W.n), random_function(rng, coloring.k, W.n)
                stable = stable_partition(coloring)
                with self.subTest(algorithm=str(algorithm), graphon=index):
                    projected = condexp(stable, f, W)
                    self.assertTrue(is_measurable(projected, stable))
                    self.assertEqual(condexp(stable, projected, W), projected)
                    self.assertEqual(inner_product(projected, g, W), inner_product(f, condexp(stable, g, W), W))
                    self.assertEqual(inner_product(projected, KTensor.ones(coloring.k, W.n), W),
                                     inner_product(f, KTensor.ones(coloring.k, W.n), W))

    def test_coarser_rounds_absorb_finer_ones(self):
        rng = random.Random(45)
        for algorithm in ALGORITHMS:
            for index, W in enumerate(self.graphons):
                coloring, _ = refine(W, algorithm)
                f = random_function(rng, coloring.k, W.n)
                for coarse in range(len(coloring.rounds)):
                    for fine in range(coarse, len(coloring.rounds)):
                        with self.subTest(algorithm=str(algorithm), graphon=index, coarse=coarse, fine=fine):
                            coarser, finer = coloring.partition(coarse), coloring.partition(fine)
                            self.assertEqual(condexp(coarser, condexp(finer, f, W), W), condexp(coarser, f, W))
                            self.assertEqual(condexp(finer, condexp(coarser, f, W), W), condexp(coarser, f, W))


class GraphModeAgreementTests(SimpleTestCase):

    def test_oblivious_pairs_agree_with_color_refinement_on_graphs(self):
        for pair_id, first, second in random_graph_pairs(30, seed=46):
            U, W = graph_to_step_graphon(first), graph_to_step_graphon(second)
            with self.subTest(pair=pair_id):
                self.assertEqual(
                    compare(U, W, Algorithm('owl', 2, GRAPH_MODE)).equal,
                    compare(U, W, Algorithm('colref')).equal,
                )
