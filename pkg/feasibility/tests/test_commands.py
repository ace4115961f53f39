from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from graphons.structures import cycle_graph, disjoint_union
from harness.generators import fig1_pair
from utils.testing import DocumentFilesMixin


def run_command(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class LpCommandTests(DocumentFilesMixin, SimpleTestCase):

    def setUp(self):
        super().setUp()
        self.cycle = self.write_document('cycle', cycle_graph(6))
        self.triangles = self.write_document('triangles', disjoint_union(cycle_graph(3), cycle_graph(3)))
        triangle, constant = fig1_pair()
        self.triangle = self.write_document('triangle', triangle)
        self.constant = self.write_document('constant', constant)

    def test_doubly_stochastic_with_witness(self):
        output = run_command('lp', '--system', 'ds', '--witness', self.cycle, self.triangles)
        self.assertIn('doubly-stochastic:', output)
        self.assertIn('FEASIBLE', output)
        self.assertIn(' = ', output)

    def test_markov_step_down(self):
        output = run_command('lp', '--system', 'markov', '--step-down', self.triangle, self.constant)
        self.assertIn('markov(colref, k=1)', output)
        self.assertIn('FEASIBLE', output)
        self.assertIn('S_1 (3x3)', output)

    def test_markov_infeasible(self):
        output = run_command('lp', '--system', 'markov', '--k', '2', self.triangle, self.constant)
        self.assertIn('INFEASIBLE', output)

    def test_bad_level(self):
        with self.assertRaises(CommandError):
            run_command('lp', '--system', 'lk', '--k', '0', self.cycle, self.triangles)
