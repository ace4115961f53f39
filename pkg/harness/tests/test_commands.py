import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from graphons.structures import complete_graph, cycle_graph, disjoint_union
from harness.generators import fig1_pair
from harness.models import HarnessRun
from utils.testing import DocumentFilesMixin


def run_command(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class HarnessCommandTests(TestCase):

    def test_curated_colref_suite_is_saved(self):
        output = run_command('harness', '--suite', 'colref', '--pairs', '0')
        self.assertIn('C6-vs-2C3: consistent', output)
        self.assertIn('3 pairs: 3 consistent, 0 violations, 0 inconclusive', output)
        run = HarnessRun.objects.get()
        self.assertEqual((run.status, run.consistent_count), ('completed', 3))

    def test_no_save(self):
        run_command('harness', '--suite', 'kwl', '--pairs', '0', '--no-save')
        self.assertFalse(HarnessRun.objects.exists())

    def test_async_runs_eagerly_in_tests(self):
        output = run_command('harness', '--suite', 'colref', '--pairs', '0', '--async')
        run = HarnessRun.objects.get()
        self.assertIn(f"Queued harness run {run.id}", output)
        self.assertEqual(run.status, 'completed')

    def test_simple_suite_needs_k_two(self):
        with self.assertRaises(CommandError):
            run_command('harness', '--suite', 'simple', '--k', '1', '--pairs', '0')


class CounterexampleCommandTests(TestCase):

    def test_prints_all_verdicts(self):
        output = run_command('counterexample')
        self.assertIn('oblivious 2-WL', output)
        self.assertIn('2/3 vs 4/9', output)
        self.assertIn('All verdicts as expected', output)


class EnumerateCommandTests(TestCase):

    def test_counts(self):
        self.assertIn('3 patterns', run_command('enumerate', '--tw', '1', '--max-vertices', '3', '--simple'))
        self.assertIn('4 patterns', run_command('enumerate', '--tw', '2', '--max-vertices', '3', '--simple'))

    def test_json_lines(self):
        output = run_command('enumerate', '--tw', '1', '--max-vertices', '2', '--max-mult', '2', '--json')
        documents = [json.loads(line) for line in output.splitlines() if line.startswith('{')]
        self.assertEqual(len(documents), 3)
        self.assertIn({'n': 2, 'edges': [[0, 1, 2]]}, documents)

    def test_size_guard(self):
        with self.assertRaises(CommandError):
            run_command('enumerate', '--tw', '1', '--max-vertices', '50')


class DistinguishCommandTests(DocumentFilesMixin, TestCase):

    def test_counterexample(self):
        triangle, constant = fig1_pair()
        first, second = self.write_document('triangle', triangle), self.write_document('constant', constant)
        output = run_command('distinguish', '--k', '2', first, second)
        self.assertIn('2/3 vs 4/9', output)
        output = run_command('distinguish', '--k', '1', first, second)
        self.assertIn('No distinguisher', output)

    def test_graph_documents(self):
        first = self.write_document('hexagon', cycle_graph(6))
        second = self.write_document('triangles', disjoint_union(cycle_graph(3), cycle_graph(3)))
        output = run_command('distinguish', '--k', '3', '--simple', '--max-vertices', '3', first, second)
        self.assertIn(str(complete_graph(3)), output)

    def test_missing_file(self):
        with self.assertRaises(CommandError):
            run_command('distinguish', '--k', '2', str(self.document_dir / 'missing.json'), 'other.json')
