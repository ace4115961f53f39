from unittest import mock

from django.contrib.auth import get_user_model
from django.test import TestCase

from graphons.exceptions import SizeLimitExceeded
from harness.generators import curated_graph_pairs, pairs_for_suite, regenerate_pair
from harness.models import HarnessRun, PairReport
from harness.suites import CONSISTENT, INCONCLUSIVE_BUDGET, THEOREM_VIOLATION, EquivalenceReport
from harness.tasks import run_harness


def sample_reports():
    return [
        EquivalenceReport('a', 'colref', 1, {'fingerprint_equal': True, 'first_difference': None}),
        EquivalenceReport('b', 'colref', 1, {'fingerprint_equal': False, 'first_difference': 1},
                          classification=INCONCLUSIVE_BUDGET, details='budget'),
        EquivalenceReport('c', 'colref', 1, {'fingerprint_equal': True}, classification=THEOREM_VIOLATION,
                          findings=['one', 'two']),
    ]


class HarnessRunModelTests(TestCase):

    def setUp(self):
        self.user = get_user_model().objects.create_user(username='tester', password='secret')
        self.run = HarnessRun.objects.create(suite='colref', k=1, seed=3, pair_count=0, requested_by=self.user)

    def test_defaults(self):
        self.assertEqual(self.run.status, 'pending')
        self.assertFalse(self.run.has_violations)
        self.assertEqual(str(self.run), 'colref k=1 seed=3 (pending)')
        self.assertEqual(self.user.harness_runs.count(), 1)

    def test_record(self):
        self.run.record(sample_reports())
        self.run.refresh_from_db()
        self.assertEqual(self.run.status, 'completed')
        self.assertEqual(
            (self.run.consistent_count, self.run.inconclusive_count, self.run.violation_count, self.run.finding_count),
            (1, 1, 1, 2),
        )
        self.assertTrue(self.run.has_violations)
        self.assertIsNotNone(self.run.completed_at)

        reports = list(self.run.reports.all())
        self.assertEqual([r.pair_id for r in reports], ['a', 'b', 'c'])
        self.assertEqual(reports[1].first_difference, 1)
        self.assertFalse(reports[1].fingerprint_equal)
        self.assertEqual(reports[2].findings, ['one', 'two'])
        self.assertEqual(str(reports[0]), f"a: {CONSISTENT}")

    def test_mark_running_and_failed(self):
        self.run.mark_running()
        self.assertEqual(HarnessRun.objects.get(id=self.run.id).status, 'running')
        self.run.mark_failed('SIZE_LIMIT_EXCEEDED: too big')
        stored = HarnessRun.objects.get(id=self.run.id)
        self.assertEqual(stored.status, 'failed')
        self.assertEqual(stored.error_message, 'SIZE_LIMIT_EXCEEDED: too big')

    def test_reports_go_with_the_run(self):
        self.run.record(sample_reports())
        self.run.delete()
        self.assertEqual(PairReport.objects.count(), 0)


class RunHarnessTaskTests(TestCase):

    def test_curated_colref_run(self):
        run = HarnessRun.objects.create(suite='colref', k=1, seed=0, pair_count=0)
        self.assertEqual(run_harness(run.id), 'completed')
        run.refresh_from_db()
        self.assertEqual(run.consistent_count, 3)
        self.assertEqual(run.reports.count(), 3)
        self.assertIsNotNone(run.started_at)

    def test_missing_run(self):
        self.assertIsNone(run_harness(12345))

    def test_domain_errors_fail_the_run(self):
        run = HarnessRun.objects.create(suite='colref', k=1, seed=0, pair_count=0)
        with mock.patch('harness.tasks.run_suite', side_effect=SizeLimitExceeded('too big')):
            self.assertEqual(run_harness(run.id), 'failed')
        run.refresh_from_db()
        self.assertEqual(run.error_message, 'SIZE_LIMIT_EXCEEDED: too big')
        self.assertEqual(run.reports.count(), 0)

    def test_reports_store_the_pair_seed(self):
        run = HarnessRun.objects.create(suite='colref', k=1, seed=11, pair_count=3)
        self.assertEqual(run_harness(run.id), 'completed')
        pairs = pairs_for_suite('colref', 3, 11)
        generated = {pair_id: (first, second) for pair_id, first, second in pairs.graph_pairs}

        curated, random_reports = [], []
        for report in run.reports.all():
            (curated if report.seed is None else random_reports).append(report)
        self.assertEqual(sorted(r.pair_id for r in curated), sorted(pair_id for pair_id, _, _ in curated_graph_pairs()))
        self.assertEqual(len(random_reports), 3)
        for report in random_reports:
            with self.subTest(pair_id=report.pair_id):
                self.assertEqual(report.seed, pairs.seeds[report.pair_id])
                pair_id, first, second = regenerate_pair(run.suite, report.pair_id, report.seed)
                self.assertEqual(pair_id, report.pair_id)
                self.assertEqual((first, second), generated[report.pair_id])
