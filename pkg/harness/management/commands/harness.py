"""
Run a cross-validation suite over seeded pairs
"""
from django.conf import settings
from django.core.management.base import CommandError

from harness.generators import pairs_for_suite
from harness.models import HarnessRun
from harness.suites import CONSISTENT, INCONCLUSIVE_BUDGET, THEOREM_VIOLATION, SUITES, run_suite
from harness.tasks import run_harness
from utils.commands import DocumentCommand


class Command(DocumentCommand):
    help = 'Cross-validate the equivalent characterizations on random and curated pairs'

    def add_arguments(self, parser):
        parser.add_argument('--suite', choices=SUITES, required=True)
        parser.add_argument('--k', type=int, default=1)
        parser.add_argument('--pairs', type=int, default=settings.WL_HARNESS['DEFAULT_PAIRS'])
        parser.add_argument('--seed', type=int, default=settings.WL_HARNESS['DEFAULT_SEED'])
        parser.add_argument('--no-curated', action='store_true', help='Skip the built-in pairs')
        parser.add_argument('--no-save', action='store_true', help='Do not persist the run')
        parser.add_argument('--async', action='store_true', dest='run_async', help='Queue the run on Celery')

    def run(self, *args, **options):
        suite, k = options['suite'], options['k']
        if suite == 'simple' and k < 2:
            raise CommandError('The simple suite needs --k 2 or more')

        if options['run_async']:
            run = HarnessRun.objects.create(
                suite=suite, k=k, seed=options['seed'], pair_count=options['pairs'],
                include_curated=not options['no_curated'],
            )
            run_harness.delay(run.id)
            self.stdout.write(self.style.SUCCESS(f"Queued harness run {run.id}"))
            return

        self.stdout.write(self.style.HTTP_INFO(
            f"Suite {suite}, k={k}, {options['pairs']} random pairs, seed {options['seed']}"
        ))
        self.stdout.write("=" * 60)
        pairs = pairs_for_suite(suite, options['pairs'], options['seed'], not options['no_curated'])
        reports = run_suite(suite, k, pairs.graph_pairs, pairs.graphon_pairs, pairs.seeds)

        styles = {
            CONSISTENT: self.style.SUCCESS,
            INCONCLUSIVE_BUDGET: self.style.WARNING,
            THEOREM_VIOLATION: self.style.ERROR,
        }
        for report in reports:
            line = f"{report.pair_id}: {report.classification}"
            if report.details:
                line += f" ({report.details})"
            self.stdout.write(styles[report.classification](line))
            for finding in report.findings:
                self.stdout.write(self.style.WARNING(f"  finding: {finding}"))

        if not options['no_save']:
            run = HarnessRun.objects.create(
                suite=suite, k=k, seed=options['seed'], pair_count=options['pairs'],
                include_curated=not options['no_curated'],
            )
            run.record(reports)
            self.stdout.write(f"Saved as run {run.id}")

        violations = [r for r in reports if r.is_violation]
        self.stdout.write("=" * 60)
        self.stdout.write(
            f"{len(reports)} pairs: "
            f"{sum(1 for r in reports if r.classification == CONSISTENT)} consistent, "
            f"{len(violations)} violations, "
            f"{sum(1 for r in reports if r.classification == INCONCLUSIVE_BUDGET)} inconclusive"
        )
        if violations:
            raise CommandError(f"{len(violations)} pairs contradict a proven equivalence")
