"""
Reproduce the weighted counterexample to oblivious 2-WL
"""
from django.core.management.base import CommandError

from harness.suites import counterexample_fig1
from utils.commands import DocumentCommand


class Command(DocumentCommand):
    help = 'Uniform K3 against the constant 2/3 graphon: fractionally isomorphic, yet separated by oblivious 2-WL'

    def add_arguments(self, parser):
        parser.add_argument('name', choices=['fig1'], nargs='?', default='fig1')

    def run(self, *args, **options):
        report = counterexample_fig1()
        width = max(len(label) for label, _ in report.rows())
        for label, value in report.rows():
            self.stdout.write(f"{label.ljust(width)}  {value}")
        if not report.matches_expectation:
            raise CommandError('Counterexample verdicts differ from the expected ones')
        self.stdout.write(self.style.SUCCESS('All verdicts as expected'))
