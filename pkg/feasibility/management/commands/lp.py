"""
Decide one of the indistinguishability systems exactly
"""
from django.core.management.base import CommandError

from graphons.serialization import parse_as_graphon, parse_multigraph
from utils.commands import DocumentCommand
from utils.rationals import format_rational
from feasibility.systems import MARKOV_FAMILIES, check_feasibility, markov_matrix, step_down_hierarchy


class Command(DocumentCommand):
    help = 'Build L^k, AX = XB or the Markov commutant for two inputs and print FEASIBLE or INFEASIBLE'

    def add_arguments(self, parser):
        parser.add_argument('--system', choices=['lk', 'ds', 'markov'], required=True)
        parser.add_argument('--k', type=int, default=1)
        parser.add_argument('--perm-invariant', action='store_true', help='Markov operator must commute with slot swaps')
        parser.add_argument('--family', choices=MARKOV_FAMILIES, help='Operator family of the Markov commutant')
        parser.add_argument('--witness', action='store_true', help='Print the nonzero witness entries')
        parser.add_argument('--step-down', action='store_true', help='Print the step-down of a Markov witness')
        parser.add_argument('first')
        parser.add_argument('second')

    def run(self, *args, **options):
        kind = options['system']
        k = options['k']
        if k < 1:
            raise CommandError('--k must be at least 1')
        first_text = self.read_document(options['first'])
        second_text = self.read_document(options['second'])
        if kind == 'markov':
            first, second = parse_as_graphon(first_text), parse_as_graphon(second_text)
        else:
            first, second = parse_multigraph(first_text), parse_multigraph(second_text)

        system, result = check_feasibility(kind, first, second, k, options['perm_invariant'], options['family'])
        rows, columns = system.size
        self.stdout.write(self.style.HTTP_INFO(f"{system.name}: {rows} constraints, {columns} variables"))
        if result.feasible:
            self.stdout.write(self.style.SUCCESS(f"FEASIBLE ({result.pivots} pivots)"))
        else:
            self.stdout.write(self.style.WARNING(f"INFEASIBLE ({result.pivots} pivots)"))
            return

        if options['witness']:
            for name, value in result.witness.items():
                if value:
                    self.stdout.write(f"  {name} = {format_rational(value)}")

        if options['step_down'] and kind == 'markov':
            S = markov_matrix(result, first, second, k)
            for level, matrix in enumerate(step_down_hierarchy(S, first, second, k)):
                self.stdout.write(self.style.HTTP_INFO(f"S_{k - level} ({matrix.shape[0]}x{matrix.shape[1]})"))
                for row in matrix.rows:
                    self.stdout.write('  ' + ' '.join(format_rational(v) for v in row))
