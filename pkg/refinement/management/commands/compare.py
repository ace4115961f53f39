"""
Compare two graphs or step graphons under a refinement algorithm
"""
from graphons.serialization import parse_as_graphon
from refinement.refinement import compare
from utils.commands import DocumentCommand
from .refine import add_algorithm_arguments, algorithm_from_options


class Command(DocumentCommand):
    help = 'Print EQUAL or DIFFER for two objects, plus the first differing round'

    def add_arguments(self, parser):
        add_algorithm_arguments(parser)
        parser.add_argument('first', help='Graph or step graphon JSON document')
        parser.add_argument('second', help='Graph or step graphon JSON document')
        parser.add_argument('--fixpoint', action='store_true', help='Keep refining after the first difference')

    def run(self, *args, **options):
        algorithm = algorithm_from_options(options)
        first = parse_as_graphon(self.read_document(options['first']))
        second = parse_as_graphon(self.read_document(options['second']))
        comparison = compare(first, second, algorithm, run_to_fixpoint=options['fixpoint'])

        if comparison.equal:
            self.stdout.write(self.style.SUCCESS(f"EQUAL under {algorithm}"))
        else:
            self.stdout.write(self.style.WARNING(
                f"DIFFER under {algorithm} (first differing round {comparison.first_difference})"
            ))
