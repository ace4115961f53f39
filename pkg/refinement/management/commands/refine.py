"""
Run a refinement algorithm on one graph or step graphon
"""
from graphons.serialization import parse_as_graphon
from refinement.refinement import GRAPHON_MODE, MODES, Algorithm, refine
from utils.commands import DocumentCommand
from utils.rationals import format_rational


def algorithm_from_options(options) -> Algorithm:
    name = options['algo']
    if name == 'colref':
        return Algorithm('colref')
    if name == 'simple':
        return Algorithm('simple', options['k'])
    return Algorithm('owl', options['k'], options['mode'])


def add_algorithm_arguments(parser):
    parser.add_argument('--algo', choices=['colref', 'owl', 'simple'], default='colref', help='Refinement algorithm')
    parser.add_argument('--k', type=int, default=1, help='Tuple length for owl and simple')
    parser.add_argument('--mode', choices=MODES, default=GRAPHON_MODE, help='Initial coloring of oblivious k-WL')


class Command(DocumentCommand):
    help = 'Refine a graph or step graphon and print per-round class counts and the fingerprint digest'

    def add_arguments(self, parser):
        add_algorithm_arguments(parser)
        parser.add_argument('file', help='Graph or step graphon JSON document')
        parser.add_argument('--classes', action='store_true', help='Print the stable classes with their masses')

    def run(self, *args, **options):
        algorithm = algorithm_from_options(options)
        graphon = parse_as_graphon(self.read_document(options['file']))
        coloring, fingerprint = refine(graphon, algorithm)

        self.stdout.write(self.style.HTTP_INFO(f"{algorithm} on {graphon.n} steps"))
        for index in range(len(coloring.rounds)):
            self.stdout.write(f"round {index}: {coloring.class_count(index)} classes")
        status = 'stabilized' if coloring.stabilized else 'not stabilized'
        self.stdout.write(self.style.SUCCESS(f"{status}, fingerprint {fingerprint.digest()}"))

        if options['classes']:
            for color, mass in fingerprint.terminal:
                self.stdout.write(f"  color {color}: mass {format_rational(mass)}")
