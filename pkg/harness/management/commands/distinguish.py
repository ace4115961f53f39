"""
Search for a small pattern separating two step graphons
"""
from django.conf import settings

from graphons.serialization import parse_as_graphon
from harness.enumeration import EnumerationSpec, enumerate_patterns, search_distinguisher
from utils.commands import DocumentCommand
from utils.rationals import format_rational


class Command(DocumentCommand):
    help = 'Find the first pattern of treewidth at most k-1 whose densities differ'

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True)
        parser.add_argument('--simple', action='store_true', help='Search simple graphs only')
        parser.add_argument('--max-vertices', type=int, help='Pattern budget (vertices)')
        parser.add_argument('--max-mult', type=int, help='Pattern budget (edge multiplicity)')
        parser.add_argument('first')
        parser.add_argument('second')

    def run(self, *args, **options):
        harness = settings.WL_HARNESS
        k = options['k']
        if options['simple']:
            vertices = options['max_vertices'] or harness['SIMPLE_PATTERN_MAX_VERTICES']
            spec = EnumerationSpec(vertices, 1, k - 1, simple_only=True)
        else:
            vertices = options['max_vertices'] or harness['PATTERN_MAX_VERTICES']
            spec = EnumerationSpec(vertices, options['max_mult'] or harness['PATTERN_MAX_MULTIPLICITY'], k - 1)

        first = parse_as_graphon(self.read_document(options['first']))
        second = parse_as_graphon(self.read_document(options['second']))
        found = search_distinguisher(first, second, enumerate_patterns(spec))
        if found is None:
            self.stdout.write(self.style.WARNING(
                f"No distinguisher of treewidth <= {k - 1} with at most {vertices} vertices"
            ))
            return
        self.stdout.write(self.style.SUCCESS(
            f"{found.pattern}: {format_rational(found.first_density)} vs {format_rational(found.second_density)}"
        ))
