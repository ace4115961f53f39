"""
List small patterns up to isomorphism
"""
import json

from graphons.serialization import multigraph_to_dict
from harness.enumeration import EnumerationSpec, enumerate_patterns
from utils.commands import DocumentCommand


class Command(DocumentCommand):
    help = 'Enumerate connected multigraphs of bounded treewidth, one per isomorphism class'

    def add_arguments(self, parser):
        parser.add_argument('--tw', type=int, required=True, help='Treewidth bound')
        parser.add_argument('--max-vertices', type=int, required=True)
        parser.add_argument('--simple', action='store_true', help='Simple graphs only')
        parser.add_argument('--max-mult', type=int, default=1, help='Maximum edge multiplicity')
        parser.add_argument('--disconnected', action='store_true', help='Include disconnected patterns')
        parser.add_argument('--json', action='store_true', help='One JSON document per line')

    def run(self, *args, **options):
        spec = EnumerationSpec(
            max_vertices=options['max_vertices'],
            max_edge_multiplicity=options['max_mult'],
            treewidth_bound=options['tw'],
            simple_only=options['simple'],
            connected_only=not options['disconnected'],
        )
        patterns = enumerate_patterns(spec)
        for pattern in patterns:
            if options['json']:
                self.stdout.write(json.dumps(multigraph_to_dict(pattern)))
            else:
                self.stdout.write(str(pattern))
        self.stdout.write(self.style.SUCCESS(f"{len(patterns)} patterns"))
