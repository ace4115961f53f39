"""
Homomorphism densities of patterns and terms in a step graphon
"""
from django.core.management.base import CommandError

from algebra.terms import parse_term
from graphons.models import StoredGraphon
from graphons.operators import hom_density_bruteforce, term_density
from graphons.serialization import parse_as_graphon, parse_multigraph
from utils.commands import DocumentCommand
from utils.rationals import format_rational


class Command(DocumentCommand):
    help = 'Print t(F, W) for a multigraph document or a term s-expression'

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--pattern', help='Multigraph JSON document')
        source.add_argument('--term', help='Term s-expression, e.g. "(comp (N 1 1) (one 1))"')
        parser.add_argument('graphon', nargs='?', help='Graph or step graphon JSON document')
        parser.add_argument('--stored', metavar='NAME', help='Use a stored graphon instead of a document')

    def load_graphon(self, options):
        if bool(options['graphon']) == bool(options['stored']):
            raise CommandError('Give either a graphon document or --stored NAME')
        if options['stored']:
            try:
                return StoredGraphon.objects.get(name=options['stored']).to_step_graphon()
            except StoredGraphon.DoesNotExist:
                raise CommandError(f"No stored graphon named {options['stored']!r}") from None
        return parse_as_graphon(self.read_document(options['graphon']))

    def run(self, *args, **options):
        graphon = self.load_graphon(options)
        if options['pattern']:
            pattern = parse_multigraph(self.read_document(options['pattern']))
            value = hom_density_bruteforce(pattern, graphon)
            label = str(pattern)
        elif options['term']:
            term = parse_term(options['term'])
            value = term_density(term, graphon)
            label = options['term']
        else:
            raise CommandError('Give --pattern or --term')
        self.stdout.write(self.style.SUCCESS(f"t({label}) = {format_rational(value)}"))
