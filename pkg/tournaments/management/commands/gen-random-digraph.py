from django.conf import settings

from tournaments.management.commands._base import ReportCommand
from tournaments.search import random_digraph
from tournaments.utils import format_digraph, write_digraph


class Command(ReportCommand):
    help = 'Generate a seeded random digraph, optionally with girth at least l'
    output_is_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('-n', dest='n', type=int, required=True, help='number of vertices')
        parser.add_argument('--p', type=float, default=settings.TOURNAMENTS['ARC_PROBABILITY'])
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('-l', '--min-girth', dest='min_girth', type=int, default=None)
        parser.add_argument(
            '--max-retries', type=int, default=settings.TOURNAMENTS['RANDOM_RETRIES'],
            help='draws before giving up on the girth filter',
        )

    def compute(self, **options):
        digraph = random_digraph(
            options['n'], options['p'], options['seed'],
            min_girth=options['min_girth'], max_retries=options['max_retries'],
        )
        if not options['output']:
            self.emit_text(format_digraph(digraph), options)
            return None, True
        path = write_digraph(digraph, options['output'])
        return {'n': digraph.n, 'seed': options['seed'], 'arcs': digraph.arc_count, 'output': str(path)}, True
