"""
Search for witness digraphs (property S_k, girth at least l).
"""
from django.conf import settings
from django.core.management.base import CommandError

from tournaments.cli import EXIT_USAGE
from tournaments.management.commands._base import ReportCommand
from tournaments.search import SearchMode, find_digraphs, min_order
from tournaments.serializers import serialize_search_report
from tournaments.utils import write_witnesses


class Command(ReportCommand):
    help = 'Search small digraphs with property S_k and girth at least l'

    def add_command_arguments(self, parser):
        parser.add_argument('-k', dest='k', type=int, required=True)
        parser.add_argument('-l', dest='l', type=int, required=True, help='girth lower bound')
        order = parser.add_mutually_exclusive_group(required=True)
        order.add_argument('--n', dest='n', type=int, help='search this order only')
        order.add_argument('--n-max', dest='n_max', type=int, help='smallest order with a witness, up to this')
        parser.add_argument('--random', action='store_true', help='sample instead of exhaustive search')
        parser.add_argument('--trials', type=int, default=settings.TOURNAMENTS['SEARCH_TRIALS'])
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--p', type=float, default=settings.TOURNAMENTS['ARC_PROBABILITY'])
        parser.add_argument('--limit', type=int, default=None, help='stop after this many witnesses')
        parser.add_argument('--no-prune', dest='prune', action='store_false')
        parser.add_argument('--dedup', action='store_true', help='degree-sequence dedup (heuristic)')
        parser.add_argument('--out-dir', help='write witnesses as witness-<n>-<index>.dg files here')
        parser.add_argument('--save', action='store_true', help='write witnesses to the configured witness directory')

    def compute(self, **options):
        if options['n_max'] is not None:
            if options['random']:
                raise CommandError('--random cannot be combined with --n-max', returncode=EXIT_USAGE)
            report = min_order(options['k'], options['l'], options['n_max'], workers=options['threads'])
        else:
            report = find_digraphs(
                options['n'], options['k'], options['l'],
                limit=options['limit'],
                mode=SearchMode.RANDOM if options['random'] else SearchMode.EXHAUSTIVE,
                seed=options['seed'],
                p=options['p'],
                trials=options['trials'],
                prune=options['prune'],
                dedup=options['dedup'],
                workers=options['threads'],
            )
        payload = serialize_search_report(report)
        directory = options['out_dir'] or (settings.TOURNAMENTS['WITNESS_DIR'] if options['save'] else None)
        if directory:
            payload['files'] = [str(path) for path in write_witnesses(report.witnesses, directory)]
        return payload, bool(report.witnesses)
