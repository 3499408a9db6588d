from django.conf import settings

from tournaments.management.commands._base import ReportCommand
from tournaments.search import orientation_census


class Command(ReportCommand):
    help = 'Count the orientations of K_n that have property S_k'

    def add_command_arguments(self, parser):
        parser.add_argument('-n', dest='n', type=int, required=True, help='number of vertices')
        parser.add_argument('-k', dest='k', type=int, required=True, help='set size')
        parser.add_argument(
            '--max-order', type=int, default=settings.TOURNAMENTS['MAX_ORIENTATION_ORDER'],
            help='refuse to stream orientations of larger K_n',
        )

    def compute(self, **options):
        census = orientation_census(options['n'], options['k'], max_order=options['max_order'])
        return {'n': options['n'], 'k': options['k'], **census}, True
