from tournaments.management.commands._base import ReportCommand
from tournaments.tournament import random_tournament3
from tournaments.utils import format_tournament, write_tournament


class Command(ReportCommand):
    help = 'Generate a seeded random 3-tournament'
    output_is_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('-n', dest='n', type=int, required=True, help='number of vertices')
        parser.add_argument('--seed', type=int, default=0)

    def compute(self, **options):
        tournament = random_tournament3(options['n'], options['seed'])
        if not options['output']:
            self.emit_text(format_tournament(tournament), options)
            return None, True
        path = write_tournament(tournament, options['output'])
        return {'n': tournament.n, 'seed': options['seed'], 'output': str(path)}, True
