from tournaments.construct import ordering_experiment
from tournaments.management.commands._base import ReportCommand


class Command(ReportCommand):
    help = 'Domination numbers of T_D under random vertex orderings'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='digraph text file (girth at least 4)')
        parser.add_argument('--trials', type=int, default=20)
        parser.add_argument('--seed', type=int, default=0)

    def compute(self, **options):
        values = ordering_experiment(self.load_digraph(options['file']), options['trials'], options['seed'])
        payload = {
            'trials': options['trials'],
            'seed': options['seed'],
            'domination_numbers': {str(value): count for value, count in values.items()},
        }
        return payload, True
