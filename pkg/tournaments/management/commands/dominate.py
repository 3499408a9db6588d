from tournaments.management.commands._base import ReportCommand
from tournaments.serializers import serialize_certificate, serialize_greedy_steps
from tournaments.tournament import domination_number_exact, greedy_dominating_set


class Command(ReportCommand):
    help = 'Compute a dominating set of a 3-tournament, exactly or greedily'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='tournament text file')
        mode = parser.add_mutually_exclusive_group(required=True)
        mode.add_argument('--exact', action='store_true', help='exact domination number with certificate')
        mode.add_argument('--greedy', action='store_true', help='greedy upper bound with step log')

    def compute(self, **options):
        tournament = self.load_tournament(options['file'])
        if options['exact']:
            return serialize_certificate(domination_number_exact(tournament)), True
        certificate, steps = greedy_dominating_set(tournament)
        payload = serialize_certificate(certificate)
        payload['steps'] = serialize_greedy_steps(steps)
        return payload, True
