from tournaments.management.commands._base import ReportCommand
from tournaments.serializers import serialize_pair_tail
from tournaments.tournament import pair_tail_property, shared_tail_profile


class Command(ReportCommand):
    help = 'Check that every four vertices induce two triples with the same tail'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='tournament text file')
        parser.add_argument('--profile', action='store_true', help='also report the shared-tail profile')

    def compute(self, **options):
        tournament = self.load_tournament(options['file'])
        report = pair_tail_property(tournament)
        payload = serialize_pair_tail(report)
        if options['profile']:
            profile = shared_tail_profile(tournament)
            payload['profile'] = {
                'minimum': profile.minimum,
                'histogram': {str(key): count for key, count in profile.histogram.items()},
            }
        return payload, report.holds
