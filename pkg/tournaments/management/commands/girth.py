from tournaments.digraph import girth
from tournaments.management.commands._base import ReportCommand
from tournaments.serializers import serialize_girth


class Command(ReportCommand):
    help = 'Report the girth (shortest directed cycle) of a digraph file'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='digraph text file')

    def compute(self, **options):
        return serialize_girth(girth(self.load_digraph(options['file']))), True
