from tournaments.digraph import has_sk
from tournaments.management.commands._base import ReportCommand
from tournaments.serializers import serialize_sk_report


class Command(ReportCommand):
    help = 'Check property S_k: every k-set is dominated by an outside vertex'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='digraph text file')
        parser.add_argument('-k', dest='k', type=int, required=True, help='set size')
        parser.add_argument('--record', action='store_true', help='include one dominator per k-set')

    def compute(self, **options):
        digraph = self.load_digraph(options['file'])
        report = has_sk(digraph, options['k'], record=options['record'], workers=options['threads'])
        return serialize_sk_report(report), report.holds
