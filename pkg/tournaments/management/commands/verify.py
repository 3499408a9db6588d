from tournaments.construct import verify_main_theorem
from tournaments.management.commands._base import ReportCommand
from tournaments.serializers import serialize_theorem_report


class Command(ReportCommand):
    help = 'Verify the domination and pair-tail claims for T_D of a digraph'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='digraph text file (girth at least 4)')
        parser.add_argument('-k', dest='k', type=int, required=True, help='S_k premise to test')

    def compute(self, **options):
        digraph = self.load_digraph(options['file'])
        report = verify_main_theorem(digraph, options['k'], workers=options['threads'])
        return serialize_theorem_report(report), report.passed
