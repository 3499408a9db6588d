from tournaments.construct import build_td
from tournaments.management.commands._base import ReportCommand
from tournaments.utils import format_tournament, write_tournament


class Command(ReportCommand):
    help = 'Build the 3-tournament T_D from a digraph of girth at least 4'
    output_is_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='digraph text file')

    def compute(self, **options):
        tournament = build_td(self.load_digraph(options['file']), workers=options['threads'])
        if not options['output']:
            self.emit_text(format_tournament(tournament), options)
            return None, True
        path = write_tournament(tournament, options['output'])
        return {'n': tournament.n, 'triples': tournament.triple_count, 'output': str(path)}, True
