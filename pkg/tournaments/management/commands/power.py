from tournaments.digraph import power
from tournaments.management.commands._base import ReportCommand
from tournaments.utils import format_digraph, write_digraph


class Command(ReportCommand):
    help = 'Write the b-th power of a digraph (arcs for paths of length 1..b)'
    output_is_artifact = True

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='digraph text file')
        parser.add_argument('-b', dest='b', type=int, required=True, help='path length bound')

    def compute(self, **options):
        result = power(self.load_digraph(options['file']), options['b'])
        if not options['output']:
            self.emit_text(format_digraph(result), options)
            return None, True
        path = write_digraph(result, options['output'])
        return {'n': result.n, 'b': options['b'], 'arcs': result.arc_count, 'output': str(path)}, True
