from tournaments.digraph import AuditStatus, girth_bound_audit
from tournaments.management.commands._base import ReportCommand
from tournaments.serializers import serialize_audit


class Command(ReportCommand):
    help = 'Audit girth <= 2*ceil(log2 log2 n) for a digraph with property S_2'

    def add_command_arguments(self, parser):
        parser.add_argument('file', help='digraph text file')

    def compute(self, **options):
        audit = girth_bound_audit(self.load_digraph(options['file']))
        return serialize_audit(audit), audit.status is not AuditStatus.FAIL
