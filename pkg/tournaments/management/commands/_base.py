"""
Shared behaviour for the toolkit's management commands.
"""
import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from tournaments.cli import EXIT_FAILED, EXIT_USAGE
from tournaments.exceptions import ConstructionError, TournamentsError
from tournaments.utils import dump_report, read_digraph, read_tournament

VERBOSITY_LEVELS = {0: logging.ERROR, 2: logging.INFO, 3: logging.DEBUG}


class ReportCommand(BaseCommand):
    """
    A command that computes one report and prints it as JSON.

    Subclasses implement ``compute(**options)`` returning ``(payload, verdict)``;
    a false verdict ends the command with exit status 1 after the report is out.
    A ConstructionError is a bug in the toolkit, not bad input, and propagates.
    """
    requires_system_checks = []
    requires_migrations_checks = False
    # Commands writing an artifact file treat -o as the artifact path.
    output_is_artifact = False

    def add_arguments(self, parser):
        parser.add_argument('-o', '--output', help='write the result to this file instead of standard output')
        parser.add_argument('--quiet', action='store_true', help='print nothing; only the exit code reports')
        parser.add_argument(
            '--threads', type=int, default=settings.TOURNAMENTS['THREADS'],
            help='worker processes for parallel operations (output does not depend on it)',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def compute(self, **options):
        raise NotImplementedError('subclasses of ReportCommand must provide compute()')

    def handle(self, *args, **options):
        self.configure_logging(options)
        if options['threads'] < 1:
            raise CommandError('--threads must be at least 1', returncode=EXIT_USAGE)
        try:
            payload, verdict = self.compute(**options)
        except ConstructionError:
            raise
        except (TournamentsError, OSError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        if payload is not None:
            self.emit(payload, options)
        if not verdict:
            raise SystemExit(EXIT_FAILED)

    def configure_logging(self, options):
        logger = logging.getLogger('tournaments')
        if options['quiet']:
            logger.setLevel(logging.ERROR)
        elif options['verbosity'] in VERBOSITY_LEVELS:
            logger.setLevel(VERBOSITY_LEVELS[options['verbosity']])

    def emit(self, payload, options):
        text = dump_report(payload)
        if options['output'] and not self.output_is_artifact:
            Path(options['output']).write_text(text)
        elif not options['quiet']:
            self.stdout.write(text, ending='')

    def emit_text(self, text, options):
        """Print an artifact's text form when no -o path was given."""
        if not options['quiet']:
            self.stdout.write(text, ending='')

    def load_digraph(self, path):
        return read_digraph(path)

    def load_tournament(self, path):
        return read_tournament(path)
