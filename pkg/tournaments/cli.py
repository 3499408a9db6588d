"""
One binary, many subcommands: the in-process dispatcher behind
``python -m tournaments``.

Exit codes: 0 success / property holds, 1 property fails or theorem violated,
2 input or usage error.
"""
import os
import sys

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

COMMANDS = (
    'girth',
    'sk',
    'power',
    'build-td',
    'dominate',
    'pair-tail',
    'verify',
    'search',
    'gen-random-tournament',
    'gen-random-digraph',
    'orientation-census',
    'audit-girth-bound',
    'ordering-experiment',
)


def run(argv=None, prog='tournaments') -> int:
    """Dispatch `argv` (without the program name) and return the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')

    import django
    from django.core.management import load_command_class

    django.setup()
    if not argv or argv[0] not in COMMANDS:
        name = argv[0] if argv else ''
        sys.stderr.write(f'{prog}: unknown subcommand {name!r}; choose from {", ".join(COMMANDS)}\n')
        return EXIT_USAGE

    command = load_command_class('tournaments', argv[0])
    try:
        command.run_from_argv([prog, *argv])
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return EXIT_OK
