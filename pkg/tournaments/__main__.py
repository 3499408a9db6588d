import sys

from tournaments.cli import run

if __name__ == '__main__':
    sys.exit(run())
