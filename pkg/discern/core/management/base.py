import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from discern.core.exceptions import DiscernError, InvalidInput
from discern.core.utils import dump_json, load_json, write_output
from discern.discrimination.forms import problem_from_data
from discern.simulation.streams import resolve_seed

logger = logging.getLogger(__name__)

# Exit codes
VALIDATION_ERROR = 2
INTERNAL_ERROR = 1


class DiscernCommand(BaseCommand):
    """
    Base for every discern command: library errors become CommandErrors
    with the exit code of their kind, results are written as JSON.
    """

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except InvalidInput as error:
            logger.info(f'Rejected input: {error}')
            raise CommandError(f'{type(error).__name__}: {error}', returncode=VALIDATION_ERROR)
        except DiscernError as error:
            logger.exception(error)
            raise CommandError(f'{type(error).__name__}: {error}', returncode=INTERNAL_ERROR)

    def add_problem_argument(self, parser):
        parser.add_argument(
            '--problem',
            action='store',
            dest='problem',
            required=True,
            help='Path to a JSON problem file',
        )

    def add_seed_argument(self, parser):
        parser.add_argument(
            '--seed',
            action='store',
            dest='seed',
            type=int,
            help='Seed of the random stream, defaults to RANDOM_SEED or a fresh seed',
        )

    def add_out_argument(self, parser, help='Write to this file instead of stdout'):
        parser.add_argument(
            '--out',
            action='store',
            dest='out',
            help=help,
        )

    def load_problem(self, path):
        return problem_from_data(load_json(path), tolerance=settings.GENERAL_POSITION_TOLERANCE)

    def seed(self, options):
        return resolve_seed(options.get('seed'), settings.RANDOM_SEED)

    def emit(self, data, out=None):
        write_output(dump_json(data), path=out, stream=self.stdout)
