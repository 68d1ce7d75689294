from django.conf import settings

from discern.core.exceptions import InvalidParameters
from discern.core.management.base import DiscernCommand
from discern.discrimination.factory import DiscriminationProblemFactory
from discern.discrimination.serializers import problem_to_dict
from discern.simulation.streams import resolve_seed
from discern.utility.faker.helpers import reseed


class Command(DiscernCommand):
    help = 'Generate a random problem file'

    def add_arguments(self, parser):
        parser.add_argument('--k', action='store', dest='k', type=int, required=True, help='Number of sectors')
        parser.add_argument(
            '--seed',
            action='store',
            dest='seed',
            type=int,
            help='A seed value to pass to the factories before generating the problem',
        )
        parser.add_argument(
            '--angles-only',
            action='store_true',
            dest='angles_only',
            help='Write Jordan cosines instead of subspaces',
        )
        self.add_out_argument(parser)

    def handle(self, *args, **options):
        seed = resolve_seed(options['seed'], settings.RANDOM_SEED)
        if options['k'] < 1:
            raise InvalidParameters(f'Number of sectors must be positive, got {options["k"]}')

        self.stderr.write(f'Seeding random numbers with: {seed}')
        reseed(seed)

        problem = DiscriminationProblemFactory(sectors=options['k'], angles_only=options['angles_only'])
        self.emit(problem_to_dict(problem), out=options['out'])
