from dataclasses import asdict

from django.conf import settings

from discern.core.management.base import DiscernCommand
from discern.simulation.trials import run_trials


class Command(DiscernCommand):
    help = 'Sample states of a problem file and measure them with the optimal POVM'

    def add_arguments(self, parser):
        self.add_problem_argument(parser)
        parser.add_argument('--eta', action='store', dest='eta', type=float, required=True)
        parser.add_argument('--trials', action='store', dest='trials', type=int, required=True)
        self.add_seed_argument(parser)
        parser.add_argument(
            '--shards',
            action='store',
            dest='shards',
            type=int,
            help='Split the trial range into this many pieces, defaults to SIMULATION_SHARDS',
        )

    def handle(self, *args, **options):
        problem = self.load_problem(options['problem'])
        shards = options['shards'] if options['shards'] is not None else settings.SIMULATION_SHARDS
        stats = run_trials(problem, options['eta'], options['trials'], self.seed(options), shards=shards)
        self.emit(asdict(stats))
