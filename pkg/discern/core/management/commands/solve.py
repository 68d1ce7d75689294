from discern.core.management.base import DiscernCommand
from discern.discrimination.povm import solve
from discern.discrimination.serializers import solution_to_dict


class Command(DiscernCommand):
    help = 'Solve a problem file at a prior eta and write the optimal measurement as JSON'

    def add_arguments(self, parser):
        self.add_problem_argument(parser)
        parser.add_argument(
            '--eta',
            action='store',
            dest='eta',
            type=float,
            required=True,
            help='Prior probability of the first hypothesis',
        )
        self.add_out_argument(parser)

    def handle(self, *args, **options):
        problem = self.load_problem(options['problem'])
        self.emit(solution_to_dict(solve(problem, options['eta'])), out=options['out'])
