from discern.core.constants import CSV_SWEEP_HEADER
from discern.core.management.base import DiscernCommand
from discern.core.utils import write_csv
from discern.discrimination.optimum import failure_curve


class Command(DiscernCommand):
    help = 'Export the optimal failure probability and the fidelity bound over a grid of priors as CSV'

    def add_arguments(self, parser):
        self.add_problem_argument(parser)
        parser.add_argument('--points', action='store', dest='points', type=int, default=101)
        self.add_out_argument(parser, help='CSV file to write, stdout when omitted')

    def handle(self, *args, **options):
        problem = self.load_problem(options['problem'])
        write_csv(CSV_SWEEP_HEADER, failure_curve(problem, options['points']), path=options['out'], stream=self.stdout)
