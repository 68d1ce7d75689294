from discern.core.constants import CSV_DIVIDER_HEADER
from discern.core.management.base import DiscernCommand
from discern.core.utils import write_csv
from discern.discrimination.regions import divider_curves

from .regions import add_angle_arguments


class Command(DiscernCommand):
    help = 'Export the four region dividers over a grid of alpha as CSV'

    def add_arguments(self, parser):
        add_angle_arguments(parser)
        parser.add_argument('--grid', action='store', dest='grid', type=int, required=True)
        self.add_out_argument(parser, help='CSV file to write, stdout when omitted')

    def handle(self, *args, **options):
        rows = divider_curves(options['cos2theta1'], options['cos2theta2'], options['grid'])
        write_csv(CSV_DIVIDER_HEADER, rows, path=options['out'], stream=self.stdout)
