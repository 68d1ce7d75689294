from discern.core.management.base import DiscernCommand
from discern.discrimination.regions import classify


def add_angle_arguments(parser):
    parser.add_argument('--cos2theta1', action='store', dest='cos2theta1', type=float, required=True)
    parser.add_argument('--cos2theta2', action='store', dest='cos2theta2', type=float, required=True)


class Command(DiscernCommand):
    help = 'Classify a weight point (alpha, beta) of a two-sector problem'

    def add_arguments(self, parser):
        add_angle_arguments(parser)
        parser.add_argument('--alpha', action='store', dest='alpha', type=float, required=True)
        parser.add_argument('--beta', action='store', dest='beta', type=float, required=True)

    def handle(self, *args, **options):
        result = classify(options['cos2theta1'], options['cos2theta2'], options['alpha'], options['beta'])
        self.emit({
            'region': result.region,
            'dividers': list(result.dividers),
            'intervals': [interval.as_list() for interval in result.intervals],
            'intersection': result.intersection.as_list() if result.intersection else None,
        })
