from discern.core.management.base import DiscernCommand
from discern.discrimination.regions import census

from .regions import add_angle_arguments


class Command(DiscernCommand):
    help = 'Tabulate the characteristically different cases of a two-sector problem'

    def add_arguments(self, parser):
        add_angle_arguments(parser)

    def handle(self, *args, **options):
        result = census(options['cos2theta1'], options['cos2theta2'])
        self.emit({
            'probe_alpha': result.probe_alpha,
            'counts': result.counts,
            'cases': [
                {
                    'region': case.region,
                    'alpha': case.alpha,
                    'beta': case.beta,
                    'placement': case.placement,
                    'eta': case.eta,
                    'regimes': list(case.regimes),
                    'saturates': case.saturates,
                    'measurement_kind': case.measurement_kind,
                }
                for case in result.cases
            ],
        })
