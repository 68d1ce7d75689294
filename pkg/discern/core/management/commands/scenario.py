from dataclasses import asdict

from discern.core.management.base import DiscernCommand
from discern.simulation.scenarios import EAVESDROPPERS, scenario_black_box, scenario_key_sharing

KEY_SHARING = 'key-sharing'
BLACK_BOX = 'black-box'


class Command(DiscernCommand):
    help = 'Run the key sharing or the black box scenario of the four-dimensional example'

    def add_arguments(self, parser):
        parser.add_argument('scenario', choices=[KEY_SHARING, BLACK_BOX])
        parser.add_argument('--rounds', action='store', dest='rounds', type=int, default=10000)
        parser.add_argument('--trials', action='store', dest='trials', type=int, default=10000)
        self.add_seed_argument(parser)
        parser.add_argument(
            '--eve',
            action='store',
            dest='eve',
            nargs='?',
            const='intercept-resend',
            choices=sorted(EAVESDROPPERS),
            help='Put an eavesdropper on the key sharing channel',
        )
        parser.add_argument(
            '--include-trials',
            action='store_true',
            dest='include_trials',
            help='List every black box trial in the report',
        )

    def handle(self, *args, **options):
        seed = self.seed(options)
        if options['scenario'] == KEY_SHARING:
            report = scenario_key_sharing(options['rounds'], seed, eve=options['eve'])
        else:
            report = scenario_black_box(options['trials'], seed, include_trials=options['include_trials'])
        self.emit(asdict(report))
