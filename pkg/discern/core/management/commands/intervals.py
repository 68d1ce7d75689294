from discern.core.management.base import DiscernCommand
from discern.discrimination.optimum import fidelity, saturation_interval, sector_intervals


class Command(DiscernCommand):
    help = 'Print the prior interval of every sector and their intersection'

    def add_arguments(self, parser):
        self.add_problem_argument(parser)

    def handle(self, *args, **options):
        problem = self.load_problem(options['problem'])
        saturation = saturation_interval(problem)
        self.emit({
            'sectors': [
                {'index': i, 'cos_angle': cos, 'interval': interval.as_list()}
                for i, (cos, interval) in enumerate(zip(problem.cos_angles, sector_intervals(problem)), start=1)
            ],
            'saturation_interval': saturation.as_list() if saturation else None,
            'fidelity': fidelity(problem),
        })
