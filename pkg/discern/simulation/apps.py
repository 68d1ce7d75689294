from django.apps import AppConfig


class SimulationConfig(AppConfig):
    name = 'discern.simulation'
    label = 'simulation'
