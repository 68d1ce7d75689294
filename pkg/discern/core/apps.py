from django.apps import AppConfig


class CoreConfig(AppConfig):
    name = 'discern.core'
    label = 'core'
