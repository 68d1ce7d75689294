from django.apps import AppConfig


class DiscriminationConfig(AppConfig):
    name = 'discern.discrimination'
    label = 'discrimination'
