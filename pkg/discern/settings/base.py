import logging.config
from . import defaults
from .environment import env


class Base(object):
    SECRET_KEY = env('DJANGO_SECRET_KEY')
    LANGUAGE_CODE = 'en-US'
    TIME_ZONE = 'UTC'
    USE_I18N = False
    USE_TZ = True
    DJANGO_LOG_LEVEL = env('DJANGO_LOG_LEVEL')
    RANDOM_SEED = env('RANDOM_SEED')

    # Numerical tolerances, see discern.core.constants
    ORTHONORMALIZE_TOLERANCE = env('ORTHONORMALIZE_TOLERANCE')
    GENERAL_POSITION_TOLERANCE = env('GENERAL_POSITION_TOLERANCE')

    # Number of counter ranges a simulation run is split into
    SIMULATION_SHARDS = env('SIMULATION_SHARDS')

    INSTALLED_APPS = [
        'discern.core',
        'discern.discrimination',
        'discern.simulation',
    ]

    # Nothing is persisted: every command works from files and arguments
    DATABASES = {}

    # Logging Config
    LOGGING_CONFIG = None
    LOGGING = defaults.LOGGING

    @classmethod
    def post_setup(cls):
        cls.LOGGING['loggers']['discern']['level'] = cls.DJANGO_LOG_LEVEL
        logging.config.dictConfig(cls.LOGGING)
