import os
import environ

# Numeric defaults mirror discern.core.constants. Security related values
# (the secret key, the sentry dsn) have no default so that a production
# configuration errors out first when they are missing.
env = environ.Env(
    DEBUG=(bool, False),
    DJANGO_LOG_LEVEL=(str, 'INFO'),
    DJANGO_SECRET_KEY=(str, None),
    GENERAL_POSITION_TOLERANCE=(float, 1e-8),
    ORTHONORMALIZE_TOLERANCE=(float, 1e-10),
    RANDOM_SEED=(int, None),
    RELEASE_VERSION=(str, 'Development'),
    SENTRY_DSN=(str, None),
    SENTRY_ENVIRONMENT=(str, None),
    SIMULATION_SHARDS=(int, 1),
)


app = environ.Path(__file__) - 2
root = app - 1

# Read in the environment
if os.path.exists(f'{root}/.env') is True:
    environ.Env.read_env(f'{root}/.env')
