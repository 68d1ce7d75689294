from .environment import env
from .base import Base
from .sentry import Sentry
from .testing import Testing
from .development import Development
from .production import Production

# Exported Django Configuration objects
__all__ = [
    'env',
    'Base',
    'Sentry',
    'Testing',
    'Development',
    'Production',
]
