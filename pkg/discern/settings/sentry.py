from .environment import env


class Sentry(object):
    SENTRY_DSN = env('SENTRY_DSN')
    SENTRY_ENVIRONMENT = env('SENTRY_ENVIRONMENT')
    RELEASE_VERSION = env('RELEASE_VERSION')

    @classmethod
    def pre_setup(cls):
        super().pre_setup()

        import sentry_sdk
        from sentry_sdk.integrations.django import DjangoIntegration
        from sentry_sdk.integrations.logging import LoggingIntegration
        sentry_sdk.init(
            dsn=cls.SENTRY_DSN,
            integrations=[DjangoIntegration(), LoggingIntegration()],
            release=cls.RELEASE_VERSION,
            environment=cls.SENTRY_ENVIRONMENT
        )
