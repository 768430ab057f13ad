from .base import *  # noqa

DEBUG = True
ALLOWED_HOSTS = ["*"]

# No broker needed on a workstation: chunks run in-process.
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True
