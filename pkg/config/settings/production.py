# Production overrides
import os

from .base import *  # noqa

DEBUG = False
ALLOWED_HOSTS = os.environ.get("ALLOWED_HOSTS", "").split(",")
SECRET_KEY = os.environ["SECRET_KEY"]

# Search chunks go to the Celery workers
MDS_SEARCH_BACKEND = os.environ.get("MDS_SEARCH_BACKEND", "celery")
CELERY_BROKER_URL = os.environ.get("CELERY_BROKER_URL", "redis://redis:6379/0")
CELERY_RESULT_BACKEND = os.environ.get("CELERY_RESULT_BACKEND", "redis://redis:6379/1")

LOGGING["root"]["level"] = os.environ.get("LOG_LEVEL", "INFO")
