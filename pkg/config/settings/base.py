"""
Base settings. Intended to be imported by local.py and production.py.
"""
import os
from pathlib import Path

from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent.parent
load_dotenv(BASE_DIR / ".env")  # reads .env at project root

ENV = os.environ.get("DJANGO_ENV", "local")


def env_bool(name: str, default: bool) -> bool:
    return os.environ.get(name, str(default)).lower() in ("1", "true", "yes")


SECRET_KEY = os.environ.get("SECRET_KEY", "replace-me-for-dev-only")
DEBUG = env_bool("DEBUG", False)

ALLOWED_HOSTS = os.environ.get("ALLOWED_HOSTS", "localhost,127.0.0.1").split(",")

INSTALLED_APPS = [
    # Django
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "django.contrib.staticfiles",

    # Third-party
    "rest_framework",
    "drf_spectacular",

    # Local apps
    "apps.exact_math.apps.ExactMathConfig",
    "apps.polytopes.apps.PolytopesConfig",
    "apps.mds_checker.apps.MdsCheckerConfig",
    "apps.wps.apps.WpsConfig",
    "apps.derivative_oracle.apps.DerivativeOracleConfig",
    "apps.cli.apps.CliConfig",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "config.urls"

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {"context_processors": ["django.template.context_processors.request"]},
    },
]

WSGI_APPLICATION = "config.wsgi.application"
ASGI_APPLICATION = "config.asgi.application"

# Nothing is persisted; the entry only satisfies Django's startup checks.
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}

LANGUAGE_CODE = "en-us"
TIME_ZONE = os.environ.get("TIME_ZONE", "UTC")
USE_I18N = False
USE_TZ = True

STATIC_URL = "/static/"
STATIC_ROOT = BASE_DIR / "staticfiles"

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# The API is a stateless calculator: no accounts, no sessions
REST_FRAMEWORK = {
    "DEFAULT_SCHEMA_CLASS": "drf_spectacular.openapi.AutoSchema",
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": ("rest_framework.permissions.AllowAny",),
    "UNAUTHENTICATED_USER": None,
    "EXCEPTION_HANDLER": "common.exceptions.custom_exception_handler",
}

SPECTACULAR_SETTINGS = {
    "TITLE": "MDS Oracle API",
    "DESCRIPTION": "Lattice-point criteria for non-Mori-dream blowups of toric surfaces and 3-folds",
    "VERSION": "1.0.0",
    "COMPONENT_SPLIT_REQUEST": True,
    "SERVE_INCLUDE_SCHEMA": False,
}

# Oracle configuration
MDS_ORACLE_JOBS = int(os.environ.get("MDS_ORACLE_JOBS", 1))
MDS_SEARCH_BACKEND = os.environ.get("MDS_SEARCH_BACKEND", "local")  # local | celery
MDS_SEARCH_CHUNK_SIZE = int(os.environ.get("MDS_SEARCH_CHUNK_SIZE", 8))
MDS_ORACLE_SEED = int(os.environ.get("MDS_ORACLE_SEED", 20240501))
MDS_ORACLE_SAMPLES = int(os.environ.get("MDS_ORACLE_SAMPLES", 200))
MDS_ORACLE_MAX_N = int(os.environ.get("MDS_ORACLE_MAX_N", 6))
MDS_ORACLE_MAX_A = int(os.environ.get("MDS_ORACLE_MAX_A", 30))
MDS_ORACLE_MAX_ABS = int(os.environ.get("MDS_ORACLE_MAX_ABS", 20))
MDS_STABILITY_CHECK = env_bool("MDS_STABILITY_CHECK", True)
REPORT_SCHEMA_VERSION = "mds-oracle/1"

# Celery settings
CELERY_BROKER_URL = os.environ.get("CELERY_BROKER_URL", "redis://localhost:6379/0")
CELERY_RESULT_BACKEND = os.environ.get("CELERY_RESULT_BACKEND", "redis://localhost:6379/1")
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {"format": "%(levelname)s %(asctime)s %(name)s %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "simple"},
    },
    "root": {"handlers": ["console"], "level": os.environ.get("LOG_LEVEL", "WARNING")},
}
