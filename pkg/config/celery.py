# config/celery.py
import os

from celery import Celery

# local/production is picked by config.settings from DJANGO_ENV
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")

app = Celery("mds_oracle")

# Read CELERY_* settings from Django
app.config_from_object("django.conf:settings", namespace="CELERY")

# Picks up apps/wps/tasks.py
app.autodiscover_tasks()
