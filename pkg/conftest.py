import os

import django

# Same settings wiring as manage.py, so Django test cases run under pytest.
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
django.setup()
