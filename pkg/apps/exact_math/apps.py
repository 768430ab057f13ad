from django.apps import AppConfig


class ExactMathConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.exact_math"
    verbose_name = "Exact rational arithmetic"
