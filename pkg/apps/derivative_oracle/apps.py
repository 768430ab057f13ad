from django.apps import AppConfig


class DerivativeOracleConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.derivative_oracle"
    verbose_name = "Derivative values and their linear-algebra oracle"
