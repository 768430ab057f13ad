from django.apps import AppConfig


class WpsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.wps"
    verbose_name = "Weighted projective spaces"
