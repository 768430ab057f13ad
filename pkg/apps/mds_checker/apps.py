from django.apps import AppConfig


class MdsCheckerConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.mds_checker"
    verbose_name = "Non-MDS criteria for polygons and polytopes"
