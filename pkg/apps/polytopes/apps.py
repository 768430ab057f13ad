from django.apps import AppConfig


class PolytopesConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.polytopes"
    verbose_name = "Rational polygons, polytopes and their lattice slices"
