# apps/mds_checker/urls.py
from django.urls import path

from .views import PolygonCheckView, PolytopeCheckView, ProjectionReportView, TetraCheckView

app_name = "mds_checker"

urlpatterns = [
    path("checks/polygon/", PolygonCheckView.as_view(), name="check-polygon"),
    path("checks/polytope/", PolytopeCheckView.as_view(), name="check-polytope"),
    path("checks/tetra/", TetraCheckView.as_view(), name="check-tetra"),
    path("checks/tetra/projections/", ProjectionReportView.as_view(), name="tetra-projections"),
]
