# apps/wps/urls.py
from django.urls import path

from .views import TetraFanView, WpsCheckView

app_name = "wps"

urlpatterns = [
    path("wps/check/", WpsCheckView.as_view(), name="wps-check"),
    path("wps/fan/", TetraFanView.as_view(), name="tetra-fan"),
]
