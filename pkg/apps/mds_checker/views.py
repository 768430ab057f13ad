# apps/mds_checker/views.py
import logging

from drf_spectacular.utils import extend_schema, extend_schema_view
from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from . import services
from .serializers import (
    CheckReportSerializer,
    PolygonCheckSerializer,
    PolytopeCheckSerializer,
    TetraCheckSerializer,
)

logger = logging.getLogger(__name__)


class _CheckView(APIView):
    """Validates the shape, runs one checker and returns its report."""

    permission_classes = [AllowAny]
    input_serializer = None

    def evaluate(self, data):
        raise NotImplementedError

    def post(self, request, *args, **kwargs):
        serializer = self.input_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        report = self.evaluate(serializer.validated_data)
        logger.info("%s check via API: %s", report.kind, report.verdict)
        return Response(report.to_dict(), status=status.HTTP_200_OK)


@extend_schema_view(post=extend_schema(
    tags=["Checks"], request=PolygonCheckSerializer, responses=CheckReportSerializer,
))
class PolygonCheckView(_CheckView):
    """
    POST /api/v1/checks/polygon/
    {"p_left": ["-3/4", "1/2"], "p_right": ["1/4", "3/4"], "m_factor": 1}
    """
    input_serializer = PolygonCheckSerializer

    def evaluate(self, data):
        return services.check_2d(data["shape"], data["m_factor"])


@extend_schema_view(post=extend_schema(
    tags=["Checks"], request=PolytopeCheckSerializer, responses=CheckReportSerializer,
))
class PolytopeCheckView(_CheckView):
    input_serializer = PolytopeCheckSerializer

    def evaluate(self, data):
        return services.check_3d(data["shape"], data["m_factor"])


@extend_schema_view(post=extend_schema(
    tags=["Checks"], request=TetraCheckSerializer, responses=CheckReportSerializer,
))
class TetraCheckView(_CheckView):
    """POST /api/v1/checks/tetra/ {"tuple": ["-3/5", "6/17", "1/3", "1/2"]}"""
    input_serializer = TetraCheckSerializer

    def evaluate(self, data):
        return services.check_tetra(data["tetra"], data["m_factor"])


@extend_schema_view(post=extend_schema(
    tags=["Checks"], request=TetraCheckSerializer, responses=CheckReportSerializer,
))
class ProjectionReportView(_CheckView):
    input_serializer = TetraCheckSerializer

    def evaluate(self, data):
        return services.projection_report(data["tetra"], data["m_factor"])
