# apps/wps/views.py
import logging

from drf_spectacular.utils import extend_schema
from rest_framework import status
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.mds_checker.serializers import CheckReportSerializer
from apps.polytopes.serializers import TetraTupleSerializer
from . import services
from .serializers import FanSerializer, WpsWeightsSerializer

logger = logging.getLogger(__name__)


class WpsCheckView(APIView):
    """
    POST /api/v1/wps/check/
    {"weights": [17, 20, 18, 27]}
    """
    permission_classes = [AllowAny]

    @extend_schema(tags=["Weighted projective spaces"], request=WpsWeightsSerializer, responses=CheckReportSerializer)
    def post(self, request, *args, **kwargs):
        serializer = WpsWeightsSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        report = services.check_wps(serializer.validated_data["wps"])
        logger.info("wps check via API %s: %s", serializer.validated_data["weights"], report.verdict)
        return Response(report.to_dict(), status=status.HTTP_200_OK)


class TetraFanView(APIView):
    """
    POST /api/v1/wps/fan/
    {"tuple": ["-3/5", "6/17", "1/3", "1/2"]} -> rays, weights and lattice index
    """
    permission_classes = [AllowAny]

    @extend_schema(tags=["Weighted projective spaces"], request=TetraTupleSerializer, responses=FanSerializer)
    def post(self, request, *args, **kwargs):
        serializer = TetraTupleSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        fan = services.tetra_fan(serializer.validated_data["tetra"])
        return Response(fan.to_dict(), status=status.HTTP_200_OK)
