from rest_framework import serializers

from apps.polytopes.serializers import Polygon4Serializer, Polytope3Serializer, TetraTupleSerializer
from .reports import Verdict


class _ScaleMixin(serializers.Serializer):
    m_factor = serializers.IntegerField(min_value=1, default=1)


class PolygonCheckSerializer(_ScaleMixin, Polygon4Serializer):
    pass


class PolytopeCheckSerializer(_ScaleMixin, Polytope3Serializer):
    pass


class TetraCheckSerializer(_ScaleMixin, TetraTupleSerializer):
    pass


class ConditionSerializer(serializers.Serializer):
    id = serializers.CharField()
    holds = serializers.BooleanField()
    witness = serializers.DictField()


class CheckReportSerializer(serializers.Serializer):
    """Response layout of every check endpoint (documentation only)."""
    schema = serializers.CharField()
    kind = serializers.CharField()
    verdict = serializers.ChoiceField(choices=Verdict.choices)
    branch = serializers.CharField()
    conditions = ConditionSerializer(many=True)
    normalization = serializers.DictField()
    summary = serializers.DictField()
    notes = serializers.ListField(child=serializers.CharField())
    sub_reports = serializers.ListField(child=serializers.DictField(), required=False)
