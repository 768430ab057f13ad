from rest_framework import serializers

from apps.exact_math.services import as_rational, format_rational
from common.exceptions import InputError, InvalidPolytope
from .shapes import Polygon4, Polytope3, TetraTuple


class RationalField(serializers.Field):
    """Exact rational as a "p/q" string or an integer; floats are refused."""

    default_error_messages = {
        "invalid": "Expected an integer or a 'p/q' string, got {value!r}.",
    }

    def to_internal_value(self, data):
        if isinstance(data, float):
            self.fail("invalid", value=data)
        try:
            return as_rational(data)
        except InputError:
            self.fail("invalid", value=data)

    def to_representation(self, value):
        return format_rational(value)


def _point_field(dim: int) -> serializers.ListField:
    return serializers.ListField(child=RationalField(), min_length=dim, max_length=dim)


class _ShapeSerializer(serializers.Serializer):
    shape_class = None

    def validate(self, attrs):
        try:
            attrs["shape"] = self.shape_class(p_left=tuple(attrs["p_left"]), p_right=tuple(attrs["p_right"]))
        except InvalidPolytope as exc:
            raise serializers.ValidationError({"non_field_errors": [exc.message]})
        return attrs


class Polygon4Serializer(_ShapeSerializer):
    shape_class = Polygon4
    p_left = _point_field(2)
    p_right = _point_field(2)


class Polytope3Serializer(_ShapeSerializer):
    shape_class = Polytope3
    p_left = _point_field(3)
    p_right = _point_field(3)


class TetraTupleSerializer(serializers.Serializer):
    # (x_L, x_R, y_0, z_0[, further slopes])
    tuple = serializers.ListField(child=RationalField(), min_length=3, max_length=5)

    def validate(self, attrs):
        values = attrs["tuple"]
        try:
            attrs["tetra"] = TetraTuple.of(*values)
        except InvalidPolytope as exc:
            raise serializers.ValidationError({"tuple": [exc.message]})
        return attrs


def shape_to_dict(shape) -> dict:
    return {
        "p_left": [format_rational(c) for c in shape.p_left],
        "p_right": [format_rational(c) for c in shape.p_right],
    }
