from rest_framework import serializers

from common.exceptions import InputError
from .types import WpsWeights


class WpsWeightsSerializer(serializers.Serializer):
    weights = serializers.ListField(child=serializers.IntegerField(min_value=1), min_length=4, max_length=5)

    def validate(self, attrs):
        try:
            attrs["wps"] = WpsWeights(tuple(attrs["weights"]))
        except InputError as exc:
            raise serializers.ValidationError({"weights": [exc.message]})
        return attrs


class FanSerializer(serializers.Serializer):
    rays = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    weights = serializers.ListField(child=serializers.IntegerField())
    index = serializers.IntegerField(allow_null=True, help_text="null when the rays do not span the lattice")

