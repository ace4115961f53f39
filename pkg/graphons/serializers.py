from rest_framework import serializers

from .exceptions import WLError
from .models import StoredGraphon
from .serialization import parse_step_graphon


class DensityRequestSerializer(serializers.Serializer):
    """Pattern multigraph document and a graph or graphon document"""
    pattern = serializers.JSONField()
    graphon = serializers.JSONField()


class TermDensityRequestSerializer(serializers.Serializer):
    term = serializers.CharField(max_length=10000)
    graphon = serializers.JSONField()


class StoredGraphonSerializer(serializers.ModelSerializer):
    class Meta:
        model = StoredGraphon
        fields = ['id', 'name', 'description', 'document', 'steps', 'created_at', 'updated_at']
        read_only_fields = ['steps', 'created_at', 'updated_at']

    def validate_document(self, value):
        try:
            parse_step_graphon(value)
        except WLError as exc:
            raise serializers.ValidationError(exc.message)
        return value
