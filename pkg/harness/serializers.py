from django.conf import settings
from rest_framework import serializers

from .models import HarnessRun, PairReport
from .suites import SUITES


class PairReportSerializer(serializers.ModelSerializer):
    class Meta:
        model = PairReport
        fields = [
            'id', 'pair_id', 'seed', 'classification', 'fingerprint_equal', 'first_difference',
            'verdicts', 'details', 'findings'
        ]


class HarnessRunSerializer(serializers.ModelSerializer):
    reports = PairReportSerializer(many=True, read_only=True)

    class Meta:
        model = HarnessRun
        fields = [
            'id', 'suite', 'k', 'seed', 'pair_count', 'include_curated', 'status', 'error_message',
            'consistent_count', 'violation_count', 'inconclusive_count', 'finding_count',
            'created_at', 'started_at', 'completed_at', 'reports'
        ]
        read_only_fields = [
            'status', 'error_message', 'consistent_count', 'violation_count', 'inconclusive_count',
            'finding_count', 'created_at', 'started_at', 'completed_at', 'reports'
        ]


class HarnessRunRequestSerializer(serializers.Serializer):
    suite = serializers.ChoiceField(choices=SUITES)
    k = serializers.IntegerField(min_value=1, default=1)
    seed = serializers.IntegerField(required=False)
    pairs = serializers.IntegerField(min_value=0, required=False)
    include_curated = serializers.BooleanField(default=True)

    def validate(self, attrs):
        attrs.setdefault('seed', settings.WL_HARNESS['DEFAULT_SEED'])
        attrs.setdefault('pairs', settings.WL_HARNESS['DEFAULT_PAIRS'])
        if attrs['suite'] == 'simple' and attrs['k'] < 2:
            raise serializers.ValidationError({'k': 'The simple suite needs k >= 2'})
        if attrs['k'] > settings.WL_LIMITS['MAX_K']:
            raise serializers.ValidationError({'k': f"k is limited to {settings.WL_LIMITS['MAX_K']}"})
        return attrs
