from rest_framework import serializers

SYSTEM_CHOICES = [
    ('lk', 'L^k for simple graphs'),
    ('ds', 'doubly stochastic AX = XB'),
    ('markov', 'Markov commutant of two step graphons'),
]


class FeasibilityRequestSerializer(serializers.Serializer):
    system = serializers.ChoiceField(choices=SYSTEM_CHOICES)
    first = serializers.JSONField()
    second = serializers.JSONField()
    k = serializers.IntegerField(min_value=1, default=1)
    perm_invariant = serializers.BooleanField(default=False)
    family = serializers.ChoiceField(choices=['oblivious', 'colref', 'simple'], required=False)
    include_witness = serializers.BooleanField(default=False)
