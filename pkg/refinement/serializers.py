from rest_framework import serializers


class CompareRequestSerializer(serializers.Serializer):
    """Two graph or graphon documents and an algorithm such as "owl(2)" """
    first = serializers.JSONField()
    second = serializers.JSONField()
    algorithm = serializers.CharField(max_length=40, default='colref')
    run_to_fixpoint = serializers.BooleanField(default=False)
