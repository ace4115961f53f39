import logging
from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from graphons.exceptions import WLError
from graphons.serialization import parse_as_graphon
from graphons.views import error_response
from .refinement import Algorithm, compare
from .serializers import CompareRequestSerializer

logger = logging.getLogger(__name__)


@api_view(['POST'])
@permission_classes([IsAuthenticated])
def compare_view(request):
    """
    Refine two objects in lockstep and report whether their fingerprints agree
    """
    serializer = CompareRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response({'errors': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)
    data = serializer.validated_data
    try:
        algorithm = Algorithm.parse(data['algorithm'])
        first = parse_as_graphon(data['first'])
        second = parse_as_graphon(data['second'])
        comparison = compare(first, second, algorithm, run_to_fixpoint=data['run_to_fixpoint'])
    except WLError as exc:
        return error_response(exc)

    return Response({
        'algorithm': str(algorithm),
        'verdict': comparison.verdict,
        'first_difference': comparison.first_difference,
        'rounds': [len(c.rounds) for c in comparison.colorings],
        'digests': [f.digest() for f in comparison.fingerprints],
    }, status=status.HTTP_200_OK)
