import logging
from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from graphons.exceptions import MalformedDocument, WLError
from graphons.serialization import parse_as_graphon, parse_multigraph
from graphons.views import error_response
from utils.rationals import format_rational
from .serializers import FeasibilityRequestSerializer
from .systems import check_feasibility

logger = logging.getLogger(__name__)


def _witness_rows(witness):
    return [[str(name), format_rational(value)] for name, value in witness.items() if value]


@api_view(['POST'])
@permission_classes([IsAuthenticated])
def check(request):
    """
    Build one of the linear systems and decide it exactly.

    L^k and AX = XB take graph documents; the Markov commutant takes
    graph or graphon documents.
    """
    serializer = FeasibilityRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response({'errors': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)
    data = serializer.validated_data
    try:
        if data['system'] == 'markov':
            first, second = parse_as_graphon(data['first']), parse_as_graphon(data['second'])
        else:
            if any(isinstance(document, dict) and 'masses' in document for document in (data['first'], data['second'])):
                raise MalformedDocument(f"The {data['system']} system takes graph documents")
            first, second = parse_multigraph(data['first']), parse_multigraph(data['second'])
        system, result = check_feasibility(
            data['system'], first, second, data['k'], data['perm_invariant'], data.get('family')
        )
    except WLError as exc:
        return error_response(exc)

    rows, columns = system.size
    response = {
        'system': system.name,
        'verdict': result.verdict,
        'constraints': rows,
        'variables': columns,
        'pivots': result.pivots,
    }
    if data['include_witness'] and result.feasible:
        response['witness'] = _witness_rows(result.witness)
    return Response(response, status=status.HTTP_200_OK)
