import logging
from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.pagination import PageNumberPagination
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from algebra.terms import parse_term
from utils.rationals import format_rational
from .exceptions import WLError
from .models import StoredGraphon
from .operators import hom_density_bruteforce, term_density
from .serialization import parse_as_graphon, parse_multigraph
from .serializers import DensityRequestSerializer, StoredGraphonSerializer, TermDensityRequestSerializer

logger = logging.getLogger(__name__)


def error_response(exc: WLError) -> Response:
    """Domain errors are client errors"""
    logger.info(f"Rejected request: {exc.code} {exc.message}")
    return Response(exc.as_dict(), status=status.HTTP_400_BAD_REQUEST)


@api_view(['POST'])
@permission_classes([IsAuthenticated])
def density(request):
    """
    Homomorphism density t(F, W) of a multigraph pattern in a step graphon
    """
    serializer = DensityRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response({'errors': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)
    data = serializer.validated_data
    try:
        pattern = parse_multigraph(data['pattern'])
        graphon = parse_as_graphon(data['graphon'])
        value = hom_density_bruteforce(pattern, graphon)
    except WLError as exc:
        return error_response(exc)
    return Response({'density': format_rational(value)}, status=status.HTTP_200_OK)


@api_view(['POST'])
@permission_classes([IsAuthenticated])
def term_density_view(request):
    """
    Density of the bi-labeled graph a term evaluates to
    """
    serializer = TermDensityRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response({'errors': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)
    data = serializer.validated_data
    try:
        term = parse_term(data['term'])
        graphon = parse_as_graphon(data['graphon'])
        value = term_density(term, graphon)
    except WLError as exc:
        return error_response(exc)
    return Response({'density': format_rational(value), 'k': term.k}, status=status.HTTP_200_OK)


@api_view(['GET', 'POST'])
@permission_classes([IsAuthenticated])
def stored_graphons(request):
    if request.method == 'POST':
        serializer = StoredGraphonSerializer(data=request.data)
        if not serializer.is_valid():
            return Response({'errors': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)
        stored = serializer.save()
        logger.info(f"Stored graphon {stored.name} with {stored.steps} steps")
        return Response(StoredGraphonSerializer(stored).data, status=status.HTTP_201_CREATED)

    paginator = PageNumberPagination()
    page = paginator.paginate_queryset(StoredGraphon.objects.all(), request)
    return paginator.get_paginated_response(StoredGraphonSerializer(page, many=True).data)
