import logging
from django.shortcuts import get_object_or_404
from rest_framework import status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.pagination import PageNumberPagination
from rest_framework.permissions import IsAuthenticated
from rest_framework.response import Response

from .models import HarnessRun
from .serializers import HarnessRunRequestSerializer, HarnessRunSerializer
from .tasks import run_harness

logger = logging.getLogger(__name__)


@api_view(['GET', 'POST'])
@permission_classes([IsAuthenticated])
def runs(request):
    """
    GET lists runs, POST queues a new suite run
    """
    if request.method == 'GET':
        paginator = PageNumberPagination()
        page = paginator.paginate_queryset(HarnessRun.objects.all(), request)
        data = HarnessRunSerializer(page, many=True).data
        for entry in data:
            entry.pop('reports', None)
        return paginator.get_paginated_response(data)

    serializer = HarnessRunRequestSerializer(data=request.data)
    if not serializer.is_valid():
        return Response({'errors': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)
    data = serializer.validated_data
    run = HarnessRun.objects.create(
        suite=data['suite'],
        k=data['k'],
        seed=data['seed'],
        pair_count=data['pairs'],
        include_curated=data['include_curated'],
        requested_by=request.user,
    )
    logger.info(f"Queued harness run {run.id}: {run}")
    run_harness.delay(run.id)
    run.refresh_from_db()
    return Response(HarnessRunSerializer(run).data, status=status.HTTP_202_ACCEPTED)


@api_view(['GET'])
@permission_classes([IsAuthenticated])
def run_detail(request, run_id):
    run = get_object_or_404(HarnessRun, id=run_id)
    return Response(HarnessRunSerializer(run).data, status=status.HTTP_200_OK)
