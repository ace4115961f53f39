"""
Background execution of harness runs
"""
import logging

from celery import shared_task

from graphons.exceptions import WLError
from .generators import pairs_for_suite
from .models import HarnessRun
from .suites import run_suite

logger = logging.getLogger(__name__)


@shared_task
def run_harness(run_id: int):
    """Evaluate every pair of a stored run and persist the reports"""
    try:
        run = HarnessRun.objects.get(id=run_id)
    except HarnessRun.DoesNotExist:
        logger.error(f"Harness run {run_id} does not exist")
        return None

    run.mark_running()
    pairs = pairs_for_suite(run.suite, run.pair_count, run.seed, run.include_curated)
    try:
        reports = run_suite(run.suite, run.k, pairs.graph_pairs, pairs.graphon_pairs, pairs.seeds)
    except WLError as exc:
        logger.error(f"Harness run {run_id} failed: {exc.code} {exc.message}")
        run.mark_failed(f"{exc.code}: {exc.message}")
        return run.status
    run.record(reports)
    return run.status
