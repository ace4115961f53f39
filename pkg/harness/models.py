import logging
from django.conf import settings
from django.db import models
from django.utils import timezone
from django.utils.translation import gettext_lazy as _

from .suites import CONSISTENT, INCONCLUSIVE_BUDGET, THEOREM_VIOLATION, SUITES, EquivalenceReport

logger = logging.getLogger(__name__)


class HarnessRun(models.Model):
    """
    One execution of a cross-validation suite over a seeded batch of pairs
    """

    STATUS_CHOICES = [
        ('pending', _('Pending')),
        ('running', _('Running')),
        ('completed', _('Completed')),
        ('failed', _('Failed')),
    ]

    SUITE_CHOICES = [(suite, suite) for suite in SUITES]

    suite = models.CharField(_('Suite'), max_length=20, choices=SUITE_CHOICES)
    k = models.PositiveSmallIntegerField(_('k'), default=1)
    seed = models.IntegerField(_('Seed'), default=0)
    pair_count = models.PositiveIntegerField(_('Pairs'), default=0)
    include_curated = models.BooleanField(_('Include curated pairs'), default=True)
    status = models.CharField(_('Status'), max_length=20, choices=STATUS_CHOICES, default='pending')
    error_message = models.TextField(_('Error Message'), blank=True)

    # Summary counters
    consistent_count = models.PositiveIntegerField(_('Consistent'), default=0)
    violation_count = models.PositiveIntegerField(_('Violations'), default=0)
    inconclusive_count = models.PositiveIntegerField(_('Inconclusive'), default=0)
    finding_count = models.PositiveIntegerField(_('Findings'), default=0)

    requested_by = models.ForeignKey(
        settings.AUTH_USER_MODEL,
        on_delete=models.SET_NULL,
        null=True,
        blank=True,
        related_name='harness_runs',
    )

    # Metadata
    created_at = models.DateTimeField(_('Created At'), auto_now_add=True)
    started_at = models.DateTimeField(_('Started At'), null=True, blank=True)
    completed_at = models.DateTimeField(_('Completed At'), null=True, blank=True)

    class Meta:
        verbose_name = _('Harness run')
        verbose_name_plural = _('Harness runs')
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.suite} k={self.k} seed={self.seed} ({self.status})"

    @property
    def has_violations(self) -> bool:
        return self.violation_count > 0

    def mark_running(self):
        self.status = 'running'
        self.started_at = timezone.now()
        self.save(update_fields=['status', 'started_at'])

    def mark_failed(self, message: str):
        self.status = 'failed'
        self.error_message = message
        self.completed_at = timezone.now()
        self.save(update_fields=['status', 'error_message', 'completed_at'])

    def record(self, reports):
        """Persist the reports of a finished suite and update the counters"""
        PairReport.objects.bulk_create([PairReport.from_report(self, report) for report in reports])
        self.consistent_count = sum(1 for r in reports if r.classification == CONSISTENT)
        self.violation_count = sum(1 for r in reports if r.classification == THEOREM_VIOLATION)
        self.inconclusive_count = sum(1 for r in reports if r.classification == INCONCLUSIVE_BUDGET)
        self.finding_count = sum(len(r.findings) for r in reports)
        self.status = 'completed'
        self.completed_at = timezone.now()
        self.save()
        logger.info(
            f"Run {self.id} completed: {self.consistent_count} consistent, "
            f"{self.violation_count} violations, {self.inconclusive_count} inconclusive"
        )


class PairReport(models.Model):
    """
    Verdicts of every characterization for one pair of a harness run
    """

    CLASSIFICATION_CHOICES = [
        (CONSISTENT, _('Consistent')),
        (THEOREM_VIOLATION, _('Violation')),
        (INCONCLUSIVE_BUDGET, _('Inconclusive (budget)')),
    ]

    run = models.ForeignKey(HarnessRun, on_delete=models.CASCADE, related_name='reports')
    pair_id = models.CharField(_('Pair'), max_length=200)
    seed = models.BigIntegerField(
        _('Pair seed'), null=True, blank=True, help_text=_('Seed of a generated pair; empty for curated pairs')
    )
    classification = models.CharField(_('Classification'), max_length=30, choices=CLASSIFICATION_CHOICES, default=CONSISTENT)
    fingerprint_equal = models.BooleanField(_('Fingerprints equal'), null=True, blank=True)
    first_difference = models.IntegerField(_('First differing round'), null=True, blank=True)
    verdicts = models.JSONField(_('Verdicts'), default=dict)
    details = models.TextField(_('Details'), blank=True)
    findings = models.JSONField(_('Findings'), default=list, blank=True)

    created_at = models.DateTimeField(_('Created At'), auto_now_add=True)

    class Meta:
        verbose_name = _('Pair report')
        verbose_name_plural = _('Pair reports')
        ordering = ['run', 'id']
        indexes = [
            models.Index(fields=['run', 'classification'], name='harness_report_run_class_idx'),
        ]

    def __str__(self):
        return f"{self.pair_id}: {self.classification}"

    @classmethod
    def from_report(cls, run: HarnessRun, report: EquivalenceReport) -> 'PairReport':
        return cls(
            run=run,
            pair_id=report.pair_id,
            seed=report.seed,
            classification=report.classification,
            fingerprint_equal=report.verdicts.get('fingerprint_equal'),
            first_difference=report.verdicts.get('first_difference'),
            verdicts=report.verdicts,
            details=report.details,
            findings=report.findings,
        )
