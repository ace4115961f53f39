import logging
from django.core.exceptions import ValidationError
from django.db import models
from django.utils.translation import gettext_lazy as _

from .exceptions import WLError
from .serialization import parse_step_graphon, step_graphon_to_dict
from .structures import StepGraphon

logger = logging.getLogger(__name__)


class StoredGraphon(models.Model):
    """
    A named step graphon kept for reuse by the API and the density command
    """
    name = models.CharField(_('Name'), max_length=200, unique=True)
    description = models.TextField(_('Description'), blank=True)
    document = models.JSONField(_('Document'), help_text=_('{"masses": [...], "weights": [[...]]} with "p/q" strings'))
    steps = models.PositiveIntegerField(_('Steps'), default=0, editable=False)

    # Metadata
    created_at = models.DateTimeField(_('Created At'), auto_now_add=True)
    updated_at = models.DateTimeField(_('Updated At'), auto_now=True)

    class Meta:
        verbose_name = _('Stored graphon')
        verbose_name_plural = _('Stored graphons')
        ordering = ['name']

    def __str__(self):
        return f"{self.name} ({self.steps} steps)"

    def clean(self):
        try:
            graphon = parse_step_graphon(self.document)
        except WLError as exc:
            raise ValidationError({'document': exc.message})
        self.steps = graphon.n

    def save(self, *args, **kwargs):
        graphon = self.to_step_graphon()
        self.steps = graphon.n
        # store the normalized form
        self.document = step_graphon_to_dict(graphon)
        super().save(*args, **kwargs)

    def to_step_graphon(self) -> StepGraphon:
        return parse_step_graphon(self.document)

    @classmethod
    def from_step_graphon(cls, name: str, graphon: StepGraphon, description: str = '') -> 'StoredGraphon':
        return cls(name=name, description=description, document=step_graphon_to_dict(graphon))
