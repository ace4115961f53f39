"""
Shared plumbing for the management commands
"""
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from graphons.exceptions import WLError


class DocumentCommand(BaseCommand):
    """
    Base for commands that read JSON documents from files.

    Subclasses implement ``run``; domain errors become CommandError so the
    process exits non-zero.
    """

    def read_document(self, path: str) -> str:
        try:
            return Path(path).read_text(encoding='utf-8')
        except OSError as exc:
            raise CommandError(f"Cannot read {path}: {exc.strerror}") from exc

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except WLError as exc:
            raise CommandError(f"{exc.code}: {exc.message}") from exc

    def run(self, *args, **options):
        raise NotImplementedError
