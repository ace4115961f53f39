"""
Celery application for background harness runs
"""
import os

from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'wlgraphons.settings')

app = Celery('wlgraphons')
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks()
