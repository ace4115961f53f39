"""
ASGI config for wlgraphons project.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'wlgraphons.settings')

application = get_asgi_application()
