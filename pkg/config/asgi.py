"""
ASGI entry point for the braid3 project.

Serves the read-only ``/api/`` endpoints; the command surface is ``manage.py braid3``.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')

application = get_asgi_application()
