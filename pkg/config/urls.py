"""
URL configuration for the braid3 project.

Everything lives under ``/api/``; see ``braid3.api`` for the endpoints.
"""
from django.urls import path

from braid3.api import api

urlpatterns = [
    path('api/', api.urls),
]
