import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
django.setup()

# Mirror what Django's test runner does (e.g. allows the 'testserver' host).
from django.test.utils import setup_test_environment  # noqa: E402

setup_test_environment()
