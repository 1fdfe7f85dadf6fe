"""
Django settings for the braid3 project.

Generated by 'django-admin startproject' using Django 5.2.7 and trimmed to what
a database-free command and JSON API need. Values come from the environment,
optionally through a ``.env`` file.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()


def _env_list(name):
    return [item.strip() for item in os.getenv(name, '').split(',') if item.strip()]


def _env_number(name, cast):
    value = os.getenv(name)
    return cast(value) if value not in (None, '') else None


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'django-insecure-braid3-development-key-change-me')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('DJANGO_DEBUG', 'True').lower() in ('1', 'true', 'yes')

ALLOWED_HOSTS = _env_list('DJANGO_ALLOWED_HOSTS')


# Application definition

INSTALLED_APPS = [
    'django.contrib.staticfiles',
    'corsheaders',
    'ninja',
    'braid3',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'corsheaders.middleware.CorsMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'config.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'config.wsgi.application'


# No models and no database; Django falls back to its dummy backend.
DATABASES = {}


CORS_ALLOWED_ORIGINS = _env_list('BRAID3_CORS_ORIGINS')
CORS_ALLOW_METHODS = ['GET', 'OPTIONS']


LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


STATIC_URL = 'static/'


# None falls back to braid3.conf.DEFAULTS; a SEED set here overrides --seed.
BRAID3 = {
    'SEED': _env_number('BRAID3_SEED', int),
    'TOLERANCE': _env_number('BRAID3_TOLERANCE', float),
    'AUDIT_SAMPLES': _env_number('BRAID3_AUDIT_SAMPLES', int),
    'GRID_STEP': _env_number('BRAID3_GRID_STEP', float),
    'WORKERS': _env_number('BRAID3_WORKERS', int),
}


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'braid3': {
            'handlers': ['console'],
            'level': os.getenv('BRAID3_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
