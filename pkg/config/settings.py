"""
Django settings for the tournaments toolkit.

The project runs only management commands: no database, no URL routing.
Tunables come from the environment (optionally a .env file at BASE_DIR).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / '.env')

SECRET_KEY = os.environ.get('SECRET_KEY', 'tournaments-toolkit-local-key')

DEBUG = os.environ.get('DEBUG', 'False') == 'True'

INSTALLED_APPS = [
    'tournaments',
]

# Pure computation; nothing is persisted.
DATABASES = {}

USE_TZ = True

TIME_ZONE = 'UTC'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Toolkit configuration
TOURNAMENTS = {
    'THREADS': int(os.environ.get('TOURNAMENTS_THREADS', '1')),
    'ARC_PROBABILITY': float(os.environ.get('TOURNAMENTS_ARC_PROBABILITY', '0.5')),
    'SEARCH_TRIALS': int(os.environ.get('TOURNAMENTS_SEARCH_TRIALS', '1000')),
    'RANDOM_RETRIES': int(os.environ.get('TOURNAMENTS_RANDOM_RETRIES', '1000')),
    'MAX_ORIENTATION_ORDER': int(os.environ.get('TOURNAMENTS_MAX_ORIENTATION_ORDER', '6')),
    'WITNESS_DIR': Path(os.environ.get('TOURNAMENTS_WITNESS_DIR', BASE_DIR / 'witnesses')),
}

# Logging goes to standard error so reports on standard output stay clean JSON.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'tournaments': {
            'handlers': ['console'],
            'level': os.environ.get('TOURNAMENTS_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
