import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-change-me-in-production')
DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'
ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'core',
]

# Nothing is persisted; the commands only emit to stdout.
DATABASES = {}

# Verification runs
VIRAPATH_THREADS = max(1, int(os.getenv('VIRAPATH_THREADS', '1')))
VIRAPATH_L_CAP = int(os.getenv('VIRAPATH_L_CAP', '64'))

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'core': {
            'handlers': ['console'],
            'level': os.getenv('VIRAPATH_LOG_LEVEL', 'WARNING').upper(),
            'propagate': False,
        },
    },
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = True
USE_TZ = True
