import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'virapath.settings')
django.setup()
