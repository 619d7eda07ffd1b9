import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ..exceptions import InadmissiblePath, InvalidParameters, LCapReached, PathStructureError
from ..serializers import RunConfigSerializer

logger = logging.getLogger(__name__)

EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class VirapathCommand(BaseCommand):
    """
    Shared plumbing for the virapath commands.

    Subclasses implement ``run(config)``; parameter problems become exit code 2
    and an exhausted L cap becomes exit code 3.
    """

    def add_model_arguments(self, parser, required=True):
        parser.add_argument('--p', type=int, required=required)
        parser.add_argument('--pp', type=int, required=required, help="p' (coprime to p, larger than p)")

    def add_format_argument(self, parser, choices=('text', 'json')):
        parser.add_argument('--format', choices=choices, default='text')

    def validate(self, options):
        data = {key: value for key, value in options.items() if key in RunConfigSerializer().fields}
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f'invalid parameters: {json.dumps(serializer.errors, sort_keys=True)}',
                               returncode=EXIT_USAGE)
        config = dict(serializer.validated_data)
        if config.get('parallelism') is None:
            config['parallelism'] = settings.VIRAPATH_THREADS
        if config.get('l_cap') is None:
            config['l_cap'] = settings.VIRAPATH_L_CAP
        return config

    def handle(self, *args, **options):
        self.options = options
        config = self.validate(options)
        try:
            return self.run(config)
        except (InvalidParameters, PathStructureError, InadmissiblePath) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)
        except LCapReached as exc:
            logger.warning(str(exc))
            raise CommandError(str(exc), returncode=EXIT_CAP)

    def run(self, config):
        raise NotImplementedError

    def emit_json(self, payload):
        self.stdout.write(json.dumps(payload, sort_keys=True, indent=2))
