import logging

from django.core.management.base import CommandError

from ...serializers import VerdictSerializer
from ...suites import SUITES, run_suite, seed_suite
from ..base import EXIT_CAP, EXIT_FALSIFIED, EXIT_USAGE, VirapathCommand

logger = logging.getLogger(__name__)


class Command(VirapathCommand):
    help = 'Run a verification suite (or the whole acceptance matrix with --seed-suite).'

    def add_arguments(self, parser):
        parser.add_argument('suite', nargs='?', choices=SUITES)
        parser.add_argument('--seed-suite', action='store_true')
        self.add_model_arguments(parser, required=False)
        parser.add_argument('--r', type=int)
        parser.add_argument('--L', type=int)
        parser.add_argument('--trunc', help='absolute truncation bound; defaults sit above the conformal dimension')
        parser.add_argument('--max-degree', help='absolute degree cutoff for the path suites')
        parser.add_argument('--l', type=int)
        parser.add_argument('--mu', type=int)
        parser.add_argument('--k', type=int)
        parser.add_argument('--parallelism', type=int)
        parser.add_argument('--l-cap', type=int)
        self.add_format_argument(parser)

    def run(self, config):
        if self.options['seed_suite']:
            results = seed_suite(config['parallelism'])
        elif config.get('suite'):
            results = run_suite(config['suite'], config, config['parallelism'])
        else:
            raise CommandError('name a suite or pass --seed-suite', returncode=EXIT_USAGE)

        verdicts = [verdict for _, verdict in results]
        if config['format'] == 'json':
            self.emit_json(VerdictSerializer(verdicts, many=True).data)
        else:
            for data in VerdictSerializer(verdicts, many=True).data:
                line = f"{data['status']} {data['label']}"
                if data['detail']:
                    line += f" ({data['detail']})"
                self.stdout.write(line)

        failed = [v for v in verdicts if not v.ok and not v.capped]
        capped = [v for v in verdicts if v.capped]
        logger.info(f'{len(verdicts)} cases, {len(failed)} failed, {len(capped)} capped')
        if failed:
            raise CommandError(f'{len(failed)} of {len(verdicts)} cases failed', returncode=EXIT_FALSIFIED)
        if capped:
            raise CommandError(f'{len(capped)} cases hit the L cap', returncode=EXIT_CAP)
