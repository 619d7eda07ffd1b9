from django.core.management.base import CommandError

from ...characters import char_bosonic, char_fermionic, char_main_sum, compare_series
from ...serializers import QSeriesSerializer
from ..base import EXIT_FALSIFIED, EXIT_USAGE, VirapathCommand


class Command(VirapathCommand):
    help = 'Compute the truncated character chi_{r,s} of the (p, pprime) minimal model.'

    def add_arguments(self, parser):
        self.add_model_arguments(parser)
        parser.add_argument('--r', type=int, default=1)
        parser.add_argument('--s', type=int, default=1)
        parser.add_argument('--trunc', default='20', help='truncation bound, an integer or num/den')
        parser.add_argument('--method', choices=('bosonic', 'fermionic', 'paths', 'all'), default='all')
        self.add_format_argument(parser)
        parser.add_argument('--l-cap', type=int, default=None)

    def run(self, config):
        params, r, s, N = config['params'], config['r'], config['s'], config['trunc']
        method = config['method']
        if method != 'bosonic' and s != 1:
            raise CommandError(f'method {method} only covers s = 1', returncode=EXIT_USAGE)

        series = {}
        if method in ('bosonic', 'all'):
            series['bosonic'] = char_bosonic(params, r, s, N)
        if method in ('fermionic', 'all'):
            series['fermionic'] = char_fermionic(params, r, N)
        if method in ('paths', 'all'):
            series['paths'], _ = char_main_sum(params, r, N, config['l_cap'])

        if config['format'] == 'json':
            self.emit_json({name: QSeriesSerializer(value).data for name, value in series.items()})
        else:
            for name, value in series.items():
                self.stdout.write(f'{name}: {value}')

        if method == 'all':
            verdicts = [
                compare_series(f'bosonic vs {name} {params} r={r}', series['bosonic'], series[name], N)
                for name in ('fermionic', 'paths')
            ]
            failed = [verdict for verdict in verdicts if not verdict.ok]
            if failed:
                raise CommandError('; '.join(f'{v.label}: {v.detail}' for v in failed), returncode=EXIT_FALSIFIED)
