import csv
import io

from ...path_comb import enumerate_paths, format_path, path_degree
from ...serializers import EnumerationRowSerializer, PathDegreeSerializer
from ..base import VirapathCommand


class Command(VirapathCommand):
    help = 'List the admissible rigged paths of length L ending at r up to a degree cutoff.'

    def add_arguments(self, parser):
        self.add_model_arguments(parser)
        parser.add_argument('--L', type=int, required=True)
        parser.add_argument('--r', type=int, default=1)
        parser.add_argument('--max-degree', required=True, help='an integer or num/den')
        self.add_format_argument(parser, choices=('text', 'json', 'csv'))

    def run(self, config):
        params = config['params']
        paths = enumerate_paths(params, config['L'], config['r'], config['max_degree'])
        rows = [{'path': path, 'degree': path_degree(params, path)} for path in paths]
        if config['format'] == 'json':
            self.emit_json(PathDegreeSerializer(rows, many=True).data)
        elif config['format'] == 'csv':
            buffer = io.StringIO()
            writer = csv.DictWriter(buffer, fieldnames=('r_seq', 'sigma_seq', 'degree'), lineterminator='\n')
            writer.writeheader()
            writer.writerows(EnumerationRowSerializer(rows, many=True).data)
            self.stdout.write(buffer.getvalue(), ending='')
        else:
            for row in rows:
                self.stdout.write(f"{format_path(row['path'])}\t{row['degree']}")
            self.stdout.write(f'{len(rows)} paths')
