import re

from django.core.management.base import CommandError

from ...particle_moves import MINUS, PLUS, apply_move, find_blocks, particle_count, rigging
from ...path_comb import format_path, parse_path, path_admissible, path_degree
from ...serializers import OrbitStepSerializer
from ..base import EXIT_USAGE, VirapathCommand

MOVE_PATTERN = re.compile(r'^([+-])(\d+)$')


def parse_moves(text):
    """'+1,+1,-2' -> [(1, PLUS), (1, PLUS), (2, MINUS)], applied left to right."""
    moves = []
    for token in filter(None, (part.strip() for part in (text or '').split(','))):
        match = MOVE_PATTERN.match(token)
        if not match or int(match.group(2)) < 1:
            raise CommandError(f'bad move {token!r}; use +j or -j with j >= 1', returncode=EXIT_USAGE)
        moves.append((int(match.group(2)), PLUS if match.group(1) == '+' else MINUS))
    return moves


def describe_blocks(blocks):
    """'2..3:1,1..1:1' (positions min..max and particle count), '-' without blocks."""
    return ','.join(f'{block.min}..{block.max}:{block.particles}' for block in blocks) or '-'


class Command(VirapathCommand):
    help = 'Trace the particle moves M+_j / M-_j on a rigged path.'

    def add_arguments(self, parser):
        self.add_model_arguments(parser)
        parser.add_argument('--path', required=True, help='r_L,...,r_0;s_{L-1},...,s_0')
        parser.add_argument('--apply', default='', help='comma separated moves such as +1,+1,-2')
        self.add_format_argument(parser)

    def step(self, params, path, move):
        return {
            'path': path,
            'degree': path_degree(params, path),
            'move': move,
            'undefined': False,
            'particles': particle_count(params, path),
            'rigging': list(rigging(params, path).parts),
            'blocks': list(find_blocks(params, path)),
        }

    def run(self, config):
        params = config['params']
        path = parse_path(self.options['path'])
        path_admissible(params, path).raise_if_failed()
        moves = parse_moves(self.options['apply'])

        steps = [self.step(params, path, None)]
        for j, direction in moves:
            label = f"{'+' if direction == PLUS else '-'}{j}"
            moved = apply_move(params, path, j, direction)
            if moved is None:
                steps.append({'path': None, 'degree': None, 'move': label, 'undefined': True,
                              'particles': None, 'rigging': None, 'blocks': None})
                break
            path = moved
            steps.append(self.step(params, path, label))

        if config['format'] == 'json':
            self.emit_json(OrbitStepSerializer(steps, many=True).data)
            return
        for step in steps:
            prefix = step['move'] or 'start'
            if step['undefined']:
                self.stdout.write(f'{prefix}: UNDEFINED')
                continue
            self.stdout.write(
                f"{prefix}: {format_path(step['path'])} degree {step['degree']} "
                f"m={step['particles']} lambda=({','.join(map(str, step['rigging']))}) "
                f"blocks={describe_blocks(step['blocks'])}"
            )
