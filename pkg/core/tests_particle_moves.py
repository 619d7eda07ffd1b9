"""
Particle Move Tests

Test suite for the particle structure of rigged paths:
- blocks, particle counts and move domains
- the moves M+_j / M-_j and riggings
- the embedding iota and its inverse
- the move property checks and the bijection check
"""

from django.test import SimpleTestCase

from .exceptions import InvalidParameters
from .minimal_model import ModelParams, conformal_dim
from .particle_moves import (
    MINUS,
    PLUS,
    BlockKind,
    Partition,
    apply_move,
    apply_moves,
    check_bijection,
    check_move_lemmas,
    find_blocks,
    ground_pattern,
    iota,
    iota0,
    iota_inverse,
    move_domains,
    orbit,
    particle_count,
    partitions,
    rigging,
)
from .path_comb import RiggedPath, enumerate_paths, parse_path, path_degree


class PartitionTests(SimpleTestCase):
    """Partitions of fixed length"""

    def test_validation(self):
        with self.assertRaises(InvalidParameters):
            Partition((1, 2))
        with self.assertRaises(InvalidParameters):
            Partition((1, -1))

    def test_boundary_parts(self):
        lam = Partition((3, 1))
        self.assertEqual(lam[1], 3)
        self.assertEqual(lam[3], 0)
        self.assertGreater(lam[0], 10 ** 6)

    def test_enumeration(self):
        self.assertEqual(partitions(0, 5), [Partition(())])
        self.assertEqual([lam.parts for lam in partitions(2, 2)], [(0, 0), (1, 0), (1, 1), (2, 0)])
        self.assertEqual(partitions(2, -1), [])


class BlockTests(SimpleTestCase):
    """Blocks and particle counts"""

    def setUp(self):
        self.params = ModelParams(3, 7)

    def test_single_zero_rigging_block(self):
        blocks = find_blocks(self.params, parse_path('1,2,1;0,0'))
        self.assertEqual(len(blocks), 1)
        self.assertEqual((blocks[0].min, blocks[0].max), (1, 1))
        self.assertEqual(blocks[0].kind, BlockKind.SINGLE_SIGMA0)
        self.assertEqual(blocks[0].particles, 1)

    def test_two_position_block(self):
        blocks = find_blocks(self.params, parse_path('2,1,2,1;2,0,0'))
        self.assertEqual(len(blocks), 1)
        self.assertEqual((blocks[0].min, blocks[0].max), (1, 2))
        self.assertEqual(blocks[0].particles, 1)

    def test_particle_counts(self):
        self.assertEqual(particle_count(self.params, parse_path('1,2,1,2,1;0,2,0,0')), 2)
        self.assertEqual(particle_count(self.params, parse_path('1,2,1;5,7')), 0)
        self.assertEqual(particle_count(self.params, parse_path('2,1;5')), 0)
        self.assertEqual(particle_count(self.params, RiggedPath.empty()), 0)

    def test_move_domains(self):
        ground = move_domains(self.params, parse_path('1,2,1;0,0'))
        self.assertEqual(ground.plus_indices, {1})
        self.assertEqual(ground.minus_indices, set())
        lifted = move_domains(self.params, parse_path('1,2,1;1,0'))
        self.assertEqual(lifted.plus_indices, {1})
        self.assertEqual(lifted.minus_indices, {1})
        self.assertEqual(move_domains(self.params, parse_path('2,1;5')).plus_indices, set())


class MoveTests(SimpleTestCase):
    """The moves M+_j and M-_j"""

    def setUp(self):
        self.params = ModelParams(3, 7)

    def test_first_chain(self):
        step1 = apply_move(self.params, parse_path('1,2,1;0,0'), 1, PLUS)
        self.assertEqual(step1, parse_path('1,2,1;1,0'))
        step2 = apply_move(self.params, step1, 1, PLUS)
        self.assertEqual(step2, parse_path('1,2,1;0,1'))

    def test_minus_inverts_plus(self):
        path = parse_path('1,2,1;1,0')
        self.assertEqual(apply_move(self.params, path, 1, MINUS), parse_path('1,2,1;0,0'))

    def test_undefined_moves(self):
        path = parse_path('1,2,1;0,0')
        self.assertIsNone(apply_move(self.params, path, 1, MINUS))
        self.assertIsNone(apply_move(self.params, path, 2, PLUS))
        self.assertIsNone(apply_moves(self.params, path, 1, MINUS, 3))

    def test_bad_direction(self):
        with self.assertRaises(InvalidParameters):
            apply_move(self.params, parse_path('1,2,1;0,0'), 1, 0)

    def test_reflection_move(self):
        """A zero rigging below an interior height reflects r_x"""
        params = ModelParams(4, 9)
        start = parse_path('2,1,2,1;0,1,0')
        reflected = apply_move(params, start, 1, PLUS)
        self.assertEqual(reflected, parse_path('2,3,2,1;0,0,0'))
        self.assertEqual(path_degree(params, reflected), path_degree(params, start) + 1)
        self.assertEqual(apply_move(params, reflected, 1, PLUS), parse_path('2,1,2,1;0,2,0'))
        self.assertEqual(apply_move(params, reflected, 1, MINUS), start)

    def test_orbit_trace(self):
        trail = orbit(self.params, parse_path('1,2,1;0,0'), 1, PLUS, 3)
        self.assertEqual(len(trail), 4)
        self.assertIsNone(trail[0][2])
        self.assertEqual(trail[1][2], 'M+_1')
        self.assertEqual([degree for _, degree, _ in trail], [2, 3, 4, 5])

    def test_riggings(self):
        self.assertEqual(rigging(self.params, parse_path('1,2,1;0,0')).parts, (0,))
        self.assertEqual(rigging(self.params, parse_path('1,2,1;1,0')).parts, (1,))
        self.assertEqual(rigging(self.params, parse_path('1,2,1;0,1')).parts, (2,))


class EmbeddingTests(SimpleTestCase):
    """iota0, iota and iota_inverse"""

    def setUp(self):
        self.params = ModelParams(3, 7)
        self.params_bar = ModelParams(3, 4)

    def test_iota0(self):
        self.assertEqual(iota0(self.params, RiggedPath.empty()), RiggedPath.empty())
        self.assertEqual(iota0(self.params, parse_path('1,2,1;0,0')), parse_path('1,2,1;2,0'))
        self.assertEqual(iota0(self.params, parse_path('2,1;3')), parse_path('2,1;3'))

    def test_ground_pattern(self):
        self.assertEqual(ground_pattern(self.params, RiggedPath.empty(), 2), parse_path('1,2,1,2,1;0,2,0,0'))
        self.assertEqual(ground_pattern(self.params, parse_path('2,1;0'), 1), parse_path('2,1,2,1;2,0,0'))

    def test_iota(self):
        self.assertEqual(iota(self.params, RiggedPath.empty(), Partition((0,))), parse_path('1,2,1;0,0'))
        self.assertEqual(iota(self.params, RiggedPath.empty(), (0, 0)), parse_path('1,2,1,2,1;0,2,0,0'))
        self.assertEqual(iota(self.params, RiggedPath.empty(), (2,)), parse_path('1,2,1;0,1'))
        base = parse_path('1,2,1;0,0')
        self.assertEqual(iota(self.params, base, ()), iota0(self.params, base))

    def test_degree_relation(self):
        """d(iota(P, lam)) = d(P) + |lam| + L^2/4 + L/2"""
        path = iota(self.params, RiggedPath.empty(), Partition((0,)))
        self.assertEqual(path_degree(self.params, path), 2)

    def test_iota_inverse(self):
        self.assertEqual(iota_inverse(self.params, parse_path('1,2,1;0,0')), (RiggedPath.empty(), Partition((0,))))
        self.assertEqual(iota_inverse(self.params, parse_path('2,1;3')), (parse_path('2,1;3'), Partition(())))
        self.assertEqual(iota_inverse(self.params, parse_path('1,2,1;0,1')), (RiggedPath.empty(), Partition((2,))))

    def test_requires_level_above_two(self):
        with self.assertRaises(InvalidParameters):
            iota0(ModelParams(4, 5), RiggedPath.empty())


class PropertyCheckTests(SimpleTestCase):
    """The move property checks and the bijection check on small cutoffs"""

    def _paths(self, params, max_length, extra):
        paths = []
        for r in range(1, params.p):
            cutoff = conformal_dim(params, r, 1) + extra
            for L in range(max_length + 1):
                paths.extend(enumerate_paths(params, L, r, cutoff))
        return paths

    def test_move_properties(self):
        for p, pp in ((3, 7), (3, 8), (4, 9)):
            params = ModelParams(p, pp)
            with self.subTest(params=str(params)):
                report = check_move_lemmas(params, self._paths(params, 6, 10))
                self.assertTrue(report.ok, dict(report.samples))
                for name in ('move_inverse', 'move_shifts_degree', 'same_direction_commute',
                             'opposite_direction_commute', 'neighbour_powers', 'rigging_minus_change'):
                    self.assertGreater(report.checked[name], 0, name)

    def test_lowering_commutes_past_the_next_particle(self):
        """M-_2 M-_1 P, when defined, equals M-_1 M-_2 P"""
        params = ModelParams(3, 7)
        checked = 0
        for path in self._paths(params, 6, 10):
            once = apply_move(params, path, 1, MINUS)
            left = apply_move(params, once, 2, MINUS) if once is not None else None
            if left is None:
                continue
            other = apply_move(params, path, 2, MINUS)
            self.assertIsNotNone(other)
            self.assertEqual(apply_move(params, other, 1, MINUS), left)
            checked += 1
        self.assertGreater(checked, 0)

    def test_move_properties_need_level_above_two(self):
        with self.assertRaises(InvalidParameters):
            check_move_lemmas(ModelParams(5, 7), [])

    def test_bijection(self):
        for p, pp in ((3, 7), (4, 9)):
            params = ModelParams(p, pp)
            for r in range(1, p):
                for L in range(5):
                    cutoff = conformal_dim(params, r, 1) + 6
                    report = check_bijection(params, L, r, cutoff)
                    self.assertTrue(report.ok, report.failures)
                    self.assertEqual(
                        sum(report.per_particles.values()),
                        len(enumerate_paths(params, L, r, cutoff)),
                    )

    def test_bijection_needs_level_above_two(self):
        with self.assertRaises(InvalidParameters):
            check_bijection(ModelParams(5, 7), 2, 1, 5)
