"""
Verification Suite and Command Tests

Test suite for the command-line surface:
- named suites and the case builder
- python manage.py char / enumerate / verify / orbit
- exit codes for falsification, bad parameters and the length cap
"""

import json
import re
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from .exceptions import InvalidParameters
from .suites import build_cases, run_suite


class SuiteTests(SimpleTestCase):
    """Named verification suites"""

    def test_default_ranges(self):
        self.assertEqual(len(build_cases('gauss', {})), 4 * 9)
        self.assertEqual(len(build_cases('fk', {})), 3 * 8)
        self.assertEqual(len(build_cases('moves', {})), 4)
        main = build_cases('main', {})
        self.assertEqual(len(main), sum(p - 1 for p in (3, 3, 4, 3, 5, 3, 4, 5, 4, 3)))

    def test_recurrence_grid_needs_level_above_two(self):
        labels = [case.label for case in build_cases('char-rec', {})]
        self.assertTrue(all('(3,4)' not in label and '(5,7)' not in label for label in labels))
        self.assertIn('char-rec (3,7) r=1 L=12', labels)

    def test_unknown_suite(self):
        with self.assertRaises(InvalidParameters):
            build_cases('nonsense', {})

    def test_gauss_suite(self):
        results = run_suite('gauss', {'l': 2, 'mu': -1, 'trunc': 15}, parallelism=1)
        self.assertEqual(len(results), 1)
        self.assertTrue(results[0][1].ok)

    def test_bijection_skips_low_level(self):
        [(label, verdict)] = run_suite('bijection', {'p': 5, 'pp': 7}, parallelism=1)
        self.assertTrue(verdict.skipped)

    def test_moves_skip_low_level(self):
        [(label, verdict)] = run_suite('moves', {'p': 5, 'pp': 7}, parallelism=1)
        self.assertTrue(verdict.skipped)
        self.assertEqual(label, 'moves (5,7)')

    def test_moves_suite_counts(self):
        results = run_suite('moves', {}, parallelism=1)
        self.assertEqual([verdict.skipped for _, verdict in results], [False, False, False, True])
        self.assertTrue(all(verdict.ok for _, verdict in results), results)
        checked = sum(
            int(re.search(r'(\d+) instances checked', verdict.detail).group(1))
            for _, verdict in results if not verdict.skipped
        )
        self.assertGreaterEqual(checked, 10 ** 4)

    def test_small_path_suites(self):
        for name, options in (
            ('oracle', {'p': 3, 'pp': 7, 'L': 4, 'max_degree': 6}),
            ('degeneration', {'p': 3, 'pp': 5, 'L': 4, 'max_degree': 8}),
            ('p3', {'pp': 7, 'L': 4, 'max_degree': 8}),
            ('moves', {'p': 3, 'pp': 7, 'L': 4, 'max_degree': 8}),
            ('bijection', {'p': 3, 'pp': 7, 'L': 4, 'max_degree': 8}),
        ):
            with self.subTest(suite=name):
                results = run_suite(name, options, parallelism=1)
                self.assertTrue(all(verdict.ok for _, verdict in results), results)

    def test_length_cap_is_not_a_falsification(self):
        [(label, verdict)] = run_suite('main', {'p': 3, 'pp': 7, 'r': 1, 'trunc': 10, 'l_cap': 2}, parallelism=1)
        self.assertTrue(verdict.capped)

    def test_process_pool_keeps_case_order(self):
        options = {'l': 1, 'trunc': 8}
        serial = run_suite('gauss', options, parallelism=1)
        pooled = run_suite('gauss', options, parallelism=2)
        self.assertEqual([label for label, _ in serial], [label for label, _ in pooled])
        self.assertTrue(all(verdict.ok for _, verdict in pooled))


class CharCommandTests(SimpleTestCase):
    """python manage.py char"""

    def test_all_methods_agree(self):
        out = StringIO()
        call_command('char', '--p', '3', '--pp', '4', '--r', '1', '--method', 'all', '--trunc', '20', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertEqual([line.split(':')[0] for line in lines], ['bosonic', 'fermionic', 'paths'])
        self.assertEqual(len({line.split(': ', 1)[1] for line in lines}), 1)

    def test_vacuum_at_zero(self):
        out = StringIO()
        call_command('char', '--p', '3', '--pp', '4', '--r', '1', '--trunc', '0', '--method', 'bosonic', stdout=out)
        self.assertEqual(out.getvalue().strip(), 'bosonic: 1 + O(q^1)')

    def test_json_format(self):
        out = StringIO()
        call_command('char', '--p', '3', '--pp', '5', '--r', '2', '--trunc', '3/4',
                     '--method', 'bosonic', '--format', 'json', stdout=out)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['bosonic'], {'trunc': '3/4', 'terms': [['3/4', '1']]})

    def test_bad_parameters(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('char', '--p', '4', '--pp', '6', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_paths_only_cover_s_one(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('char', '--p', '3', '--pp', '4', '--s', '2', '--method', 'paths', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    @override_settings(VIRAPATH_L_CAP=0)
    def test_length_cap_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('char', '--p', '3', '--pp', '7', '--trunc', '10', '--method', 'paths', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 3)


class EnumerateCommandTests(SimpleTestCase):
    """python manage.py enumerate"""

    def test_json_rows(self):
        out = StringIO()
        call_command('enumerate', '--p', '3', '--pp', '7', '--L', '2', '--r', '1', '--max-degree', '4',
                     '--format', 'json', stdout=out)
        rows = json.loads(out.getvalue())
        self.assertEqual(len(rows), 4)
        self.assertEqual(rows[0], {'path': {'r': [1, 2, 1], 'sigma': [0, 0]}, 'degree': '2/1'})

    def test_parity_gives_no_rows(self):
        out = StringIO()
        call_command('enumerate', '--p', '3', '--pp', '7', '--L', '1', '--r', '1', '--max-degree', '10', stdout=out)
        self.assertEqual(out.getvalue().strip(), '0 paths')

    def test_csv_header(self):
        out = StringIO()
        call_command('enumerate', '--p', '3', '--pp', '7', '--L', '1', '--r', '2', '--max-degree', '9/4',
                     '--format', 'csv', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], 'r_seq,sigma_seq,degree')
        self.assertEqual(lines[1:], ['"2,1",0,5/4', '"2,1",1,9/4'])


class VerifyCommandTests(SimpleTestCase):
    """python manage.py verify"""

    def test_main_suite(self):
        out = StringIO()
        call_command('verify', 'main', '--p', '3', '--pp', '7', '--r', '2', '--trunc', '20', stdout=out)
        self.assertTrue(out.getvalue().startswith('PASS main (3,7) r=2'))

    def test_gauss_suite(self):
        out = StringIO()
        call_command('verify', 'gauss', '--l', '2', '--mu', '-1', '--trunc', '15', '--format', 'json', stdout=out)
        [verdict] = json.loads(out.getvalue())
        self.assertTrue(verdict['ok'])
        self.assertEqual(verdict['status'], 'PASS')
        self.assertIsNone(verdict['first_diff'])

    def test_moves_suite_reports_counts(self):
        out = StringIO()
        call_command('verify', 'moves', '--p', '3', '--pp', '7', '--max-degree', '8', stdout=out)
        self.assertIn('PASS moves (3,7)', out.getvalue())
        self.assertIn('instances checked, 0 failed', out.getvalue())

    def test_needs_a_suite(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_length_cap_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', 'main', '--p', '3', '--pp', '7', '--r', '1', '--trunc', '10', '--l-cap', '2',
                         stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 3)


class OrbitCommandTests(SimpleTestCase):
    """python manage.py orbit"""

    def test_move_chain(self):
        out = StringIO()
        call_command('orbit', '--p', '3', '--pp', '7', '--path', '1,2,1;0,0', '--apply', '+1', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[-1], '+1: 1,2,1;1,0 degree 3 m=1 lambda=(1) blocks=1..1:1')

    def test_every_step_is_annotated(self):
        out = StringIO()
        call_command('orbit', '--p', '3', '--pp', '7', '--path', '1,2,1;0,0', '--apply', '+1,+1', stdout=out)
        self.assertEqual(out.getvalue().splitlines(), [
            'start: 1,2,1;0,0 degree 2 m=1 lambda=(0) blocks=1..1:1',
            '+1: 1,2,1;1,0 degree 3 m=1 lambda=(1) blocks=1..1:1',
            '+1: 1,2,1;0,1 degree 4 m=1 lambda=(2) blocks=1..1:1',
        ])

    def test_undefined_move_is_reported(self):
        out = StringIO()
        call_command('orbit', '--p', '3', '--pp', '7', '--path', '1,2,1;0,0', '--apply', '-1', stdout=out)
        self.assertEqual(out.getvalue().splitlines()[-1], '-1: UNDEFINED')

    def test_particle_free_path(self):
        out = StringIO()
        call_command('orbit', '--p', '3', '--pp', '7', '--path', '2,1;3', stdout=out)
        self.assertEqual(out.getvalue().strip(), 'start: 2,1;3 degree 17/4 m=0 lambda=() blocks=-')

    def test_json_trace(self):
        out = StringIO()
        call_command('orbit', '--p', '3', '--pp', '7', '--path', '1,2,1;0,0', '--apply', '+1,+1',
                     '--format', 'json', stdout=out)
        trace = json.loads(out.getvalue())
        self.assertIsInstance(trace, list)
        self.assertEqual([step['path'] for step in trace], [
            {'r': [1, 2, 1], 'sigma': [0, 0]},
            {'r': [1, 2, 1], 'sigma': [1, 0]},
            {'r': [1, 2, 1], 'sigma': [0, 1]},
        ])
        self.assertEqual(trace[1], {
            'path': {'r': [1, 2, 1], 'sigma': [1, 0]},
            'degree': '3/1',
            'move': '+1',
            'undefined': False,
            'particles': 1,
            'rigging': [1],
            'blocks': [{'min': 1, 'max': 1, 'kind': 'single_sigma1_boundary', 'particles': 1}],
        })
        self.assertEqual(trace[2]['blocks'][0]['kind'], 'single_sigma0')
        self.assertIsNone(trace[0]['move'])

    def test_json_undefined_move(self):
        out = StringIO()
        call_command('orbit', '--p', '3', '--pp', '7', '--path', '1,2,1;0,0', '--apply=-1,+1',
                     '--format', 'json', stdout=out)
        trace = json.loads(out.getvalue())
        self.assertEqual(len(trace), 2)
        self.assertTrue(trace[1]['undefined'])
        self.assertEqual(trace[1]['move'], '-1')
        self.assertIsNone(trace[1]['path'])

    def test_inadmissible_path(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('orbit', '--p', '3', '--pp', '7', '--path', '1,2,1,2,1;0,1,0,0', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_move_word(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('orbit', '--p', '3', '--pp', '7', '--path', '1,2,1;0,0', '--apply', 'x1', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
