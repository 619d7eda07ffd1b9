"""
Named verification suites and the acceptance matrix.

A suite is a list of :class:`Case` values; each case is run by a module-level
function so that it can be shipped to a worker process.  Results come back
in case order whatever the parallelism.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from django.conf import settings

from .characters import (
    Verdict,
    compare_series,
    char_bosonic,
    char_fermionic,
    verify_char_recurrence,
    verify_fk_identity,
    verify_gauss_identity,
    verify_main_theorem,
    verify_path_recurrence,
)
from .exactq import as_rational
from .exceptions import InternalConsistencyError, InvalidParameters, LCapReached
from .minimal_model import ModelParams, conformal_dim
from .particle_moves import check_bijection, check_move_lemmas
from .path_comb import brute_force_paths, check_p3_translation, enumerate_paths

logger = logging.getLogger(__name__)

MODEL_GRID = ((3, 4), (3, 5), (4, 5), (3, 7), (5, 7), (3, 8), (4, 7), (5, 8), (4, 9), (3, 10))
MOVE_MODELS = ((3, 7), (3, 8), (4, 9), (5, 7))
DEGENERATE_MODELS = ((3, 4), (3, 5), (4, 5), (5, 7), (4, 7), (5, 8))
P3_PRIMES = (4, 5, 7, 8)
MAX_RECURRENCE_LENGTH = 12
MAX_SMALL_LENGTH = 6
# degree window above Delta_{r,1} for the move properties
MOVES_CUTOFF = 14

SUITES = ('main', 'fermionic', 'char-rec', 'path-rec', 'gauss', 'fk', 'moves', 'bijection',
          'degeneration', 'p3', 'oracle')


@dataclass(frozen=True)
class Case:
    kind: str
    label: str
    args: tuple

    @classmethod
    def make(cls, kind, label, **kwargs):
        return cls(kind, label, tuple(sorted(kwargs.items())))


def _cutoff(params, r, cutoff, relative):
    """``cutoff`` as an absolute degree, or Delta_{r,1} + cutoff when relative."""
    cutoff = as_rational(cutoff)
    return conformal_dim(params, r, 1) + cutoff if relative else cutoff


def _model_label(p, pprime):
    return f'({p},{pprime})'


# Case runners


def _main_case(p, pprime, r, cutoff, relative, l_cap):
    params = ModelParams(p, pprime)
    label = f'main {params} r={r}'
    try:
        verdict = verify_main_theorem(params, r, _cutoff(params, r, cutoff, relative), l_cap)
    except LCapReached as exc:
        return Verdict.cap(label, str(exc))
    return Verdict(verdict.ok, label, verdict.first_diff, verdict.detail)


def _fermionic_case(p, pprime, r, cutoff, relative):
    params = ModelParams(p, pprime)
    N = _cutoff(params, r, cutoff, relative)
    return compare_series(f'bosonic vs fermionic {params} r={r}',
                          char_bosonic(params, r, 1, N), char_fermionic(params, r, N), N)


def _char_rec_case(p, pprime, r, L, cutoff, relative):
    params = ModelParams(p, pprime)
    return verify_char_recurrence(params, r, L, _cutoff(params, r, cutoff, relative))


def _path_rec_case(p, pprime, r, L, cutoff, relative):
    params = ModelParams(p, pprime)
    return verify_path_recurrence(params, r, L, _cutoff(params, r, cutoff, relative))


def _gauss_case(l, mu, cutoff):
    return verify_gauss_identity(l, mu, cutoff)


def _fk_case(k, mu, cutoff):
    return verify_fk_identity(k, mu, cutoff)


def _moves_case(p, pprime, max_length, cutoff, relative):
    params = ModelParams(p, pprime)
    if 2 * p >= pprime:
        return Verdict.skip(f'moves {params}', 'needs t > 2')
    paths = []
    for r in range(1, p):
        N = _cutoff(params, r, cutoff, relative)
        for L in range(max_length + 1):
            paths.extend(enumerate_paths(params, L, r, N))
    report = check_move_lemmas(params, paths)
    checked = sum(report.checked.values())
    failed = sum(report.failed.values())
    detail = f'{len(paths)} paths, {checked} instances checked, {failed} failed'
    if not report.ok:
        samples = [f'{name}: {sample}' for name in sorted(report.samples) for sample in report.samples[name]]
        detail += '; ' + '; '.join(samples)
    return Verdict(report.ok, f'moves {params}', None, detail)


def _bijection_case(p, pprime, max_length, cutoff, relative):
    params = ModelParams(p, pprime)
    label = f'bijection {params}'
    if 2 * p >= pprime:
        return Verdict.skip(label, 'needs t > 2')
    failures, strata = [], 0
    for r in range(1, p):
        N = _cutoff(params, r, cutoff, relative)
        for L in range(max_length + 1):
            report = check_bijection(params, L, r, N)
            strata += len(report.per_particles)
            failures.extend(report.failures)
    detail = f'{strata} strata checked' if not failures else '; '.join(failures[:5])
    return Verdict(not failures, label, None, detail)


def _degeneration_case(p, pprime, max_length, cutoff, relative):
    params = ModelParams(p, pprime)
    label = f'degeneration {params}'
    if not 1 < params.t < 2:
        return Verdict.skip(label, 'needs 1 < t < 2')
    for r in range(1, p):
        N = _cutoff(params, r, cutoff, relative)
        for L in range(max_length + 1):
            with_windows = enumerate_paths(params, L, r, N)
            without = brute_force_paths(params, L, r, N, check_windows=False)
            if with_windows != without:
                extra = sorted(set(map(str, without)) - set(map(str, with_windows)))
                return Verdict(False, label, None, f'L={L} r={r}: window condition removed {extra[:3]}')
    return Verdict(True, label)


def _p3_case(pprime, max_length, cutoff, relative):
    params = ModelParams(3, pprime)
    checked, mismatches = 0, []
    for r in (1, 2):
        N = _cutoff(params, r, cutoff, relative)
        for L in range(max_length + 1):
            count, bad = check_p3_translation(pprime, L, r, N)
            checked += count
            mismatches.extend(bad)
    detail = f'{checked} riggings compared'
    if mismatches:
        detail += f'; mismatches: {mismatches[:5]}'
    return Verdict(not mismatches, f'p=3 translation {params}', None, detail)


def _oracle_case(p, pprime, max_length, cutoff):
    params = ModelParams(p, pprime)
    for r in range(1, p):
        for L in range(max_length + 1):
            if enumerate_paths(params, L, r, cutoff) != brute_force_paths(params, L, r, cutoff):
                return Verdict(False, f'oracle {params}', None, f'L={L} r={r} max_degree={cutoff}')
    return Verdict(True, f'oracle {params}')


CASE_RUNNERS = {
    'main': _main_case,
    'fermionic': _fermionic_case,
    'char-rec': _char_rec_case,
    'path-rec': _path_rec_case,
    'gauss': _gauss_case,
    'fk': _fk_case,
    'moves': _moves_case,
    'bijection': _bijection_case,
    'degeneration': _degeneration_case,
    'p3': _p3_case,
    'oracle': _oracle_case,
}


def _run_case(case):
    try:
        verdict = CASE_RUNNERS[case.kind](**dict(case.args))
    except InternalConsistencyError as exc:
        logger.error(f'{case.label}: {exc}')
        verdict = Verdict(False, case.label, None, f'internal consistency: {exc}')
    return case.label, verdict


def _execute(cases, parallelism):
    if parallelism <= 1 or len(cases) <= 1:
        return [_run_case(case) for case in cases]
    with ProcessPoolExecutor(max_workers=parallelism) as executor:
        futures = [executor.submit(_run_case, case) for case in cases]
        return [future.result() for future in futures]


# Case builders


def _models(options, default):
    if options.get('p') is not None and options.get('pp') is not None:
        return ((options['p'], options['pp']),)
    return default


def _rs(options, p):
    r = options.get('r')
    return (r,) if r is not None else tuple(range(1, p))


def _cutoff_option(options, key, default):
    """(cutoff, relative): an explicit option is absolute, the default is above Delta."""
    value = options.get(key)
    if value is None:
        return default, True
    return value, False


def _main_cases(options):
    cutoff, relative = _cutoff_option(options, 'trunc', 24)
    l_cap = options['l_cap'] if options.get('l_cap') is not None else settings.VIRAPATH_L_CAP
    return [
        Case.make('main', f'main {_model_label(p, pp)} r={r}',
                  p=p, pprime=pp, r=r, cutoff=cutoff, relative=relative, l_cap=l_cap)
        for p, pp in _models(options, MODEL_GRID) for r in _rs(options, p)
    ]


def _fermionic_cases(options):
    cutoff, relative = _cutoff_option(options, 'trunc', 40)
    return [
        Case.make('fermionic', f'fermionic {_model_label(p, pp)} r={r}',
                  p=p, pprime=pp, r=r, cutoff=cutoff, relative=relative)
        for p, pp in _models(options, MODEL_GRID) for r in _rs(options, p)
    ]


def _recurrence_cases(kind, options):
    cutoff, relative = _cutoff_option(options, 'trunc', 24)
    default = tuple((p, pp) for p, pp in MODEL_GRID if pp > 2 * p)
    lengths = (options['L'],) if options.get('L') is not None else range(MAX_RECURRENCE_LENGTH + 1)
    return [
        Case.make(kind, f'{kind} {_model_label(p, pp)} r={r} L={L}',
                  p=p, pprime=pp, r=r, L=L, cutoff=cutoff, relative=relative)
        for p, pp in _models(options, default) for r in _rs(options, p) for L in lengths
    ]


def _gauss_cases(options):
    ls = (options['l'],) if options.get('l') is not None else range(4)
    mus = (options['mu'],) if options.get('mu') is not None else range(-3, 6)
    cutoff = options.get('trunc') if options.get('trunc') is not None else 20
    return [Case.make('gauss', f'gauss l={l} mu={mu}', l=l, mu=mu, cutoff=cutoff) for l in ls for mu in mus]


def _fk_cases(options):
    ks = (options['k'],) if options.get('k') is not None else range(1, 4)
    mus = (options['mu'],) if options.get('mu') is not None else range(-3, 5)
    cutoff = options.get('trunc') if options.get('trunc') is not None else 16
    return [Case.make('fk', f'fk k={k} mu={mu}', k=k, mu=mu, cutoff=cutoff) for k in ks for mu in mus]


def _small_cases(kind, options, default_models, default_cutoff):
    cutoff, relative = _cutoff_option(options, 'max_degree', default_cutoff)
    max_length = options.get('L') if options.get('L') is not None else MAX_SMALL_LENGTH
    return [
        Case.make(kind, f'{kind} {_model_label(p, pp)}',
                  p=p, pprime=pp, max_length=max_length, cutoff=cutoff, relative=relative)
        for p, pp in _models(options, default_models)
    ]


def _p3_cases(options):
    cutoff, relative = _cutoff_option(options, 'max_degree', 10)
    max_length = options.get('L') if options.get('L') is not None else MAX_SMALL_LENGTH
    primes = (options['pp'],) if options.get('pp') is not None else P3_PRIMES
    return [
        Case.make('p3', f'p3 {_model_label(3, pp)}', pprime=pp, max_length=max_length,
                  cutoff=cutoff, relative=relative)
        for pp in primes
    ]


def _oracle_cases(options):
    cutoff = options.get('max_degree') if options.get('max_degree') is not None else 12
    max_length = options.get('L') if options.get('L') is not None else MAX_SMALL_LENGTH
    return [
        Case.make('oracle', f'oracle {_model_label(p, pp)}', p=p, pprime=pp, max_length=max_length, cutoff=cutoff)
        for p, pp in _models(options, MODEL_GRID)
    ]


def build_cases(name, options):
    if name == 'main':
        return _main_cases(options)
    if name == 'fermionic':
        return _fermionic_cases(options)
    if name in ('char-rec', 'path-rec'):
        return _recurrence_cases(name, options)
    if name == 'gauss':
        return _gauss_cases(options)
    if name == 'fk':
        return _fk_cases(options)
    if name == 'moves':
        return _small_cases('moves', options, MOVE_MODELS, MOVES_CUTOFF)
    if name == 'bijection':
        return _small_cases('bijection', options, MOVE_MODELS, 10)
    if name == 'degeneration':
        return _small_cases('degeneration', options, DEGENERATE_MODELS, 16)
    if name == 'p3':
        return _p3_cases(options)
    if name == 'oracle':
        return _oracle_cases(options)
    raise InvalidParameters(f'unknown suite {name!r}; choose from {", ".join(SUITES)}')


def _parallelism(parallelism):
    return parallelism if parallelism is not None else settings.VIRAPATH_THREADS


def run_suite(name, options, parallelism=None):
    """
    Run one named suite.

    ``options`` holds the validated run configuration (p, pp, r, L, trunc,
    max_degree, l, mu, k, l_cap); missing entries fall back to the
    acceptance-matrix ranges.
    """
    cases = build_cases(name, options)
    logger.info(f'suite {name}: {len(cases)} cases')
    return _execute(cases, _parallelism(parallelism))


def seed_suite(parallelism=None):
    """The full acceptance matrix, every suite at its default ranges."""
    cases = []
    for name in SUITES:
        cases.extend(build_cases(name, {}))
    logger.info(f'seed suite: {len(cases)} cases')
    return _execute(cases, _parallelism(parallelism))
