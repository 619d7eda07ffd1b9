"""
Particles on rigged paths and the bijection between levels t - 1 and t.

Positions 1..L-1 of a path split into blocks of particles; the moves
``M+_j`` / ``M-_j`` shift the j-th particle one unit of degree up or down.
The rigging of the particles is a partition, and together with a path one
level lower it determines the path (``iota`` / ``iota_inverse``).
"""
import enum
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactq import INFINITY, as_rational
from .exceptions import InternalConsistencyError, InvalidParameters, PathStructureError
from .minimal_model import reduced_params, v_int, weight_w
from .path_comb import RiggedPath, enumerate_paths, path_admissible, path_degree

logger = logging.getLogger(__name__)

PLUS = 1
MINUS = -1
SAMPLE_LIMIT = 3
HALF = Fraction(1, 2)


class BlockKind(enum.Enum):
    MULTI = 'multi'
    SINGLE_SIGMA1_BOUNDARY = 'single_sigma1_boundary'
    SINGLE_SIGMA0 = 'single_sigma0'


@dataclass(frozen=True)
class Block:
    min: int
    max: int
    kind: BlockKind
    particles: int

    @property
    def size(self):
        return self.max - self.min + 1


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative parts (lambda_1, ..., lambda_m)."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, 'parts', parts)
        if any(x < 0 for x in parts):
            raise InvalidParameters(f'partition parts must be nonnegative, got {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidParameters(f'partition parts must be weakly decreasing, got {parts}')

    @property
    def length(self):
        return len(self.parts)

    @property
    def size(self):
        return sum(self.parts)

    def __getitem__(self, j):
        """lambda_j with lambda_0 = INFINITY and lambda_{m+1} = 0."""
        if j == 0:
            return INFINITY
        if j == self.length + 1:
            return 0
        return self.parts[j - 1]


def partitions(m, max_size):
    """All partitions of length m (zero parts allowed) with size <= max_size."""
    budget = math.floor(as_rational(max_size))
    if budget < 0:
        return []
    found = []

    def extend(acc, remaining, cap):
        if len(acc) == m:
            found.append(Partition(tuple(acc)))
            return
        for x in range(min(cap, remaining) + 1):
            acc.append(x)
            extend(acc, remaining - x, x)
            acc.pop()

    if m == 0:
        return [Partition(())]
    extend([], budget, budget)
    found.sort(key=lambda lam: lam.parts)
    return found


# Blocks and particle counts


def _connected(params, rs, sigmas, x):
    """Whether positions x and x-1 are connected (2 <= x <= L-1)."""
    if rs[x + 1] != rs[x - 1] or rs[x] != rs[x - 2]:
        return False
    return sigmas[x] + sigmas[x - 1] == v_int(params, min(rs[x], rs[x - 1]))


def _block_particles(params, rs, sigmas, low, high):
    size = high - low + 1
    sigma, prime = sigmas[high], rs[high + 1]
    if sigma == 0 or (sigma == 1 and prime in (1, params.p - 1)):
        return (size + 1) // 2
    return size // 2


@lru_cache(maxsize=65536)
def find_blocks(params, path):
    """Blocks of particles in descending position order."""
    rs, sigmas, L = path.rs, path.sigmas, path.length
    p = params.p
    runs = []
    for x in range(1, L):
        if runs and x >= 2 and _connected(params, rs, sigmas, x):
            runs[-1][1] = x
        else:
            runs.append([x, x])
    blocks = []
    for low, high in runs:
        if high > low:
            kind = BlockKind.MULTI
        elif sigmas[low] == 1 and (rs[low + 1], rs[low], rs[low - 1]) in ((1, 2, 1), (p - 1, p - 2, p - 1)):
            kind = BlockKind.SINGLE_SIGMA1_BOUNDARY
        elif sigmas[low] == 0 and rs[low + 1] == rs[low - 1]:
            kind = BlockKind.SINGLE_SIGMA0
        else:
            continue
        if (high - low) % 2 == 0 and sigmas[low] != sigmas[high]:
            raise InternalConsistencyError(
                f'odd block {low}..{high} of {path} has sigma_min != sigma_max'
            )
        blocks.append(Block(low, high, kind, _block_particles(params, rs, sigmas, low, high)))
    return tuple(reversed(blocks))


def particle_count(params, path):
    return sum(block.particles for block in find_blocks(params, path))


@dataclass(frozen=True)
class MoveDomains:
    """Particle index -> position maps for left (plus) and right (minus) moves."""

    plus: dict = field(default_factory=dict)
    minus: dict = field(default_factory=dict)

    @property
    def plus_indices(self):
        return set(self.plus)

    @property
    def minus_indices(self):
        return set(self.minus)

    def position(self, j, direction):
        return (self.plus if direction == PLUS else self.minus).get(j)


def move_domains(params, path):
    blocks = find_blocks(params, path)
    plus, minus = {}, {}
    for block in blocks:
        ahead = sum(other.particles for other in blocks if other.max > block.max)
        plus[1 + ahead] = block.max
    quiet_start = path.length >= 2 and path.sigmas[0] == 0 and path.sigmas[1] == 0
    for block in blocks:
        if block.min == 1 and quiet_start:
            continue
        minus[sum(other.particles for other in blocks if other.min >= block.min)] = block.min
    return MoveDomains(plus, minus)


# Moves


@lru_cache(maxsize=65536)
def apply_move(params, path, j, direction):
    """
    The move M+_j (direction=PLUS) or M-_j (direction=MINUS), or None when undefined.
    """
    if direction not in (PLUS, MINUS):
        raise InvalidParameters(f'direction must be +1 or -1, got {direction}')
    x = move_domains(params, path).position(j, direction)
    if x is None:
        return None
    L = path.length
    rs = list(path.rs)
    sig = list(path.sigmas) + [INFINITY]
    ahead, behind = x + direction, x - direction

    if sig[x] != 0:
        sig[x] -= 1
        sig[behind] += 1
    else:
        prime = rs[x + 1]
        if prime in (1, params.p - 1):
            sig[x] = 1
            sig[ahead] -= 1
        else:
            if x == 1:
                raise InternalConsistencyError(f'reflection move requested at x=1 on {path}')
            old = rs[x]
            low = min(old, prime)
            eps = prime - old
            rs[x] = 2 * prime - old
            far = x + 2 * direction
            if not 0 <= far <= L or rs[far] == old:
                sig[ahead] -= v_int(params, low) + 1
            else:
                sig[ahead] += v_int(params, low + eps)
            far = x - 2 * direction
            if not 0 <= far <= L or rs[far] == old:
                sig[behind] -= v_int(params, low)
            else:
                sig[behind] += v_int(params, low + eps) + 1

    if sig[L] is not INFINITY:
        raise InternalConsistencyError(f'move touched sigma_L finitely on {path}')
    try:
        moved = RiggedPath.from_indexed(rs, sig[:L])
        report = path_admissible(params, moved)
    except PathStructureError as exc:
        raise InternalConsistencyError(f'move {j},{direction} corrupted {path}: {exc}') from exc
    if not report:
        raise InternalConsistencyError(
            f'move {j},{direction} on {path} gave {moved}, failing {report.constraint} at {report.index}'
        )
    return moved


def apply_moves(params, path, j, direction, count):
    """Apply the same move ``count`` times; None as soon as one is undefined."""
    for _ in range(count):
        path = apply_move(params, path, j, direction)
        if path is None:
            return None
    return path


def orbit(params, path, j, direction, steps):
    """Successive images under one move, stopping early when it becomes undefined."""
    trail = [(path, path_degree(params, path), None)]
    label = f"M{'+' if direction == PLUS else '-'}_{j}"
    for _ in range(steps):
        path = apply_move(params, path, j, direction)
        if path is None:
            break
        trail.append((path, path_degree(params, path), label))
    return trail


# Riggings


@lru_cache(maxsize=65536)
def rigging(params, path):
    m = particle_count(params, path)
    parts = [0] * (m + 2)
    for j in range(m, 0, -1):
        steps, current = 0, path
        while True:
            current = apply_move(params, current, j, MINUS)
            if current is None:
                break
            steps += 1
        parts[j] = parts[j + 1] + steps
    return Partition(tuple(parts[1:m + 1]))


# The bijection


def _iota0_shift(params_bar, params, rs, i):
    """sigma_i - sigma_bar_i: 0, 1 or 2 depending on the local shape."""
    triple = (rs[i + 1], rs[i], rs[i - 1])
    shift = HALF + weight_w(params_bar, *triple) - weight_w(params, *triple)
    if shift.denominator != 1:
        raise InternalConsistencyError(f'non-integral rigging shift {shift} at {triple}')
    return int(shift)


def iota0(params, path_bar):
    """Embed a level t-1 path as a particle-free level t path."""
    params_bar = reduced_params(params)
    path_admissible(params_bar, path_bar).raise_if_failed()
    rs, sigmas = path_bar.rs, list(path_bar.sigmas)
    for i in range(1, path_bar.length):
        sigmas[i] += _iota0_shift(params_bar, params, rs, i)
    return RiggedPath.from_indexed(rs, sigmas)


def iota0_inverse(params, path):
    params_bar = reduced_params(params)
    rs, sigmas = path.rs, list(path.sigmas)
    for i in range(1, path.length):
        sigmas[i] -= _iota0_shift(params_bar, params, rs, i)
    path_bar = RiggedPath.from_indexed(rs, sigmas)
    report = path_admissible(params_bar, path_bar)
    if not report:
        raise InternalConsistencyError(
            f'{path} is not in the image of iota0 ({report.constraint} at {report.index})'
        )
    return path_bar


def ground_pattern(params, base, m):
    """Prepend m particles with zero rigging below a particle-free path."""
    if m == 0:
        return base
    v = v_int(params, 1)
    rs = [1 if i % 2 == 0 else 2 for i in range(2 * m + 1)] + list(base.rs[1:])
    sigmas = [0] + [0 if i % 2 else v for i in range(1, 2 * m)]
    if base.length:
        sigmas += [base.sigmas[0] + v] + list(base.sigmas[1:])
    return RiggedPath.from_indexed(rs, sigmas)


def strip_ground_pattern(params, path, m):
    """Inverse of :func:`ground_pattern`; raises when the path has another shape."""
    if m == 0:
        return path
    rs, sigmas, L = path.rs, path.sigmas, path.length
    v = v_int(params, 1)
    if L < 2 * m:
        raise InternalConsistencyError(f'{path} is too short to carry {m} particles')
    expected_rs = [1 if i % 2 == 0 else 2 for i in range(2 * m + 1)]
    expected_sigmas = [0] + [0 if i % 2 else v for i in range(1, 2 * m)]
    if list(rs[:2 * m + 1]) != expected_rs or list(sigmas[:2 * m]) != expected_sigmas:
        raise InternalConsistencyError(f'{path} does not start with the {m}-particle ground pattern')
    if L == 2 * m:
        return RiggedPath.empty()
    head = sigmas[2 * m] - v
    if head < 0:
        raise InternalConsistencyError(f'{path} has sigma_{2 * m} below v(1)')
    return RiggedPath.from_indexed(rs[2 * m:], [head] + list(sigmas[2 * m + 1:]))


def iota(params, path_bar, lam):
    """(M+_m)^{lam_m} ... (M+_1)^{lam_1} applied to the ground pattern over iota0(path_bar)."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    path = ground_pattern(params, iota0(params, path_bar), lam.length)
    for j, count in enumerate(lam.parts, start=1):
        moved = apply_moves(params, path, j, PLUS, count)
        if moved is None:
            raise InternalConsistencyError(
                f'M+_{j} undefined while building iota({path_bar}, {lam.parts})'
            )
        path = moved
    return path


def iota_inverse(params, path):
    """Recover (path_bar, lam) with iota(params, path_bar, lam) == path."""
    lam = rigging(params, path)
    parts = list(lam.parts) + [0]
    current = path
    while any(parts):
        j = max(i for i in range(1, lam.length + 1) if parts[i - 1] > parts[i])
        current = apply_move(params, current, j, MINUS)
        if current is None:
            raise InternalConsistencyError(f'M-_{j} undefined while reducing {path}')
        parts[j - 1] -= 1
    base = strip_ground_pattern(params, current, lam.length)
    if particle_count(params, base):
        raise InternalConsistencyError(f'stripped path {base} of {path} still carries particles')
    return iota0_inverse(params, base), lam


# Property suites


@dataclass
class LemmaReport:
    """Per-property instance and failure counts with a few failing samples."""

    checked: dict = field(default_factory=lambda: defaultdict(int))
    failed: dict = field(default_factory=lambda: defaultdict(int))
    samples: dict = field(default_factory=lambda: defaultdict(list))

    def record(self, name, ok, path=None, detail=''):
        self.checked[name] += 1
        if not ok:
            self.failed[name] += 1
            if len(self.samples[name]) < SAMPLE_LIMIT:
                self.samples[name].append(f'{path}: {detail}')

    @property
    def ok(self):
        return not any(self.failed.values())

    def summary(self):
        return {
            name: {'checked': self.checked[name], 'failed': self.failed[name]}
            for name in sorted(self.checked)
        }


def _safe_move(params, path, j, direction, report):
    try:
        return apply_move(params, path, j, direction)
    except InternalConsistencyError as exc:
        report.record('move_preserves_set', False, path, str(exc))
        return None


def _safe_rigging(params, path, report):
    try:
        return rigging(params, path)
    except InternalConsistencyError as exc:
        report.record('move_preserves_set', False, path, str(exc))
        return None


def _compose(params, path, moves, report):
    """Apply (j, direction) pairs right to left; None if any is undefined."""
    for j, direction in reversed(moves):
        if path is None:
            return None
        path = _safe_move(params, path, j, direction, report)
    return path


def _same_direction_excluded(i, j, direction):
    # M+_{j+1} M+_j and M-_{j-1} M-_j need not commute
    return i == j or i == j + direction


def _check_orbit(params, path, j, direction, m, report, max_power):
    """Single-move properties at every step of (M_j)^l P, l <= max_power."""
    current = path
    sign = '+' if direction == PLUS else '-'
    for step in range(1, max_power + 1):
        moved = _safe_move(params, current, j, direction, report)
        if moved is None:
            return
        note = f'(M{sign}_{j})^{step} -> {moved}'
        report.record('move_preserves_set', moved.end == current.end and moved.length == current.length,
                      path, note)
        report.record('move_preserves_particles', particle_count(params, moved) == m, path, note)
        report.record('move_shifts_degree',
                      path_degree(params, moved) == path_degree(params, current) + direction, path, note)
        report.record('move_inverse_domain',
                      move_domains(params, moved).position(j, -direction) is not None, path, note)
        back = _safe_move(params, moved, j, -direction, report)
        report.record('move_inverse', back == current, path, f'{note}, back gave {back}')
        current = moved


def _check_commuting(params, path, m, direction, other, report, max_power):
    """(M_i)^a (M'_j)^b P = (M'_j)^b (M_i)^a P whenever the left side is defined, a + b <= max_power."""
    name = 'same_direction_commute' if other == direction else 'opposite_direction_commute'
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if other == direction and _same_direction_excluded(i, j, direction):
                continue
            if other != direction and i == j:
                continue
            for a in range(1, max_power):
                for b in range(1, max_power - a + 1):
                    left = _compose(params, path, [(i, direction)] * a + [(j, other)] * b, report)
                    if left is None:
                        continue
                    right = _compose(params, path, [(j, other)] * b + [(i, direction)] * a, report)
                    report.record(name, left == right, path, f'i={i}^{a} j={j}^{b} direction={direction}')


def check_move_lemmas(params, paths, max_power=5):
    """
    Check the move properties on every given path.

    Single moves are checked along each orbit (M_j)^l P and commutation
    over compositions of total length at most ``max_power``. Only models
    with t > 2 are accepted.
    """
    reduced_params(params)
    report = LemmaReport()
    for path in paths:
        m = particle_count(params, path)
        report.record('particle_bound', m <= path.length // 2, path, f'm={m}')
        domains = move_domains(params, path)

        for direction in (PLUS, MINUS):
            for j in range(1, m + 1):
                _check_orbit(params, path, j, direction, m, report, max_power)
            _check_commuting(params, path, m, direction, direction, report, max_power)
            _check_commuting(params, path, m, direction, -direction, report, max_power)

        for j in range(1, m):
            plus_defined = (j + 1) in domains.plus
            minus_defined = j in domains.minus
            report.record('neighbour_definedness', plus_defined == minus_defined, path, f'j={j}')
            left = _compose(params, path, [(j + 1, PLUS), (j, MINUS)], report)
            right = _compose(params, path, [(j, MINUS), (j + 1, PLUS)], report)
            if left is not None or right is not None:
                report.record('neighbour_commute', left == right, path, f'j={j}')
            for power in range(1, max_power + 1):
                up = _compose(params, path, [(j + 1, PLUS)] * power, report) is not None
                down = _compose(params, path, [(j, MINUS)] * power, report) is not None
                report.record('neighbour_powers', up == down, path, f'j={j} l={power}')
                if not up and not down:
                    break

        lam = _safe_rigging(params, path, report)
        if lam is None:
            continue
        for j in range(1, m + 1):
            for direction, expected in ((PLUS, lam[j] < lam[j - 1]), (MINUS, lam[j] > lam[j + 1])):
                name = 'rigging_plus' if direction == PLUS else 'rigging_minus'
                moved = _safe_move(params, path, j, direction, report)
                report.record(f'{name}_domain', (moved is not None) == expected, path, f'j={j} lam={lam.parts}')
                if moved is None:
                    continue
                changed = list(lam.parts)
                changed[j - 1] += direction
                after = _safe_rigging(params, moved, report)
                report.record(f'{name}_change', after is not None and after.parts == tuple(changed),
                              path, f'j={j}')
    logger.info(f'move properties for {params}: {dict(report.summary())}')
    return report


@dataclass
class BijectionReport:
    L: int
    r: int
    cutoff: object
    per_particles: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, detail):
        logger.error(f'bijection check L={self.L} r={self.r}: {detail}')
        if len(self.failures) < SAMPLE_LIMIT * 3:
            self.failures.append(detail)


def check_bijection(params, L, r, N):
    """Check that iota matches C_{L,r} below degree N, stratum by stratum."""
    params_bar = reduced_params(params)
    report = BijectionReport(L, r, N)
    N = as_rational(N)
    shift = Fraction(L * L, 4) + Fraction(L, 2)
    image = {}
    for m in range(L // 2 + 1):
        count = 0
        budget = N - shift
        if budget < 0:
            report.per_particles[m] = 0
            continue
        for path_bar in enumerate_paths(params_bar, L - 2 * m, r, budget):
            degree_bar = path_degree(params_bar, path_bar)
            for lam in partitions(m, budget - degree_bar):
                try:
                    path = iota(params, path_bar, lam)
                    preimage = iota_inverse(params, path)
                except InternalConsistencyError as exc:
                    report.fail(f'iota({path_bar}, {lam.parts}): {exc}')
                    continue
                count += 1
                if path.length != L or path.end != r or not path_admissible(params, path):
                    report.fail(f'iota({path_bar}, {lam.parts}) = {path} left C_(L,r)')
                if path_degree(params, path) != degree_bar + lam.size + shift:
                    report.fail(f'degree relation fails for iota({path_bar}, {lam.parts}) = {path}')
                if particle_count(params, path) != m:
                    report.fail(f'iota({path_bar}, {lam.parts}) = {path} has the wrong particle count')
                if path in image:
                    report.fail(f'{path} hit twice: {image[path]} and {(path_bar, lam.parts)}')
                image[path] = (path_bar, lam.parts)
                if preimage != (path_bar, lam):
                    report.fail(f'iota_inverse({path}) = {preimage}, expected {(path_bar, lam.parts)}')
        report.per_particles[m] = count
    for path in enumerate_paths(params, L, r, N):
        if path not in image:
            report.fail(f'{path} (m={particle_count(params, path)}) is not in the image')
    logger.info(f'bijection {params} L={L} r={r} N={N}: {report.per_particles}, {len(report.failures)} failures')
    return report
