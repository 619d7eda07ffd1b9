"""
Rigged paths at level t = p'/p.

A rigged path of length L is a height sequence ``r_L, ..., r_0`` starting at
``r_0 = 1`` with unit steps, plus riggings ``sigma_{L-1}, ..., sigma_0``.
Both tuples are stored in that (descending index) order, matching the text
and JSON formats; ``rs`` and ``sigmas`` give index order.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from .exactq import INFINITY, QSeries, as_rational
from .exceptions import InadmissiblePath, InvalidParameters, PathStructureError
from .minimal_model import ModelParams, conformal_dim, sigma_cap, v_int, weight_w

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RiggedPath:
    r: tuple
    sigma: tuple

    def __post_init__(self):
        object.__setattr__(self, 'r', tuple(int(x) for x in self.r))
        object.__setattr__(self, 'sigma', tuple(int(x) for x in self.sigma))
        if not self.r:
            raise PathStructureError('a path needs at least the height r_0')
        if len(self.sigma) != len(self.r) - 1:
            raise PathStructureError(
                f'{len(self.r)} heights need {len(self.r) - 1} riggings, got {len(self.sigma)}'
            )
        if self.r[-1] != 1:
            raise PathStructureError(f'r_0 must be 1, got {self.r[-1]}')
        for upper, lower in zip(self.r, self.r[1:]):
            if abs(upper - lower) != 1:
                raise PathStructureError(f'heights {lower} -> {upper} do not differ by one')
            if min(upper, lower) < 1:
                raise PathStructureError(f'height {min(upper, lower)} is below 1')

    @classmethod
    def from_indexed(cls, rs, sigmas):
        """Build from index-ordered lists ``rs[i] = r_i`` and ``sigmas[i] = sigma_i``."""
        return cls(tuple(reversed(rs)), tuple(reversed(sigmas)))

    @classmethod
    def empty(cls):
        return cls((1,), ())

    @property
    def length(self):
        return len(self.sigma)

    @property
    def end(self):
        return self.r[0]

    @cached_property
    def rs(self):
        return self.r[::-1]

    @cached_property
    def sigmas(self):
        return self.sigma[::-1]

    def sigma_at(self, i):
        """sigma_i, with the sentinel sigma_L = INFINITY."""
        if i == self.length:
            return INFINITY
        return self.sigmas[i]

    def check_range(self, params):
        top = max(self.r)
        if top > params.p - 1:
            raise PathStructureError(f'height {top} exceeds p-1 = {params.p - 1}')

    def __str__(self):
        return format_path(self)


@dataclass(frozen=True)
class MonomialExponents:
    """Exponents ``n_L, ..., n_1`` attached to the heights ``r_L, ..., r_0``."""

    n: tuple
    r: tuple

    def __post_init__(self):
        object.__setattr__(self, 'n', tuple(as_rational(x) for x in self.n))
        object.__setattr__(self, 'r', tuple(int(x) for x in self.r))
        if len(self.n) != len(self.r) - 1:
            raise InvalidParameters(
                f'{len(self.r)} heights need {len(self.r) - 1} exponents, got {len(self.n)}'
            )

    @property
    def length(self):
        return len(self.n)

    def n_at(self, i):
        """n_i for 1 <= i <= L."""
        return self.n[self.length - i]

    def r_at(self, i):
        return self.r[self.length - i]


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    constraint: str = None
    index: int = None

    def __bool__(self):
        return self.ok

    def raise_if_failed(self):
        if not self.ok:
            raise InadmissiblePath(self.constraint, self.index)


def parse_path(text):
    """Parse ``r_L,...,r_0;s_{L-1},...,s_0``."""
    heights, sep, riggings = text.strip().partition(';')
    if not sep:
        raise PathStructureError(f'missing ";" in path {text!r}')
    try:
        r = tuple(int(x) for x in heights.split(',') if x.strip())
        sigma = tuple(int(x) for x in riggings.split(',') if x.strip())
    except ValueError as exc:
        raise PathStructureError(f'non-integer entry in path {text!r}') from exc
    return RiggedPath(r, sigma)


def format_path(path):
    return ','.join(map(str, path.r)) + ';' + ','.join(map(str, path.sigma))


def is_window(rs, i):
    """True when r_{i-1}, r_i, r_{i+1}, r_{i+2} take only two adjacent values."""
    return rs[i - 1] == rs[i + 1] and rs[i] == rs[i + 2]


def path_admissible(params, path):
    """Check sigma >= 0 and the window inequality sigma_i + sigma_{i+1} >= v(r)."""
    path.check_range(params)
    rs, sigmas, L = path.rs, path.sigmas, path.length
    for i, sigma in enumerate(sigmas):
        if sigma < 0:
            return AdmissibilityReport(False, 'sigma>=0', i)
    for i in range(1, L - 1):
        if is_window(rs, i) and sigmas[i] + sigmas[i + 1] < v_int(params, min(rs[i], rs[i + 1])):
            return AdmissibilityReport(False, 'AD2', i)
    return AdmissibilityReport(True)


def _base_degree(params, rs):
    """Degree of the path with all riggings zero."""
    L = len(rs) - 1
    total = L * conformal_dim(params, 2, 1) if L else as_rational(0)
    for i in range(1, L):
        total += (L - i) * weight_w(params, rs[i + 1], rs[i], rs[i - 1])
    return total


def path_degree(params, path):
    path_admissible(params, path).raise_if_failed()
    L = path.length
    return _base_degree(params, path.rs) + sum((L - i) * s for i, s in enumerate(path.sigmas))


@lru_cache(maxsize=256)
def _remainder_bound(params, L, target):
    """
    Minimal cost of completing a path from step k on.

    Step k picks r_{k+1} and sigma_k and costs (L - k)(sigma_k + w(r_{k+1}, r_k, r_{k-1})).
    The state keeps the last three heights and sigma_{k-1} clipped to the v cap.
    Returns None when no completion ending at ``target`` exists.
    """
    vcap = sigma_cap(params)
    top = params.p - 1

    @lru_cache(maxsize=None)
    def best(k, prev2, prev, cur, last):
        if abs(cur - target) > L - k:
            return None
        if k == L:
            return 0
        result = None
        for nxt in (cur - 1, cur + 1):
            if not 1 <= nxt <= top:
                continue
            weight = weight_w(params, nxt, cur, prev) if k >= 1 else 0
            windowed = k >= 2 and prev2 == cur and prev == nxt
            need = v_int(params, min(prev, cur)) if windowed else None
            for s in range(vcap + 1):
                if need is not None and last + s < need:
                    continue
                rest = best(k + 1, prev, cur, nxt, min(s, vcap))
                if rest is None:
                    continue
                cost = (L - k) * (s + weight) + rest
                if result is None or cost < result:
                    result = cost
        return result

    return best


def min_degree(params, L, r):
    """Smallest degree in C_{L,r}, or None when the set is empty."""
    if L < 0:
        raise InvalidParameters(f'L must be nonnegative, got {L}')
    params.check_r(r)
    if (L + 1 - r) % 2 or r > L + 1:
        return None
    if L == 0:
        return as_rational(0)
    rest = _remainder_bound(params, L, r)(0, None, None, 1, None)
    if rest is None:
        return None
    return L * conformal_dim(params, 2, 1) + rest


def enumerate_paths(params, L, r, max_degree):
    """All admissible paths of length L ending at r with degree <= max_degree, sorted."""
    max_degree = as_rational(max_degree)
    lowest = min_degree(params, L, r)
    if lowest is None or lowest > max_degree:
        return []
    if L == 0:
        return [RiggedPath.empty()]
    best = _remainder_bound(params, L, r)
    vcap = sigma_cap(params)
    top = params.p - 1
    base = L * conformal_dim(params, 2, 1)
    rs, sigmas, found = [1], [], []

    def walk(k, acc, last):
        cur = rs[k]
        prev = rs[k - 1] if k >= 1 else None
        prev2 = rs[k - 2] if k >= 2 else None
        for nxt in (cur - 1, cur + 1):
            if not 1 <= nxt <= top:
                continue
            weight = weight_w(params, nxt, cur, prev) if k >= 1 else 0
            windowed = k >= 2 and prev2 == cur and prev == nxt
            need = v_int(params, min(prev, cur)) if windowed else None
            s = 0
            while True:
                clipped = min(s, vcap)
                allowed = need is None or last + s >= need
                rest = best(k + 1, prev, cur, nxt, clipped) if allowed else None
                cost = acc + (L - k) * (s + weight)
                if rest is not None and base + cost + rest <= max_degree:
                    rs.append(nxt)
                    sigmas.append(s)
                    if k + 1 == L:
                        found.append(RiggedPath.from_indexed(rs, sigmas))
                    else:
                        walk(k + 1, cost, clipped)
                    rs.pop()
                    sigmas.pop()
                elif s >= vcap:
                    break
                s += 1

    walk(0, 0, None)
    found.sort(key=lambda path: (path.r, path.sigma))
    logger.debug(f'enumerate_paths {params} L={L} r={r} max={max_degree}: {len(found)} paths')
    return found


def _height_sequences(params, L, r):
    """Every unit-step height sequence r_0 = 1, ..., r_L = r in 1..p-1 (index order)."""
    for steps in product((-1, 1), repeat=L):
        rs = [1]
        for step in steps:
            rs.append(rs[-1] + step)
        if rs[-1] == r and all(1 <= x <= params.p - 1 for x in rs):
            yield rs


def _sigma_vectors(L, budget):
    """All sigma_0..sigma_{L-1} >= 0 with sum (L - i) sigma_i <= budget."""
    if budget < 0:
        return
    if L == 0:
        yield []
        return

    def extend(i, remaining, acc):
        if i == L:
            yield list(acc)
            return
        weight = L - i
        s = 0
        while s * weight <= remaining:
            acc.append(s)
            yield from extend(i + 1, remaining - s * weight, acc)
            acc.pop()
            s += 1

    yield from extend(0, budget, [])


def brute_force_paths(params, L, r, max_degree, check_windows=True):
    """
    Unpruned oracle for :func:`enumerate_paths`.

    With ``check_windows=False`` only sigma >= 0 is imposed.
    """
    max_degree = as_rational(max_degree)
    params.check_r(r)
    found = []
    for rs in _height_sequences(params, L, r):
        base = _base_degree(params, rs)
        for sigmas in _sigma_vectors(L, max_degree - base):
            path = RiggedPath.from_indexed(rs, sigmas)
            if not check_windows or path_admissible(params, path):
                found.append(path)
    found.sort(key=lambda path: (path.r, path.sigma))
    return found


def char_paths(params, L, r, N):
    """Graded character of C_{L,r} truncated at N."""
    N = as_rational(N)
    degrees = Counter(path_degree(params, path) for path in enumerate_paths(params, L, r, N))
    return QSeries(degrees, N)


# Riggings versus monomial exponents


def raw_exponents(params, rs, sigmas):
    """n_1..n_L (index order) for any riggings, admissible or not."""
    ns = []
    if sigmas:
        ns.append(conformal_dim(params, 2, 1) + sigmas[0])
    for i in range(1, len(sigmas)):
        ns.append(ns[-1] + weight_w(params, rs[i + 1], rs[i], rs[i - 1]) + sigmas[i])
    return MonomialExponents(tuple(reversed(ns)), tuple(reversed(rs)))


def exponents_from_path(params, path):
    path_admissible(params, path).raise_if_failed()
    return raw_exponents(params, path.rs, path.sigmas)


def path_from_exponents(params, monomial):
    """Recover riggings from exponents; raises InadmissiblePath naming HW, WA, AD or grid."""
    skeleton = RiggedPath(monomial.r, (0,) * monomial.length)
    skeleton.check_range(params)
    rs, L = skeleton.rs, monomial.length
    ns = [None] + [monomial.n_at(i) for i in range(1, L + 1)]
    raw = []
    if L:
        raw.append(ns[1] - conformal_dim(params, 2, 1))
    for i in range(1, L):
        raw.append(ns[i + 1] - ns[i] - weight_w(params, rs[i + 1], rs[i], rs[i - 1]))
    for i, value in enumerate(raw):
        if value.denominator != 1:
            raise InadmissiblePath('grid', i + 1, f'n_{i + 1} = {ns[i + 1]} is off the exponent grid')
    if raw and raw[0] < 0:
        raise InadmissiblePath('HW', 1)
    for i, value in enumerate(raw[1:], start=1):
        if value < 0:
            raise InadmissiblePath('WA', i)
    for i in range(1, L - 1):
        if is_window(rs, i) and ns[i + 2] - ns[i] < 1:
            raise InadmissiblePath('AD', i)
    return RiggedPath.from_indexed(rs, [int(value) for value in raw])


# p = 3 specialisations


def _p3_params(pprime):
    return ModelParams(3, pprime)


def p3_admissible(pprime, monomial):
    """The p = 3 conditions on exponents; off-grid exponents are not admissible."""
    params = _p3_params(pprime)
    L = monomial.length
    for i in range(L + 1):
        if monomial.r_at(i) != (2 if i % 2 else 1):
            raise PathStructureError(f'p=3 heights must alternate 1,2,1,...; got {monomial.r}')
    delta = conformal_dim(params, 2, 1)
    ns = [None] + [monomial.n_at(i) for i in range(1, L + 1)]
    for i in range(1, L + 1):
        if (ns[i] + (-1) ** i * delta).denominator != 1:
            return False
    if L and ns[1] < delta:
        return False
    floor_gap = 3 - as_rational(pprime) / 2
    if any(ns[i + 1] - ns[i] < floor_gap for i in range(1, L)):
        return False
    return all(ns[i + 2] - ns[i] >= 1 for i in range(1, L - 1))


def w3_monomial_admissible(pprime, lam):
    """lam = (lam_L, ..., lam_1) weakly decreasing, positive, with lam_{i+2} - lam_i >= p' - 2."""
    _p3_params(pprime)
    ordered = list(reversed(lam))
    if any(x < 1 for x in ordered):
        return False
    if any(b < a for a, b in zip(ordered, ordered[1:])):
        return False
    return all(ordered[i + 2] - ordered[i] >= pprime - 2 for i in range(len(ordered) - 2))


def enumerate_w3_monomials(pprime, L, max_degree):
    _p3_params(pprime)
    max_degree = as_rational(max_degree)
    gap = pprime - 2
    found = []
    acc = []

    def extend(total):
        i = len(acc)
        if i == L:
            found.append(tuple(reversed(acc)))
            return
        low = 1 if i == 0 else acc[-1]
        if i >= 2:
            low = max(low, acc[-2] + gap)
        x = low
        # later entries are at least x each
        while total + x * (L - i) <= max_degree:
            acc.append(x)
            extend(total + x)
            acc.pop()
            x += 1

    extend(0)
    found.sort()
    return found


def char_w3_monomials(pprime, L, N):
    N = as_rational(N)
    return QSeries(Counter(sum(lam) for lam in enumerate_w3_monomials(pprime, L, N)), N)


def check_p3_translation(pprime, L, r, max_degree):
    """
    Compare p3_admissible with path_admissible on every rigging below max_degree.

    Each zero rigging is also tried at -1 so the HW and WA conditions get exercised.
    Returns (number of cases, list of mismatching paths).
    """
    params = _p3_params(pprime)
    max_degree = as_rational(max_degree)
    checked, mismatches = 0, []
    for rs in _height_sequences(params, L, r):
        for sigmas in _sigma_vectors(L, max_degree - _base_degree(params, rs)):
            variants = [sigmas] + [
                sigmas[:i] + [-1] + sigmas[i + 1:] for i in range(L) if sigmas[i] == 0
            ]
            for candidate in variants:
                path = RiggedPath.from_indexed(rs, candidate)
                expected = bool(path_admissible(params, path))
                checked += 1
                if p3_admissible(pprime, raw_exponents(params, rs, candidate)) != expected:
                    mismatches.append(format_path(path))
    return checked, mismatches
