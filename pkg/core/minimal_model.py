"""
Minimal-model constants: conformal dimensions, path weights w and the
integers v that bound neighbouring riggings.

Integer part ``[x]`` is read as ``floor(x)`` everywhere.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .exceptions import InternalConsistencyError, InvalidParameters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModelParams:
    """A coprime pair (p, p') with 3 <= p < p'."""

    p: int
    pprime: int

    def __post_init__(self):
        for name, value in (('p', self.p), ('pprime', self.pprime)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParameters(f'{name} must be an integer, got {value!r}')
        if self.p < 3:
            raise InvalidParameters(f'p must be at least 3, got {self.p}')
        if self.pprime <= self.p:
            raise InvalidParameters(f"p' must exceed p, got ({self.p}, {self.pprime})")
        if math.gcd(self.p, self.pprime) != 1:
            raise InvalidParameters(f'({self.p}, {self.pprime}) are not coprime')

    @cached_property
    def t(self):
        return Fraction(self.pprime, self.p)

    def __str__(self):
        return f'({self.p},{self.pprime})'

    def check_r(self, r):
        if not 1 <= r <= self.p - 1:
            raise InvalidParameters(f'r must lie in 1..{self.p - 1}, got {r}')

    def check_s(self, s):
        if not 1 <= s <= self.pprime - 1:
            raise InvalidParameters(f's must lie in 1..{self.pprime - 1}, got {s}')


@lru_cache(maxsize=None)
def conformal_dim(params, r, s):
    """Delta_{r,s} = ((r t - s)^2 - (t - 1)^2) / 4t."""
    params.check_r(r)
    params.check_s(s)
    t = params.t
    return ((r * t - s) ** 2 - (t - 1) ** 2) / (4 * t)


def central_charge(params):
    t = params.t
    return 13 - 6 * (t + 1 / t)


@lru_cache(maxsize=None)
def weight_w(params, a, b, c):
    """Weight of the local configuration (a, b, c) of three consecutive heights."""
    p, t = params.p, params.t
    if not all(1 <= x <= p - 1 for x in (a, b, c)) or abs(a - b) != 1 or abs(b - c) != 1:
        raise InvalidParameters(f'({a},{b},{c}) is not a valid weight triple for p={p}')
    if a != c:
        return t / 2
    if (a, b) in ((1, 2), (p - 1, p - 2)):
        return 3 - 3 * t / 2
    r = a
    if b == r + 1:
        return 2 - t / 2 + math.floor(r * t) - r * t
    return 1 - t / 2 - math.floor(r * t) + r * t


def _v_closed_form(params, r):
    p, t = params.p, params.t
    if p == 3:
        return params.pprime - 5
    if r in (1, p - 2):
        return math.floor(2 * t) - 3
    return math.floor((r + 1) * t) - math.floor(r * t) - 2


@lru_cache(maxsize=None)
def v_int(params, r):
    """v(r) = 1 - w(r, r+1, r) - w(r+1, r, r+1), checked against its closed form."""
    if not 1 <= r <= params.p - 2:
        raise InvalidParameters(f'v is defined for 1 <= r <= {params.p - 2}, got {r}')
    value = 1 - weight_w(params, r, r + 1, r) - weight_w(params, r + 1, r, r + 1)
    if value.denominator != 1:
        raise InternalConsistencyError(f'v({r}) = {value} is not an integer for {params}')
    expected = _v_closed_form(params, r)
    if value != expected:
        raise InternalConsistencyError(
            f'v({r}) = {value} disagrees with closed form {expected} for {params}'
        )
    return int(value)


@lru_cache(maxsize=None)
def sigma_cap(params):
    """max(0, max_r v(r)): riggings beyond this never tighten any constraint."""
    return max([0] + [v_int(params, r) for r in range(1, params.p - 1)])


def reduced_params(params):
    """The model at level t - 1, i.e. (p, p' - p)."""
    reduced = params.pprime - params.p
    if reduced <= params.p:
        raise InvalidParameters(
            f'{params} has t <= 2; the level t-1 model (p={params.p}, p\'={reduced}) is not available'
        )
    return ModelParams(params.p, reduced)
