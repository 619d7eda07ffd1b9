"""
Exact arithmetic kernel.

Exponents are ``fractions.Fraction`` values, coefficients are Python ints.
A :class:`QSeries` carries its own truncation bound ``trunc``: coefficients
at exponents above it are unknown.  ``trunc is None`` marks an exact
(finite) polynomial such as a Gaussian binomial.
"""
import logging
import math
from fractions import Fraction
from functools import lru_cache

from .exceptions import InvalidParameters

logger = logging.getLogger(__name__)


def as_rational(value):
    """Coerce an int, Fraction or ``num/den`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not rationals')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParameters(f'not a rational number: {value!r}') from exc
    raise TypeError(f'cannot interpret {value!r} as an exact rational')


def format_rational(value):
    value = as_rational(value)
    return f'{value.numerator}/{value.denominator}'


class _Infinity:
    """The sentinel rigging sigma_L; absorbs every finite increment."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError('INFINITY - INFINITY is undefined')
        return self

    def __rsub__(self, other):
        raise ArithmeticError('finite - INFINITY is undefined')

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash('virapath-infinity')

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return 'INFINITY'


INFINITY = _Infinity()


class QSeries:
    """Truncated formal q-series with integer coefficients at rational exponents."""

    __slots__ = ('_terms', 'trunc')

    def __init__(self, terms=None, trunc=None):
        bound = None if trunc is None else as_rational(trunc)
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = as_rational(exp)
            if bound is not None and exp > bound:
                continue
            clean[exp] = clean.get(exp, 0) + int(coeff)
        self._terms = {exp: coeff for exp, coeff in clean.items() if coeff}
        self.trunc = bound

    # Constructors

    @classmethod
    def zero(cls, trunc=None):
        return cls({}, trunc)

    @classmethod
    def one(cls, trunc=None):
        return cls({0: 1}, trunc)

    @classmethod
    def monomial(cls, exp, coeff=1, trunc=None):
        return cls({exp: coeff}, trunc)

    @classmethod
    def from_coefficients(cls, coeffs, trunc=None, offset=0):
        """Dense integer-spaced coefficients starting at ``offset``."""
        offset = as_rational(offset)
        return cls({offset + i: c for i, c in enumerate(coeffs) if c}, trunc)

    # Inspection

    @property
    def is_exact(self):
        return self.trunc is None

    def is_zero(self):
        return not self._terms

    def items(self):
        return sorted(self._terms.items())

    def as_dict(self):
        return dict(self._terms)

    def coeff(self, exp):
        exp = as_rational(exp)
        if self.trunc is not None and exp > self.trunc:
            raise ValueError(f'coefficient at q^{exp} lies beyond truncation {self.trunc}')
        return self._terms.get(exp, 0)

    def valuation(self):
        return min(self._terms) if self._terms else None

    def at_one(self):
        """Sum of coefficients; only meaningful for exact polynomials."""
        if self.trunc is not None:
            raise ValueError('evaluation at q=1 needs an exact polynomial')
        return sum(self._terms.values())

    def _lower(self):
        # Lower bound on the true valuation; None means the exact zero series.
        if self._terms:
            return min(self._terms)
        return self.trunc

    # Arithmetic

    def truncate(self, bound):
        bound = as_rational(bound)
        if self.trunc is not None and bound > self.trunc:
            raise ValueError(f'cannot raise truncation from {self.trunc} to {bound}')
        return QSeries(self._terms, bound)

    def shift(self, exp):
        """Multiply by q^exp."""
        exp = as_rational(exp)
        trunc = None if self.trunc is None else self.trunc + exp
        return QSeries({e + exp: c for e, c in self._terms.items()}, trunc)

    def __neg__(self):
        return QSeries({e: -c for e, c in self._terms.items()}, self.trunc)

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries.one() * other
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = _min_bound(self.trunc, other.trunc)
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return QSeries(terms, trunc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QSeries.one() * other
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return QSeries({e: c * other for e, c in self._terms.items()}, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        if (not self._terms and self.trunc is None) or (not other._terms and other.trunc is None):
            return QSeries.zero()
        bounds = []
        if self.trunc is not None:
            bounds.append(self.trunc + other._lower())
        if other.trunc is not None:
            bounds.append(other.trunc + self._lower())
        trunc = min(bounds) if bounds else None
        right = sorted(other._terms.items())
        terms = {}
        for ea, ca in self._terms.items():
            for eb, cb in right:
                exp = ea + eb
                if trunc is not None and exp > trunc:
                    break
                terms[exp] = terms.get(exp, 0) + ca * cb
        return QSeries(terms, trunc)

    __rmul__ = __mul__

    # Comparison

    def first_diff(self, other, bound):
        """Smallest exponent <= bound where the coefficients differ, or None."""
        bound = as_rational(bound)
        for series in (self, other):
            if series.trunc is not None and bound > series.trunc:
                raise ValueError(f'comparison up to {bound} exceeds truncation {series.trunc}')
        exps = sorted(e for e in set(self._terms) | set(other._terms) if e <= bound)
        for exp in exps:
            left, right = self._terms.get(exp, 0), other._terms.get(exp, 0)
            if left != right:
                return exp, left, right
        return None

    def equal_up_to(self, other, bound):
        return self.first_diff(other, bound) is None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._terms == other._terms

    def __hash__(self):
        return hash((self.trunc, frozenset(self._terms.items())))

    def __repr__(self):
        return f'QSeries({self})'

    def __str__(self):
        parts = []
        for exp, coeff in self.items():
            if exp == 0:
                parts.append(str(coeff))
                continue
            power = 'q' if exp == 1 else f'q^{exp}' if exp.denominator == 1 else f'q^({exp})'
            if coeff == 1:
                parts.append(power)
            elif coeff == -1:
                parts.append(f'-{power}')
            else:
                parts.append(f'{coeff}*{power}')
        text = ' + '.join(parts).replace('+ -', '- ') if parts else '0'
        if self.trunc is not None:
            text += f' + O(q^({self.trunc}))' if self.trunc.denominator != 1 else f' + O(q^{self.trunc + 1})'
        return text


def _min_bound(left, right):
    if left is None:
        return right
    if right is None:
        return left
    return min(left, right)


def _top(bound):
    """Largest integer exponent not above ``bound``."""
    return math.floor(as_rational(bound))


# q-Pochhammer symbols and Gaussian binomials


@lru_cache(maxsize=None)
def _poch_coeffs(n):
    coeffs = [1]
    for j in range(1, n + 1):
        product = coeffs + [0] * j
        for i, c in enumerate(coeffs):
            product[i + j] -= c
        coeffs = product
    return tuple(coeffs)


@lru_cache(maxsize=4096)
def _inv_poch_product_coeffs(ns, top):
    if top < 0:
        return ()
    coeffs = [0] * (top + 1)
    coeffs[0] = 1
    for n in ns:
        for j in range(1, min(n, top) + 1):
            for i in range(j, top + 1):
                coeffs[i] += coeffs[i - j]
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _gauss_coeffs(m, n):
    if m < 0 or n < 0 or n > m:
        return ()
    if n == 0 or n == m:
        return (1,)
    # [m, n] = [m-1, n-1] + q^n [m-1, n]
    lower, upper = _gauss_coeffs(m - 1, n - 1), _gauss_coeffs(m - 1, n)
    coeffs = [0] * (n * (m - n) + 1)
    for i, c in enumerate(lower):
        coeffs[i] += c
    for i, c in enumerate(upper):
        coeffs[i + n] += c
    return tuple(coeffs)


def poch(n, bound=None):
    """(q)_n = prod_{j=1}^n (1 - q^j), exact unless ``bound`` is given."""
    if n < 0:
        raise InvalidParameters(f'(q)_n needs n >= 0, got {n}')
    series = QSeries.from_coefficients(_poch_coeffs(n))
    return series if bound is None else series.truncate(bound)


def inv_poch(n, bound):
    """1/(q)_n as a power series truncated at ``bound``; zero for n < 0."""
    bound = as_rational(bound)
    if n < 0:
        return QSeries.zero(bound)
    return QSeries.from_coefficients(_inv_poch_product_coeffs((n,), _top(bound)), bound)


def inv_poch_product(ns, bound):
    """prod_j 1/(q)_{n_j} truncated at ``bound``."""
    bound = as_rational(bound)
    if any(n < 0 for n in ns):
        return QSeries.zero(bound)
    key = tuple(sorted(n for n in ns if n > 0))
    return QSeries.from_coefficients(_inv_poch_product_coeffs(key, _top(bound)), bound)


def euler_inverse(bound):
    """1/(q)_infinity truncated at ``bound``: the partition generating function."""
    bound = as_rational(bound)
    if bound < 0:
        raise InvalidParameters(f'truncation must be >= 0, got {bound}')
    top = _top(bound)
    return QSeries.from_coefficients(_inv_poch_product_coeffs((top,), top), bound)


def gauss_binom(m, n):
    """Gaussian binomial [m over n] as an exact polynomial (0 outside 0 <= n <= m)."""
    return QSeries.from_coefficients(_gauss_coeffs(m, n))
