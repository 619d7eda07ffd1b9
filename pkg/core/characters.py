"""
Virasoro minimal-model characters and the q-series identities around them.

Every function returns or compares :class:`~core.exactq.QSeries` values
truncated at an explicit bound ``N``.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactq import QSeries, as_rational, euler_inverse, gauss_binom, inv_poch, inv_poch_product
from .exceptions import InternalConsistencyError, InvalidParameters, LCapReached
from .minimal_model import conformal_dim, reduced_params
from .path_comb import char_paths, min_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one truncated comparison."""

    ok: bool
    label: str = ''
    first_diff: tuple = None
    detail: str = ''
    skipped: bool = False
    capped: bool = False

    @classmethod
    def skip(cls, label, detail):
        return cls(True, label, None, detail, skipped=True)

    @classmethod
    def cap(cls, label, detail):
        return cls(False, label, None, detail, capped=True)


def compare_series(label, left, right, N):
    diff = left.first_diff(right, N)
    if diff is None:
        logger.info(f'{label}: agree up to q^{N}')
        return Verdict(True, label)
    exp, lhs, rhs = diff
    logger.error(f'{label}: first difference at q^{exp}: {lhs} != {rhs}')
    return Verdict(False, label, diff, f'coefficient of q^{exp}: {lhs} != {rhs}')


def _zero_if_negative(bound):
    bound = as_rational(bound)
    return euler_inverse(bound) if bound >= 0 else QSeries.zero(bound)


# Bosonic side


def _theta_exponents(params, r, s, bound):
    """Exponents (with sign) of the two alternating theta sums that are <= bound."""
    p, pp = params.p, params.pprime
    terms = []

    def first(n):
        return p * pp * n * n + (pp * r - p * s) * n

    def second(n):
        return (p * n + r) * (pp * n + s)

    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            a, b = first(n), second(n)
            if a > bound and b > bound:
                break
            if a <= bound:
                terms.append((a, 1))
            if b <= bound:
                terms.append((b, -1))
            n += direction
    return terms


def char_bosonic(params, r, s, N):
    """q^Delta / (q)_inf times the alternating theta sums, truncated at N."""
    N = as_rational(N)
    delta = conformal_dim(params, r, s)
    bound = N - delta
    if bound < 0:
        return QSeries.zero(N)
    theta = {}
    for exp, sign in _theta_exponents(params, r, s, bound):
        theta[exp] = theta.get(exp, 0) + sign
    logger.debug(f'char_bosonic {params} r={r} s={s}: {len(theta)} theta exponents below {bound}')
    return (QSeries(theta, bound) * euler_inverse(bound)).shift(delta)


# Fermionic side


def kostka_poly(p, pbar, m, r):
    """The finite alternating sum of Gaussian binomials K_{m,r}, as an exact polynomial."""
    if m < 0 or pbar <= 0:
        raise InvalidParameters(f'K needs m >= 0 and pbar > 0, got m={m} pbar={pbar}')
    if (m - r + 1) % 2:
        return QSeries.zero()
    total = QSeries.zero()
    low, high = (m - r + 1) // 2, (m + r + 1) // 2
    reach = (m + r) // p + 2
    for n in range(-reach, reach + 1):
        piece = gauss_binom(m, low - p * n) - gauss_binom(m, high + p * n)
        if not piece.is_zero():
            total = total + piece.shift(p * pbar * n * n + pbar * n * r)
    return total.shift(Fraction(m * m - (r - 1) ** 2, 4))


def q_form_eval(k, m):
    """Q^(k)(m_0, ..., m_{k-1})."""
    m = list(m)
    if k < 1 or len(m) != k:
        raise InvalidParameters(f'Q^({k}) takes {k} arguments, got {len(m)}')
    m0, rest = m[0], m[1:]
    value = Fraction(k - 1, 4) * m0 * m0 + Fraction(k - 1, 2) * m0
    for j, mj in enumerate(rest, start=1):
        value += (k - j) * (mj * mj + m0 * mj + mj)
    for j, mj in enumerate(rest, start=1):
        for jj in range(j + 1, k):
            value += 2 * (k - jj) * mj * rest[jj - 1]
    return value


def _fermionic_level(params):
    k = math.floor(params.t)
    if k < 1 or params.t == k:
        raise InternalConsistencyError(f'{params} has integral or sub-unit t')
    return k, params.pprime - k * params.p


def _fermionic_vectors(k, r, N, offset, length=None):
    """
    Vectors (m_0, ..., m_{k-1}) whose summand can reach exponent <= N.

    ``offset`` is the constant part of the exponent; the lower bound
    offset + Q(m) + (m_0^2 - (r-1)^2)/4 grows in every coordinate.
    """
    def floor_of(m0, rest):
        return offset + q_form_eval(k, [m0] + rest) + Fraction(m0 * m0 - (r - 1) ** 2, 4)

    def extend(m0, rest):
        if len(rest) == k - 1:
            if length is None or m0 + 2 * sum(rest) == length:
                yield m0, tuple(rest)
            return
        x = 0
        while True:
            candidate = rest + [x]
            padded = candidate + [0] * (k - 1 - len(candidate))
            if floor_of(m0, padded) > N:
                break
            if length is not None and m0 + 2 * sum(candidate) > length:
                break
            yield from extend(m0, candidate)
            x += 1

    if length is not None:
        if (length - r + 1) % 2:
            return
        starts = range(length % 2, length + 1, 2)
    else:
        starts = _count_from((r - 1) % 2, 2)
    for m0 in starts:
        if floor_of(m0, [0] * (k - 1)) > N:
            break
        yield from extend(m0, [])


def _count_from(start, step):
    value = start
    while True:
        yield value
        value += step


def _fermionic_sum(params, r, N, length=None):
    N = as_rational(N)
    params.check_r(r)
    k, pbar = _fermionic_level(params)
    offset = conformal_dim(params, r, 1) - Fraction((k - 1) * (r * r - 1), 4)
    total = QSeries.zero(N)
    count = 0
    for m0, rest in _fermionic_vectors(k, r, N, offset, length):
        kostka = kostka_poly(params.p, pbar, m0, r)
        lowest = kostka.valuation()
        if lowest is None:
            continue
        exp = offset + q_form_eval(k, (m0,) + rest)
        room = N - exp - lowest
        if room < 0:
            continue
        term = inv_poch_product((m0,) + rest, room) * kostka
        total = total + term.shift(exp)
        count += 1
    logger.debug(f'fermionic sum {params} r={r} L={length}: {count} terms up to {N}')
    return total.truncate(N)


def char_fermionic(params, r, N):
    return _fermionic_sum(params, r, N)


def char_partial(params, r, L, N):
    """The part of :func:`char_fermionic` with m_0 + 2(m_1 + ... + m_{k-1}) = L."""
    if L < 0:
        raise InvalidParameters(f'L must be nonnegative, got {L}')
    return _fermionic_sum(params, r, N, length=L)


# Recurrences and the path-sum identity


def _recurrence_rhs(L, N, lower):
    """sum_m q^{L^2/4 + L/2} / (q)_m * lower(L - 2m, N - e)."""
    N = as_rational(N)
    exp = Fraction(L * L, 4) + Fraction(L, 2)
    room = N - exp
    total = QSeries.zero(N)
    if room < 0:
        return total
    for m in range(L // 2 + 1):
        total = total + (inv_poch(m, room) * lower(L - 2 * m, room)).shift(exp)
    return total.truncate(N)


def verify_char_recurrence(params, r, L, N):
    reduced = reduced_params(params)
    N = as_rational(N)
    left = char_partial(params, r, L, N)
    right = _recurrence_rhs(L, N, lambda length, bound: char_partial(reduced, r, length, bound))
    return compare_series(f'char recurrence {params} r={r} L={L}', left, right, N)


def verify_path_recurrence(params, r, L, N):
    reduced = reduced_params(params)
    N = as_rational(N)
    left = char_paths(params, L, r, N)
    right = _recurrence_rhs(L, N, lambda length, bound: char_paths(reduced, length, r, bound))
    return compare_series(f'path recurrence {params} r={r} L={L}', left, right, N)


def char_main_sum(params, r, N, l_cap):
    """
    Sum of char_paths over L, returning (series, last L examined).

    L runs over the parity of r - 1 and stops once two consecutive lengths
    have minimal degree above N.
    """
    N = as_rational(N)
    params.check_r(r)
    total = QSeries.zero(N)
    L, above = r - 1, 0
    while above < 2:
        if L > l_cap:
            logger.warning(f'char_main_sum {params} r={r} N={N}: L cap {l_cap} reached')
            raise LCapReached(l_cap)
        lowest = min_degree(params, L, r)
        if lowest is None or lowest > N:
            above += 1
        else:
            above = 0
            total = total + char_paths(params, L, r, N)
        logger.debug(f'char_main_sum {params} r={r}: L={L} min degree {lowest}')
        L += 2
    return total, L - 2


def verify_main_theorem(params, r, N, l_cap=64):
    N = as_rational(N)
    paths, largest = char_main_sum(params, r, N, l_cap)
    verdict = compare_series(f'path sum vs bosonic {params} r={r}', paths, char_bosonic(params, r, 1, N), N)
    logger.info(f'path sum {params} r={r} N={N} used L <= {largest}')
    return verdict


# Auxiliary multi-sums


def _chain_sum(length, mu_first, mu_rest, mu_den, N):
    """
    sum over N_0 <= N_1 <= ... <= N_{length-1}, N_0 >= max(0, -mu_den) of
    q^{sum N_j^2 + mu_first N_0 + mu_rest sum_{j>=1} N_j} /
    ((q)_{N_0 + mu_den} (q)_{N_0} prod (q)_{N_j - N_{j-1}}).
    """
    N = as_rational(N)
    total = QSeries.zero(N)
    if N < 0:
        return total
    chain = []

    def extend(exp):
        nonlocal total
        if len(chain) == length:
            first = chain[0]
            gaps = [b - a for a, b in zip(chain, chain[1:])]
            term = inv_poch_product([first + mu_den, first] + gaps, N - exp)
            total = total + term.shift(exp)
            return
        if chain:
            x, mu = chain[-1], mu_rest
        else:
            x, mu = max(0, -mu_den), mu_first
        while True:
            step = x * x + mu * x
            if exp + step > N:
                break
            chain.append(x)
            extend(exp + step)
            chain.pop()
            x += 1

    extend(0)
    return total.truncate(N)


def f_k_series(k, mu, N):
    """F_k(mu) truncated at N."""
    if k < 1:
        raise InvalidParameters(f'k must be positive, got {k}')
    return _chain_sum(k, mu, mu + 1, mu, N)


def gauss_multisum(l, mu, N):
    if l < 0:
        raise InvalidParameters(f'l must be nonnegative, got {l}')
    return _chain_sum(l + 1, mu, mu, mu, N)


def verify_gauss_identity(l, mu, N):
    N = as_rational(N)
    return compare_series(f'Gauss multi-sum l={l} mu={mu}', gauss_multisum(l, mu, N), euler_inverse(N), N)


def verify_fk_identity(k, mu, N):
    """F_k(mu - 1) - q^mu F_k(-mu - 1) against (1 - q^mu) / (q)_inf."""
    N = as_rational(N)
    left = f_k_series(k, mu - 1, N) - f_k_series(k, -mu - 1, N - mu).shift(mu)
    right = euler_inverse(N) - _zero_if_negative(N - mu).shift(mu)
    return compare_series(f'F_{k} identity mu={mu}', left, right, N)
