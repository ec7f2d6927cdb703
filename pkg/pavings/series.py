# =================================================================
#
# Copyright (c) 2026 The pavings authors
#
# Permission is hereby granted, free of charge, to any person
# obtaining a copy of this software and associated documentation
# files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use,
# copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following
# conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
# OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
# HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
# WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
# =================================================================

"""
Truncated formal power series over the rationals, and the counting
series of rooted and unlabeled pavings built from them.

A `Series` of order N knows the coefficients of z^0 .. z^N exactly;
everything beyond N is undefined. No floating point is used except in
the asymptotic evaluators, which work in mpmath at configurable precision.
"""

from fractions import Fraction
from math import factorial
import logging

import click
from mpmath import mp, mpf

from pavings import config
from pavings.enumeration import (EnumerationError, check_darts,
                                 enumerate_pavings)
from pavings.perm import double_factorial
from pavings.report import CheckReport, OUTPUT_FORMATS, write_sequence
from pavings.util import fraction2str

LOGGER = logging.getLogger(__name__)


class SeriesError(ValueError):
    """custom exception handler"""

    def __init__(self, message, code=401, **kwargs):
        super(SeriesError, self).__init__(message)
        self.code = code
        self.kwargs = kwargs


class Series(object):
    """
    Dense power series truncated at a fixed order
    """

    __slots__ = ('coeffs', 'order')

    def __init__(self, coeffs, order=None):
        """
        :param coeffs: iterable of exact coefficients (index k is z^k)
        :param order: truncation order N (default: len(coeffs) - 1);
                      missing coefficients up to N are zero
        """

        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            msg = f'Negative series order {order}'
            LOGGER.error(msg)
            raise SeriesError(msg, code=408, index=order, order=order)

        coeffs = coeffs[:order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))

        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def __getitem__(self, k):
        if not 0 <= k <= self.order:
            msg = f'Coefficient {k} beyond truncation order {self.order}'
            LOGGER.error(msg)
            raise SeriesError(msg, code=408, index=k, order=self.order)
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __add__(self, other):
        other = _coerce(other, self.order)
        order = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k]
                       for k in range(order + 1)], order)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)

        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return Series([sum(a[i] * b[k - i] for i in range(k + 1))
                       for k in range(order + 1)], order)

    __rmul__ = __mul__

    def scale(self, factor):
        factor = Fraction(factor)
        return Series([factor * c for c in self.coeffs], self.order)

    def shift(self, k):
        """multiply by z^k (the order grows by k)"""

        return Series([0] * k + list(self.coeffs), self.order + k)

    def truncate(self, order):
        return Series(self.coeffs, min(order, self.order))

    def derivative(self):
        """d/dz; one order is lost"""

        if self.order == 0:
            return Series([0], 0)
        return Series([k * self.coeffs[k] for k in range(1, self.order + 1)],
                      self.order - 1)

    def integral(self):
        """antiderivative with zero constant term"""

        return Series([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)],
                      self.order + 1)

    def theta(self):
        """z d/dz, keeping the order"""

        return Series([k * c for k, c in enumerate(self.coeffs)], self.order)

    def substitute(self, k, order=None):
        """
        z -> z^k

        :param k: positive exponent
        :param order: order of the result (default: k * self.order)
        """

        if order is None:
            order = k * self.order
        coeffs = [Fraction(0)] * (order + 1)
        for j, c in enumerate(self.coeffs):
            if j * k > order:
                break
            coeffs[j * k] = c
        return Series(coeffs, order)

    def laplace(self):
        """plain coefficients to EGF values: c_n -> c_n n!"""

        return [c * factorial(n) for n, c in enumerate(self.coeffs)]

    def exp(self):
        """
        Formal exponential; the constant term must vanish.
        n e_n = sum_{k=1..n} k f_k e_{n-k}
        """

        f = self.coeffs
        if f[0] != 0:
            msg = f'Exponential needs constant term 0, got {f[0]}'
            LOGGER.error(msg)
            raise SeriesError(msg, code=407, constant=f[0])

        e = [Fraction(1)]
        for n in range(1, self.order + 1):
            e.append(sum(k * f[k] * e[n - k] for k in range(1, n + 1)) / n)
        return Series(e, self.order)

    def log(self):
        """
        Formal logarithm; the constant term must be 1.
        n g_n = n f_n - sum_{k=1..n-1} k g_k f_{n-k}
        """

        f = self.coeffs
        if f[0] != 1:
            msg = f'Logarithm needs constant term 1, got {f[0]}'
            LOGGER.error(msg)
            raise SeriesError(msg, code=402, constant=f[0])

        g = [Fraction(0)]
        for n in range(1, self.order + 1):
            total = n * f[n] - sum(k * g[k] * f[n - k] for k in range(1, n))
            g.append(total / n)
        return Series(g, self.order)

    def integers(self):
        """
        :returns: `list` of int coefficients; raises if any is fractional
        """

        values = []
        for k, c in enumerate(self.coeffs):
            if c.denominator != 1:
                msg = f'Non-integral coefficient {c} at index {k}'
                LOGGER.error(msg)
                raise SeriesError(msg, code=403, index=k, value=c)
            values.append(c.numerator)
        return values

    def __repr__(self):
        terms = [f'{c}*z^{k}' for k, c in enumerate(self.coeffs) if c]
        body = ' + '.join(terms[:6]) or '0'
        if len(terms) > 6:
            body += ' + ...'
        return f'Series({body}, order={self.order})'


def _coerce(value, order):
    if isinstance(value, Series):
        return value
    return Series([value], order)


def series_to_dict(s):
    """
    :param s: `Series`
    :returns: `dict` with exact coefficient strings
    """

    return {
        'order': s.order,
        'coeffs': [fraction2str(c) for c in s.coeffs]
    }


def series_from_dict(dict_):
    """
    :param dict_: `dict` as produced by `series_to_dict`
    :returns: `Series`
    """

    return Series([Fraction(c) for c in dict_['coeffs']], dict_['order'])


def exp_series(order):
    """
    :param order: truncation order
    :returns: e^z, the unit of the Hadamard product
    """

    return Series([Fraction(1, factorial(k)) for k in range(order + 1)])


def hadamard(a, b):
    """
    Exponential Hadamard product: EGF values multiply, so the plain
    coefficient at n is a_n b_n n!.

    :param a: `Series`
    :param b: `Series` of the same order
    :returns: `Series`
    """

    if a.order != b.order:
        msg = f'Hadamard product of orders {a.order} and {b.order}'
        LOGGER.error(msg)
        raise SeriesError(msg, code=401, orders=[a.order, b.order])

    return Series([x * y * factorial(n)
                   for n, (x, y) in enumerate(zip(a.coeffs, b.coeffs))],
                  a.order)


def series_s2(order):
    """
    Fixed-point-free involutions: sum z^{2k} / (2^k k!)

    :param order: truncation order
    :returns: `Series`
    """

    coeffs = [Fraction(0)] * (order + 1)
    for k in range(order // 2 + 1):
        coeffs[2 * k] = Fraction(1, 2 ** k * factorial(k))
    return Series(coeffs, order)


def series_p_star(order):
    """
    All triples of fixed-point-free involutions, S2 (.) S2 (.) S2

    :param order: truncation order
    :returns: `Series`
    """

    s2 = series_s2(order)
    return hadamard(hadamard(s2, s2), s2)


def series_p(order):
    """
    Connected triples: log of `series_p_star`

    :param order: truncation order
    :returns: `Series`
    """

    return series_p_star(order).log()


def series_p_rooted(order):
    """
    Rooted pavings z d/dz P(z); coefficient n is pav_r(n)

    :param order: truncation order
    :returns: `Series` with integer coefficients
    """

    rooted = series_p(order).theta()
    rooted.integers()
    return rooted


def total_triples(k):
    """
    :param k: half the dart count
    :returns: number of triples of fixed-point-free involutions on 2k darts
    """

    return double_factorial(2 * k - 1) ** 3


def rooted_by_recurrence(max_k):
    """
    a_k = pav_r(2k): a_0 = 0, a_1 = 1,
    a_k = 2k a_{k-1} + sum_{i=1..k-2} a_i a_{k-1-i}

    :param max_k: last index
    :returns: `list` a_0 .. a_K
    """

    a = [0, 1][:max_k + 1]
    for k in range(2, max_k + 1):
        a.append(2 * k * a[k - 1]
                 + sum(a[i] * a[k - 1 - i] for i in range(1, k - 1)))
    return a


def hypergeom_2f0_coeffs(max_k):
    """
    EGF coefficients f_k = ((2k)!/k!)^2 / 16^k of 2F0(1/2, 1/2; x)

    :param max_k: last index
    :returns: `list` of `Fraction`
    """

    return [Fraction(factorial(2 * k) // factorial(k), 4 ** k) ** 2
            for k in range(max_k + 1)]


def ode_2f0_residual(max_k):
    """
    theta f - x (theta + 1/2)^2 f for the hypergeometric series

    :param max_k: truncation order
    :returns: `Series`, identically zero
    """

    c = [f / factorial(k) for k, f in enumerate(hypergeom_2f0_coeffs(max_k))]
    residual = [Fraction(0)]
    for k in range(1, max_k + 1):
        residual.append(k * c[k] - (k - Fraction(1, 2)) ** 2 * c[k - 1])
    return Series(residual, max_k)


def riccati_residual(order, rooted=None):
    """
    x^2 w' - (1 - x) w + x w^2 + x/4 with w_k = pav_r(2k) / 2^(k+1)

    :param order: truncation order N (>= 2)
    :param rooted: optional override of pav_r(2k) for k = 0..N
    :returns: `Series`, identically zero for the true counts
    """

    if rooted is None:
        coeffs = series_p_rooted(2 * order).integers()
        rooted = [coeffs[2 * k] for k in range(order + 1)]

    w = Series([Fraction(a, 2 ** (k + 1)) for k, a in enumerate(rooted)],
               order)
    x = Series([0, 1], order)

    lhs = w.derivative().shift(2).truncate(order)
    residual = lhs - (1 - x) * w + x * w * w + x.scale(Fraction(1, 4))

    LOGGER.debug(f'Riccati residual to order {order}: {residual}')
    return residual


def moebius(n):
    """
    Moebius function by trial division

    :param n: positive integer
    :returns: -1, 0 or 1
    """

    if n < 1:
        msg = f'Moebius function undefined at {n}'
        LOGGER.error(msg)
        raise SeriesError(msg, code=404, n=n)

    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def cycle_index_t(m, order):
    """
    exp(z^2/(2m) + z/m) for even m, exp(z^2/(2m)) for odd m

    :param m: cycle length
    :param order: truncation order
    :returns: `Series`
    """

    argument = [Fraction(0)] * (order + 1)
    if order >= 1 and m % 2 == 0:
        argument[1] = Fraction(1, m)
    if order >= 2:
        argument[2] = Fraction(1, 2 * m)
    return Series(argument, order).exp()


def triple_hadamard_weighted(t, m):
    """
    Triple Hadamard product of t with itself, weighted for cycle
    length m: coefficient j becomes t_j^3 (j!)^2 m^(2j)

    :param t: `Series`, usually `cycle_index_t(m, order)`
    :param m: cycle length
    :returns: `Series`
    """

    return Series([c ** 3 * factorial(j) ** 2 * m ** (2 * j)
                   for j, c in enumerate(t.coeffs)], t.order)


def series_p_tilde(order):
    """
    Unlabeled pavings: sum over cycle lengths m and k >= 1 with
    mk <= N of mu(k)/k log(H_m)(z^{mk}), H_m the weighted triple
    Hadamard product of T_m.

    :param order: truncation order N
    :returns: `Series` with integer coefficients pav(n)
    """

    total = Series.zero(order)

    for m in range(1, order + 1):
        inner = order // m
        log_h = triple_hadamard_weighted(cycle_index_t(m, inner), m).log()

        for k in range(1, inner + 1):
            mu = moebius(k)
            if mu == 0:
                continue
            term = log_h.substitute(m * k, order).scale(Fraction(mu, k))
            total = total + term

        LOGGER.debug(f'Cycle length {m} done')

    total.integers()
    return total


class AsymptoticReport(object):
    """Exact count against its asymptote at index k"""

    def __init__(self, k, exact, asymptote):
        self.k = k
        self.exact = exact
        self.asymptote = asymptote
        self.ratio = mpf(exact) / asymptote

    def to_row(self):
        return (self.k, self.exact, self.asymptote, float(self.ratio))

    def __repr__(self):
        return (f'AsymptoticReport(k={self.k}, exact={self.exact}, '
                f'ratio={mp.nstr(self.ratio, 10)})')


def _dps():
    return config.EXTRAS.get('asymptotics', {}).get('dps', 30)


def rooted_asymptote(k):
    """
    2 sqrt(2/pi) (2/e)^k k^(k + 1/2), through logarithms

    :param k: half the dart count (>= 1)
    :returns: `mpf`
    """

    k = mpf(k)
    return 2 * mp.sqrt(2 / mp.pi) * mp.exp(
        k * mp.log(2 / mp.e) + (k + mpf(1) / 2) * mp.log(k))


def unlabeled_asymptote(k):
    """
    sqrt(2/pi) (2/e)^k k^(k - 1/2), the rooted asymptote over 2k

    :param k: half the dart count (>= 1)
    :returns: `mpf`
    """

    k = mpf(k)
    return mp.sqrt(2 / mp.pi) * mp.exp(
        k * mp.log(2 / mp.e) + (k - mpf(1) / 2) * mp.log(k))


def asymptotic_rooted(k, exact=None):
    """
    :param k: half the dart count (>= 1)
    :param exact: pav_r(2k) if already known
    :returns: `AsymptoticReport`
    """

    if exact is None:
        exact = rooted_by_recurrence(k)[k]
    with mp.workdps(_dps()):
        return AsymptoticReport(k, exact, rooted_asymptote(k))


def asymptotic_unlabeled(k, exact=None):
    """
    :param k: half the dart count (>= 1)
    :param exact: pav(2k) if already known
    :returns: `AsymptoticReport`
    """

    if exact is None:
        exact = series_p_tilde(2 * k).integers()[2 * k]
    with mp.workdps(_dps()):
        return AsymptoticReport(k, exact, unlabeled_asymptote(k))


def asymptotic_reports(max_k):
    """
    Rooted and unlabeled reports for k = 1..K, each series computed once

    :param max_k: last index
    :returns: `tuple` of two lists of `AsymptoticReport`
    """

    rooted = rooted_by_recurrence(max_k)
    unlabeled = series_p_tilde(2 * max_k).integers()

    return ([asymptotic_rooted(k, rooted[k]) for k in range(1, max_k + 1)],
            [asymptotic_unlabeled(k, unlabeled[2 * k])
             for k in range(1, max_k + 1)])


def rooted_counts(max_darts, method='recurrence', workers=None, limit=None):
    """
    pav_r(n) for even n = 2..max_darts

    :param max_darts: largest dart count
    :param method: `recurrence`, `series` or `oracle`
    :param workers: worker processes for the oracle
    :param limit: dart-count guard for the oracle
    :returns: `list` of (n, pav_r(n))
    """

    max_k = max_darts // 2

    if method == 'recurrence':
        values = rooted_by_recurrence(max_k)
        return [(2 * k, values[k]) for k in range(1, max_k + 1)]
    if method == 'series':
        values = series_p_rooted(2 * max_k).integers()
        return [(2 * k, values[2 * k]) for k in range(1, max_k + 1)]
    if method == 'oracle':
        check_darts(2 * max_k, limit)
        return [(2 * k, enumerate_pavings(2 * k, workers=workers,
                                          limit=limit).rooted_count)
                for k in range(1, max_k + 1)]

    raise ValueError(f'Unknown method {method}')


def unlabeled_counts(max_darts, method='cycle-index', workers=None,
                     limit=None):
    """
    pav(n) for even n = 2..max_darts

    :param max_darts: largest dart count
    :param method: `cycle-index` or `oracle`
    :param workers: worker processes for the oracle
    :param limit: dart-count guard for the oracle
    :returns: `list` of (n, pav(n))
    """

    max_k = max_darts // 2

    if method == 'cycle-index':
        values = series_p_tilde(2 * max_k).integers()
        return [(2 * k, values[2 * k]) for k in range(1, max_k + 1)]
    if method == 'oracle':
        check_darts(2 * max_k, limit)
        return [(2 * k, enumerate_pavings(2 * k, classify=True,
                                          workers=workers,
                                          limit=limit).iso_classes)
                for k in range(1, max_k + 1)]

    raise ValueError(f'Unknown method {method}')


def _even_max_darts(max_darts, check_report):
    if max_darts % 2 == 1:
        message, _ = check_report.add_message(303, max_darts=max_darts)
        click.echo(message, err=True)
        max_darts -= 1
    return max_darts


def _fail(ctx, err):
    with CheckReport() as check_report:
        for message, _ in check_report.add_error(err):
            click.echo(message, err=True)
    ctx.exit(1)


@click.command()
@click.pass_context
@click.option('--max-darts', '-n', 'max_darts', default=24,
              type=click.IntRange(min=0), help='Largest dart count')
@click.option('--method', '-m', 'method', default='recurrence',
              type=click.Choice(['recurrence', 'series', 'oracle']),
              help='Counting method')
@click.option('--format', '-f', 'format_', default='table',
              type=click.Choice(OUTPUT_FORMATS), help='Output format')
@click.option('--verify', 'verify', is_flag=True, default=False,
              help='Cross-check against a second method')
@click.option('--workers', '-w', 'workers', default=None,
              type=click.IntRange(min=1), help='Oracle worker processes')
@click.option('--limit', 'limit', default=None, type=click.IntRange(min=0),
              help='Oracle dart-count guard')
def rooted(ctx, max_darts, method, format_, verify, workers, limit):
    """rooted pavings (free subgroups of index n)"""

    with CheckReport() as check_report:
        max_darts = _even_max_darts(max_darts, check_report)

    try:
        rows = rooted_counts(max_darts, method, workers, limit)
        if verify:
            other = 'series' if method == 'recurrence' else 'recurrence'
            expected = rooted_counts(max_darts, other)
    except (EnumerationError, SeriesError) as err:
        _fail(ctx, err)

    click.echo(write_sequence(rows, format_, header=('n', 'rooted')))

    if verify:
        with CheckReport() as check_report:
            for (n, value), (_, reference) in zip(rows, expected):
                if value != reference:
                    message, _ = check_report.add_message(
                        501, check=f'rooted {method} vs {other}', n=n,
                        expected=reference, actual=value)
                    click.echo(message, err=True)
            if check_report.severe:
                ctx.exit(1)


@click.command()
@click.pass_context
@click.option('--max-darts', '-n', 'max_darts', default=20,
              type=click.IntRange(min=0), help='Largest dart count')
@click.option('--method', '-m', 'method', default='cycle-index',
              type=click.Choice(['cycle-index', 'oracle']),
              help='Counting method')
@click.option('--format', '-f', 'format_', default='table',
              type=click.Choice(OUTPUT_FORMATS), help='Output format')
@click.option('--workers', '-w', 'workers', default=None,
              type=click.IntRange(min=1), help='Oracle worker processes')
@click.option('--limit', 'limit', default=None, type=click.IntRange(min=0),
              help='Oracle dart-count guard')
def unlabeled(ctx, max_darts, method, format_, workers, limit):
    """unlabeled pavings (conjugacy classes of free subgroups)"""

    with CheckReport() as check_report:
        max_darts = _even_max_darts(max_darts, check_report)

    try:
        rows = unlabeled_counts(max_darts, method, workers, limit)
    except (EnumerationError, SeriesError) as err:
        _fail(ctx, err)

    click.echo(write_sequence(rows, format_, header=('n', 'unlabeled')))


@click.command()
@click.pass_context
@click.option('--max-k', '-k', 'max_k', default=20,
              type=click.IntRange(min=1), help='Largest half dart count')
@click.option('--format', '-f', 'format_', default='table',
              type=click.Choice(['table', 'json', 'csv']),
              help='Output format')
def asympt(ctx, max_k, format_):
    """exact counts against their asymptotes"""

    rooted_reports, unlabeled_reports = asymptotic_reports(max_k)

    rows = []
    for r, u in zip(rooted_reports, unlabeled_reports):
        k, exact_r, asymptote_r, ratio_r = r.to_row()
        _, exact_u, asymptote_u, ratio_u = u.to_row()
        rows.append((k, exact_r, asymptote_r, ratio_r,
                     exact_u, asymptote_u, ratio_u))

    header = ('k', 'rooted', 'rooted_asymptote', 'rooted_ratio',
              'unlabeled', 'unlabeled_asymptote', 'unlabeled_ratio')
    click.echo(write_sequence(rows, format_, header=header))
