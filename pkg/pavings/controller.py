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

from collections import OrderedDict
from math import factorial
import glob
import logging
import os

import click

from pavings import config
from pavings.enumeration import (burnside_classes, enumerate_pavings,
                                 orbit_stabilizer_total)
from pavings.map2d import map_stats
from pavings.paving import (canonical_form, load_map, load_paving,
                            mirror_double, paving_stats, underlying_map)
from pavings.report import CheckReport, RunReport
from pavings.series import (asymptotic_reports, ode_2f0_residual,
                            riccati_residual, rooted_by_recurrence,
                            series_p_rooted, series_p_star, series_p_tilde,
                            total_triples)
from pavings.util import InputError, data_path, load_json, read_bfile

LOGGER = logging.getLogger(__name__)

SEQUENCES = OrderedDict([
    ('A005411', ('rooted', 'b005411.txt')),
    ('A002831', ('unlabeled', 'b002831.txt'))
])


def _extra(section, key, default):
    return config.EXTRAS.get(section, {}).get(key, default)


def _mismatch(check, n, expected, actual):
    return (501, {'check': check, 'n': n, 'expected': expected,
                  'actual': actual})


def _compare_values(check, expected, actual):
    """
    :param expected: `dict` of n to value
    :param actual: `dict` of n to value
    :returns: `list` of failures
    """

    return [_mismatch(check, n, value, actual.get(n))
            for n, value in sorted(expected.items())
            if actual.get(n) != value]


def _zero_residual(check, series):
    return [(503, {'check': check, 'index': k})
            for k, c in enumerate(series.coeffs) if c != 0]


class Verifier(object):
    """
    Cross-method checks: series against recurrence, oracle against
    series, vendored OEIS data, fixtures and asymptotics.

    Checks named in <faults> are reported as failing regardless of the
    outcome, so the failure path can be exercised end to end.
    """

    def __init__(self, max_darts, workers=None, faults=None):
        self.max_darts = max_darts - max_darts % 2
        self.workers = workers
        self.faults = set(faults or [])
        self.order = config.PAVINGS_SERIES_ORDER

        self._rooted = None
        self._unlabeled = None

    @property
    def rooted(self):
        """pav_r(n) by recurrence, keyed by dart count"""

        if self._rooted is None:
            values = rooted_by_recurrence(self.order // 2)
            self._rooted = {2 * k: v for k, v in enumerate(values) if k}
        return self._rooted

    @property
    def unlabeled(self):
        """pav(n) from the cycle index, keyed by dart count"""

        if self._unlabeled is None:
            order = max(self.max_darts, 20)
            values = series_p_tilde(order).integers()
            self._unlabeled = {n: values[n] for n in range(2, order + 1, 2)}
        return self._unlabeled

    def checks(self):
        """
        :returns: `list` of (group, name, callable) in run order
        """

        checks = [
            ('series', 'rooted series vs recurrence', self.check_rooted),
            ('series', 'odd coefficients vanish', self.check_odd),
            ('series', 'triple counts', self.check_total_triples),
            ('series', 'riccati residual', self.check_riccati),
            ('series', 'hypergeometric residual', self.check_2f0),
        ]

        for oeis in SEQUENCES:
            checks.append(('oeis', f'{oeis} fixture',
                           lambda oeis=oeis: self.check_oeis(oeis)))

        classify_max = _extra('verify', 'classify_max_darts', 8)
        burnside_max = _extra('verify', 'burnside_max_darts', 6)

        for n in range(2, self.max_darts + 1, 2):
            classify = n <= classify_max
            checks.append(('oracle', f'oracle n={n}',
                           lambda n=n, c=classify: self.check_oracle(n, c)))
            if n <= burnside_max:
                checks.append(('oracle', f'burnside n={n}',
                               lambda n=n: self.check_burnside(n)))

        checks.extend([
            ('fixtures', 'paving fixtures', self.check_paving_fixtures),
            ('fixtures', 'distinct canonical forms',
             self.check_distinct_forms),
            ('fixtures', 'mirror doubles', self.check_mirror_doubles),
            ('asymptotics', 'rooted ratio window',
             lambda: self.check_asymptotics(0)),
            ('asymptotics', 'unlabeled ratio window',
             lambda: self.check_asymptotics(1)),
        ])

        return checks

    def check_rooted(self):
        values = series_p_rooted(self.order).integers()
        actual = {n: values[n] for n in range(2, self.order + 1, 2)}
        return _compare_values('rooted series', self.rooted, actual)

    def check_odd(self):
        values = series_p_rooted(self.order).integers()
        return [_mismatch('odd coefficient', n, 0, values[n])
                for n in range(1, self.order + 1, 2) if values[n]]

    def check_total_triples(self):
        star = series_p_star(self.order)
        return [
            _mismatch('triple count', 2 * k, total_triples(k),
                      star[2 * k] * factorial(2 * k))
            for k in range(self.order // 2 + 1)
            if star[2 * k] * factorial(2 * k) != total_triples(k)
        ]

    def check_riccati(self):
        return _zero_residual('riccati', riccati_residual(self.order))

    def check_2f0(self):
        return _zero_residual('hypergeometric', ode_2f0_residual(self.order))

    def check_oeis(self, oeis):
        failures, _ = compare_sequence(oeis)
        return failures

    def check_oracle(self, n, classify):
        fixed_alpha = n > _extra('verify', 'plain_loop_max_darts', 8)
        limit = max(n, config.PAVINGS_ENUMERATION_LIMIT)
        report = enumerate_pavings(n, classify=classify,
                                   workers=self.workers, limit=limit,
                                   fixed_alpha=fixed_alpha)

        failures = []
        if report.rooted_count != self.rooted[n]:
            failures.append(_mismatch('oracle rooted', n, self.rooted[n],
                                      report.rooted_count))
        if report.transitive_triples != self.rooted[n] * factorial(n - 1):
            failures.append(_mismatch(
                'transitive triples', n, self.rooted[n] * factorial(n - 1),
                report.transitive_triples))

        if classify:
            if report.iso_classes != self.unlabeled[n]:
                failures.append(_mismatch('oracle classes', n,
                                          self.unlabeled[n],
                                          report.iso_classes))
            total = orbit_stabilizer_total(report)
            if total != self.rooted[n]:
                failures.append(_mismatch('orbit-stabilizer', n,
                                          self.rooted[n], total))
        return failures

    def check_burnside(self, n):
        classes = burnside_classes(n)
        if classes != self.unlabeled[n]:
            return [_mismatch('burnside', n, self.unlabeled[n], classes)]
        return []

    def check_paving_fixtures(self):
        failures = []
        for path in sorted(glob.glob(data_path('fixtures', 'pavings',
                                               '*.json'))):
            name = os.path.basename(path)
            expected = load_json(path).get('expected', {})
            stats = paving_stats(load_paving(path)).to_dict()

            for key, value in expected.items():
                if key in stats and stats[key] != value:
                    failures.append((507, {'check': name, 'field': key,
                                           'expected': value,
                                           'actual': stats[key]}))
        return failures

    def check_distinct_forms(self):
        forms = {}
        for path in sorted(glob.glob(data_path('fixtures', 'pavings',
                                               'p*.json'))):
            form = canonical_form(load_paving(path))
            if form in forms:
                return [(506, {'check': 'canonical forms',
                               'reason': f'{os.path.basename(path)} is '
                                         f'isomorphic to {forms[form]}'})]
            forms[form] = os.path.basename(path)
        return []

    def check_mirror_doubles(self):
        failures = []
        for path in sorted(glob.glob(data_path('fixtures', 'maps',
                                               '*.json'))):
            m = load_map(path)
            genus = map_stats(m).genus_per_component[0]
            doubled = mirror_double(m)
            stats = paving_stats(doubled)

            if stats.complexity != 2 * genus:
                failures.append((507, {'check': os.path.basename(path),
                                       'field': 'complexity',
                                       'expected': 2 * genus,
                                       'actual': stats.complexity}))
            components = map_stats(underlying_map(doubled)).components
            if components != 2:
                failures.append((507, {'check': os.path.basename(path),
                                       'field': 'map components',
                                       'expected': 2,
                                       'actual': components}))
        return failures

    def check_asymptotics(self, which):
        start, stop = _extra('asymptotics', 'window', [10, 20])
        slack = _extra('asymptotics', 'slack', 1e-3)
        kind = ('rooted', 'unlabeled')[which]

        reports = asymptotic_reports(stop)[which]
        ratios = {r.k: float(r.ratio) for r in reports}

        failures = []
        if not 0.9 <= ratios[start] <= 1.1:
            failures.append((504, {'check': f'{kind} ratio', 'k': start,
                                   'value': ratios[start]}))
        for k in range(start + 1, stop + 1):
            if abs(ratios[k] - 1) > abs(ratios[k - 1] - 1) + slack:
                failures.append((504, {'check': f'{kind} ratio trend',
                                       'k': k, 'value': ratios[k]}))
        return failures

    def run(self, check_report, run_report):
        """
        Run every check, recording each in both reports

        :param check_report: `CheckReport`
        :param run_report: `RunReport`
        :returns: `bool` of whether every check passed
        """

        ok = True

        for group, name, check in self.checks():
            LOGGER.info(f'Running check {name}')
            try:
                failures = check()
            except Exception as err:
                LOGGER.error(f'Check {name} raised: {err}')
                failures = getattr(err, 'errors', None) or [
                    (getattr(err, 'code', 506),
                     getattr(err, 'kwargs', None)
                     or {'check': name, 'reason': str(err)})]

            if name in self.faults:
                failures.append((506, {'check': name,
                                       'reason': 'injected fault'}))

            for code, kwargs in failures:
                try:
                    message, _ = check_report.add_message(code, **kwargs)
                except ValueError:
                    message, _ = check_report.add_message(
                        506, check=name, reason=str(kwargs))
                click.echo(message, err=True)

            if failures:
                ok = False
                check_report.write_failing_check(name)
                run_report.write_failing_check(name, group)
            else:
                check_report.write_passing_check(name)
                run_report.write_passing_check(name, group)

        return ok


def verify_all(max_darts, reports_dir=None, workers=None, faults=None):
    """
    Core verification workflow

    :param max_darts: largest dart count for the oracle checks
    :param reports_dir: directory for check and run reports, or None
    :param workers: worker processes for the oracle
    :param faults: names of checks to force into failure
    :returns: `tuple` of (`bool` all passed, `RunReport`)
    """

    if reports_dir is not None:
        os.makedirs(reports_dir, exist_ok=True)

    verifier = Verifier(max_darts, workers=workers, faults=faults)
    run_report = RunReport(reports_dir)

    with CheckReport(reports_dir) as check_report:
        ok = verifier.run(check_report, run_report)

    return ok, run_report


def compare_sequence(oeis, bfile=None, max_n=None):
    """
    Compare a vendored or given b-file against the computed sequence.
    OEIS index n counts objects on 2n darts; index 0 is skipped.

    :param oeis: `A005411` (rooted) or `A002831` (unlabeled)
    :param bfile: b-file path (default: the vendored fixture)
    :param max_n: largest OEIS index to compare
    :returns: `tuple` of (failures, number of compared terms)
    """

    kind, filename = SEQUENCES[oeis]
    if bfile is None:
        bfile = data_path('oeis', filename)

    pairs = [(n, v) for n, v in read_bfile(bfile)
             if n >= 1 and (max_n is None or n <= max_n)]
    if not pairs:
        LOGGER.error(f'No terms to compare in {bfile}')
        return [(212, {'bfile': bfile})], 0

    top = max(n for n, _ in pairs)
    if kind == 'rooted':
        values = rooted_by_recurrence(top)
        computed = {k: values[k] for k in range(1, top + 1)}
    else:
        values = series_p_tilde(2 * top).integers()
        computed = {k: values[2 * k] for k in range(1, top + 1)}

    for n, value in pairs:
        if computed[n] != value:
            return [(502, {'check': oeis, 'index': n, 'expected': value,
                           'actual': computed[n]})], len(pairs)

    return [], len(pairs)


@click.command()
@click.pass_context
@click.option('--max-darts', '-n', 'max_darts', default=None,
              type=click.IntRange(min=0),
              help='Largest dart count for oracle checks')
@click.option('--report', '-r', 'reports_dir', default=None,
              help='Directory for check and run reports')
@click.option('--workers', '-w', 'workers', default=None,
              type=click.IntRange(min=1), help='Oracle worker processes')
@click.option('--inject-fault', 'faults', multiple=True, hidden=True,
              help='Force the named check to fail')
def verify(ctx, max_darts, reports_dir, workers, faults):
    """run every cross-method check"""

    if max_darts is None:
        max_darts = _extra('verify', 'max_darts', 8)

    ok, run_report = verify_all(max_darts, reports_dir, workers, faults)

    for status, checks in (('Pass', run_report.passed),
                           ('Fail', run_report.failed)):
        for check in checks:
            click.echo(f'{status}: {check}')

    total = len(run_report.passed) + len(run_report.failed)
    click.echo(f'({len(run_report.passed)}/{total} checks passed)')

    if not ok:
        ctx.exit(1)


@click.command()
@click.pass_context
@click.option('--oeis', 'oeis', required=True,
              type=click.Choice(list(SEQUENCES)), help='OEIS sequence')
@click.option('--bfile', '-b', 'bfile', default=None,
              type=click.Path(exists=True, dir_okay=False),
              help='b-file to compare (default: vendored copy)')
@click.option('--max-n', 'max_n', default=None, type=click.IntRange(min=1),
              help='Largest OEIS index to compare')
def compare(ctx, oeis, bfile, max_n):
    """compare computed counts with an OEIS b-file"""

    try:
        failures, compared = compare_sequence(oeis, bfile, max_n)
    except InputError as err:
        failures, compared = [(err.code, err.kwargs)], 0

    with CheckReport() as check_report:
        for code, kwargs in failures:
            message, _ = check_report.add_message(code, **kwargs)
            click.echo(message, err=True)

    if failures:
        ctx.exit(1)

    click.echo(f'{oeis}: {compared} terms match')


@click.group()
def admin():
    """System administration"""
    pass


@click.command('config')
@click.pass_context
def show_config(ctx):
    """show the active configuration"""

    env_vars = [
        'PAVINGS_LOGGING_LOGLEVEL',
        'PAVINGS_LOGGING_LOGFILE',
        'PAVINGS_DATA_DIR',
        'PAVINGS_ERROR_CONFIG',
        'PAVINGS_EXTRA_CONFIG',
        'PAVINGS_WORKERS',
        'PAVINGS_ENUMERATION_LIMIT',
        'PAVINGS_SERIES_ORDER'
    ]

    for env_var in env_vars:
        click.echo(f'{env_var}: {getattr(config, env_var)}')


admin.add_command(show_config)
