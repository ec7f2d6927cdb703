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
Exhaustive enumeration of involution triples on n darts.

Counting runs the plain loop over every (alpha, beta, gamma); gamma is
generated as a perfect matching that merges the <alpha, beta> orbits,
and a branch is cut as soon as the unmatched pairs cannot connect the
remaining orbits. The alpha stream is split by the partner of dart 0
and the parts are scanned by a process pool.

Classification only needs triples with alpha equal to the base
involution (0,1)(2,3)...: all fixed-point-free involutions on n darts
are conjugate, so every isomorphism class meets that slice.
"""

from collections import Counter
from fractions import Fraction
from itertools import starmap
from math import factorial
import logging
from multiprocessing import Pool
import os

import click

from pavings import config
from pavings.paving import (Paving, canonical_images, paving_stats,
                            paving_to_dict)
from pavings.perm import (count_fpf_involutions, double_factorial,
                          fpf_involution_images, is_transitive,
                          to_cycle_string)
from pavings.report import CheckReport
from pavings.util import write_json

LOGGER = logging.getLogger(__name__)


class EnumerationError(ValueError):
    """custom exception handler"""

    def __init__(self, message, code=301, **kwargs):
        super(EnumerationError, self).__init__(message)
        self.code = code
        self.kwargs = kwargs


class ClassRepresentative(object):
    """Canonical paving of one isomorphism class"""

    def __init__(self, paving, automorphisms):
        self.paving = paving
        self.automorphisms = automorphisms

    @property
    def stats(self):
        return paving_stats(self.paving)

    def to_dict(self):
        return {
            'paving': paving_to_dict(self.paving),
            'stats': self.stats.to_dict(),
            'automorphisms': self.automorphisms
        }


class EnumerationReport(object):
    """
    Counts from one exhaustive run on n darts
    """

    def __init__(self, n, total_triples, transitive_triples,
                 class_representatives=None):
        self.n = n
        self.total_triples = total_triples
        self.transitive_triples = transitive_triples
        self.class_representatives = class_representatives

    @property
    def rooted_count(self):
        """transitive triples up to relabeling the non-root darts"""

        if self.n == 0:
            return 0
        return self.transitive_triples // factorial(self.n - 1)

    @property
    def iso_classes(self):
        if self.class_representatives is None:
            return None
        return len(self.class_representatives)

    def to_dict(self):
        dict_ = {
            'n': self.n,
            'total_triples': self.total_triples,
            'transitive_triples': self.transitive_triples,
            'rooted_count': self.rooted_count,
            'iso_classes': self.iso_classes
        }
        if self.class_representatives is not None:
            dict_['class_representatives'] = [
                rep.to_dict() for rep in self.class_representatives]
        return dict_

    def __repr__(self):
        return (f'EnumerationReport(n={self.n}, '
                f'transitive={self.transitive_triples}, '
                f'rooted={self.rooted_count}, classes={self.iso_classes})')


def base_involution(n):
    """
    :param n: even dart count
    :returns: image tuple of (0,1)(2,3)...
    """

    return tuple(i ^ 1 for i in range(n))


def _components(n, alpha, beta):
    """orbit label per dart for <alpha, beta>, and the orbit count"""

    comp = [-1] * n
    count = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        # orbits alternate alpha and beta steps
        d = start
        while comp[d] < 0:
            comp[d] = count
            e = alpha[d]
            comp[e] = count
            d = beta[e]
        count += 1
    return comp, count


def transitive_completions(n, comp, count):
    """
    Every fixed-point-free involution gamma that connects the given
    orbits, as image tuples.

    :param n: dart count
    :param comp: orbit label per dart
    :param count: number of orbits
    :returns: generator of `tuple`
    """

    gamma = [0] * n
    used = [False] * n
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def extend(start, remaining, pairs_left):
        if remaining - 1 > pairs_left:
            return

        i = start
        while i < n and used[i]:
            i += 1
        if i == n:
            if remaining == 1:
                yield tuple(gamma)
            return

        used[i] = True
        for j in range(i + 1, n):
            if used[j]:
                continue

            used[j] = True
            gamma[i], gamma[j] = j, i

            root_i, root_j = find(comp[i]), find(comp[j])
            merged = root_i != root_j
            if merged:
                parent[root_j] = root_i

            yield from extend(i + 1, remaining - merged, pairs_left - 1)

            if merged:
                parent[root_j] = root_j
            used[j] = False
        used[i] = False

    if n == 0:
        return
    yield from extend(0, count, n // 2)


def scan(n, alpha_partner, beta_partner, classify, fixed_alpha):
    """
    Count transitive triples in one part of the search space

    :param n: dart count
    :param alpha_partner: partner of dart 0 under alpha (None: all)
    :param beta_partner: partner of dart 0 under beta (None: all)
    :param classify: `bool` of whether to collect canonical forms of
                     triples whose alpha is the base involution
    :param fixed_alpha: `bool` of whether alpha is only the base involution
    :returns: `tuple` of (count, `dict` of canonical key to automorphisms)
    """

    base = base_involution(n)
    if fixed_alpha:
        alphas = [base]
    else:
        alphas = fpf_involution_images(n, alpha_partner)
    betas = list(fpf_involution_images(n, beta_partner))

    count = 0
    classes = {}

    for alpha in alphas:
        in_slice = classify and alpha == base
        for beta in betas:
            comp, orbits_ = _components(n, alpha, beta)
            for gamma in transitive_completions(n, comp, orbits_):
                count += 1
                if in_slice:
                    key, automorphisms = canonical_images((alpha, beta, gamma))
                    classes[key] = automorphisms

    LOGGER.debug(f'Scanned n={n} alpha_partner={alpha_partner} '
                 f'beta_partner={beta_partner}: {count} transitive')
    return count, classes


def _run(tasks, workers):
    if workers > 1 and len(tasks) > 1:
        LOGGER.info(f'Scanning {len(tasks)} parts with {workers} workers')
        with Pool(min(workers, len(tasks))) as pool:
            return pool.starmap(scan, tasks)
    return list(starmap(scan, tasks))


def check_darts(n, limit=None):
    """
    :param n: dart count
    :param limit: largest allowed dart count (default from configuration)
    :returns: void
    """

    limit = config.PAVINGS_ENUMERATION_LIMIT if limit is None else limit

    if n % 2 == 1:
        msg = f'Cannot enumerate pavings on an odd dart count {n}'
        LOGGER.error(msg)
        raise EnumerationError(msg, code=301, n=n)

    if n > limit:
        msg = f'Dart count {n} exceeds the enumeration limit {limit}'
        LOGGER.error(msg)
        raise EnumerationError(msg, code=302, n=n, limit=limit)


def enumerate_pavings(n, classify=False, workers=None, limit=None,
                      fixed_alpha=False):
    """
    Exhaustive count of transitive involution triples on n darts

    :param n: even dart count
    :param classify: `bool` of whether to collect isomorphism classes
    :param workers: worker processes (default from configuration)
    :param limit: largest allowed dart count (default from configuration)
    :param fixed_alpha: `bool` of whether to scan only alpha equal to the
                        base involution and scale by (n-1)!!, which is
                        exact because conjugation permutes the alphas
    :returns: `EnumerationReport`
    """

    check_darts(n, limit)
    workers = config.PAVINGS_WORKERS if workers is None else workers

    total = count_fpf_involutions(n) ** 3

    if n == 0:
        return EnumerationReport(0, total, 0, [] if classify else None)

    partners = range(1, n)
    if fixed_alpha:
        tasks = [(n, None, p, classify, True) for p in partners]
    else:
        tasks = [(n, p, None, classify, False) for p in partners]

    LOGGER.info(f'Enumerating triples on {n} darts')
    results = _run(tasks, workers)

    transitive = sum(count for count, _ in results)
    if fixed_alpha:
        transitive *= double_factorial(n - 1)

    representatives = None
    if classify:
        classes = {}
        for _, part in results:
            classes.update(part)
        representatives = [
            ClassRepresentative(Paving.from_images(*key), automorphisms)
            for key, automorphisms in sorted(classes.items())
        ]

    report = EnumerationReport(n, total, transitive, representatives)
    LOGGER.info(f'Enumeration done: {report}')
    return report


def count_free_subgroups(n, **kwargs):
    """
    Free subgroups of index n in Z2*Z2*Z2 (one per rooted paving)

    :param n: index
    :returns: `int`
    """

    if n % 2 == 1:
        return 0
    return enumerate_pavings(n, **kwargs).rooted_count


def count_conjugacy_classes(n, **kwargs):
    """
    Conjugacy classes of free subgroups of index n (one per paving)

    :param n: index
    :returns: `int`
    """

    if n % 2 == 1:
        return 0
    return enumerate_pavings(n, classify=True, **kwargs).iso_classes


def orbit_stabilizer_total(report):
    """
    Sum of n/|Aut| over the classes; equals the rooted count

    :param report: classified `EnumerationReport`
    :returns: `int`
    """

    return sum(report.n // rep.automorphisms
               for rep in report.class_representatives)


def partitions(n, largest=None):
    """
    Integer partitions of n as non-increasing lists

    :param n: integer
    :param largest: bound on the parts
    :returns: generator of `list`
    """

    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield [part] + rest


def _representative(shape):
    """permutation with the given cycle lengths on consecutive darts"""

    images = []
    for length in shape:
        offset = len(images)
        images.extend(offset + (i + 1) % length for i in range(length))
    return tuple(images)


def _centralizer_size(shape):
    size = 1
    for length, multiplicity in Counter(shape).items():
        size *= length ** multiplicity * factorial(multiplicity)
    return size


def burnside_classes(n):
    """
    Isomorphism classes by Burnside's lemma: average over all dart
    permutations pi of the transitive triples fixed by conjugation
    with pi. Permutations of one cycle type fix equally many, so the
    sum runs over cycle types weighted by class size.

    :param n: even dart count
    :returns: `int`
    """

    check_darts(n, limit=max(n, 0))
    if n == 0:
        return 0

    involutions = list(fpf_involution_images(n))
    total = Fraction(0)

    for shape in partitions(n):
        pi = _representative(shape)
        commuting = [s for s in involutions
                     if all(pi[s[i]] == s[pi[i]] for i in range(n))]

        fixed = 0
        for alpha in commuting:
            for beta in commuting:
                for gamma in commuting:
                    if is_transitive([alpha, beta, gamma], n):
                        fixed += 1

        LOGGER.debug(f'Cycle type {shape}: {fixed} fixed transitive triples')
        total += Fraction(fixed, _centralizer_size(shape))

    if total.denominator != 1:
        msg = f'Burnside average is not an integer: {total}'
        LOGGER.error(msg)
        raise EnumerationError(msg, code=304, n=n)

    return total.numerator


def dump_representatives(report, directory):
    """
    Write one paving JSON document per isomorphism class

    :param report: classified `EnumerationReport`
    :param directory: output directory (created if missing)
    :returns: `list` of written paths
    """

    os.makedirs(directory, exist_ok=True)

    paths = []
    for i, rep in enumerate(report.class_representatives, start=1):
        path = os.path.join(directory, f'paving-{report.n}-{i}.json')
        document = paving_to_dict(rep.paving)
        document['automorphisms'] = rep.automorphisms
        document['expected'] = rep.stats.to_dict()
        write_json(document, path)
        paths.append(path)

    LOGGER.info(f'Wrote {len(paths)} representatives to {directory}')
    return paths


@click.command('enumerate')
@click.pass_context
@click.option('--darts', '-n', 'darts', required=True,
              type=click.IntRange(min=0), help='Number of darts')
@click.option('--up-to-iso', 'up_to_iso', is_flag=True, default=False,
              help='Classify up to isomorphism')
@click.option('--classify-stats', 'classify_stats', is_flag=True,
              default=False, help='Summarize classes by f-vector')
@click.option('--out', '-o', 'out', default=None,
              type=click.Path(file_okay=False),
              help='Directory for class representatives')
@click.option('--fix-alpha', 'fixed_alpha', is_flag=True, default=False,
              help='Scan only the base alpha and scale the count')
@click.option('--format', '-f', 'format_', default='table',
              type=click.Choice(['table', 'json']), help='Output format')
@click.option('--workers', '-w', 'workers', default=None,
              type=click.IntRange(min=1), help='Worker processes')
@click.option('--limit', 'limit', default=None, type=click.IntRange(min=0),
              help='Dart-count guard')
def enumerate_(ctx, darts, up_to_iso, classify_stats, out, fixed_alpha,
               format_, workers, limit):
    """exhaustively enumerate transitive involution triples"""

    classify = up_to_iso or classify_stats or out is not None

    try:
        report = enumerate_pavings(darts, classify=classify, workers=workers,
                                   limit=limit, fixed_alpha=fixed_alpha)
    except EnumerationError as err:
        with CheckReport() as check_report:
            for message, _ in check_report.add_error(err):
                click.echo(message, err=True)
        ctx.exit(1)

    if out is not None:
        dump_representatives(report, out)

    if format_ == 'json':
        click.echo(write_json(report.to_dict()))
        return

    click.echo(f'darts: {report.n}')
    click.echo(f'total triples: {report.total_triples}')
    click.echo(f'transitive triples: {report.transitive_triples}')
    click.echo(f'rooted pavings: {report.rooted_count}')

    if not classify:
        return

    click.echo(f'isomorphism classes: {report.iso_classes}')

    if up_to_iso:
        for i, rep in enumerate(report.class_representatives, start=1):
            alpha, beta, gamma = (to_cycle_string(p)
                                  for p in rep.paving.triple)
            click.echo(f'  {i}: f={rep.stats.f_vector} '
                       f'aut={rep.automorphisms} '
                       f'alpha={alpha} beta={beta} gamma={gamma}')

    if classify_stats:
        histogram = Counter(rep.stats.f_vector
                            for rep in report.class_representatives)
        for f_vector, count in sorted(histogram.items()):
            click.echo(f'  f-vector {f_vector}: {count}')
