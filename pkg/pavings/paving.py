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
Three-dimensional combinatorial maps (pavings).

A paving on n darts is a triple (alpha, beta, gamma) of fixed-point-free
involutions. The derived permutations are phi = alpha*beta and
sigma = gamma*alpha*beta, with products applied right to left (see
:mod:`pavings.perm`). Equivalently a paving is a quadruple
<D; alpha, sigma, phi> where alpha*phi and phi*sigma^-1 are
fixed-point-free involutions.
"""

import logging
import random

import click

from pavings.map2d import (Map2D, MapError, components as map_components,
                           is_connected as map_is_connected,
                           map_from_dict, map_stats, require_pairing)
from pavings.perm import (Permutation, PermutationError, compose, conjugate,
                          fixed_points, from_one_based, inverse,
                          is_fpf_involution, is_transitive, orbit_count,
                          random_fpf_involution, to_one_based)
from pavings.report import CheckReport
from pavings.util import InputError, load_json, write_json

LOGGER = logging.getLogger(__name__)

LETTERS = ('a', 'b', 'c')


class PavingAxiomError(ValueError):
    """
    Raised once per validation pass; `errors` holds every violation as
    (code, kwargs) pairs matching the error definition file.
    """

    def __init__(self, messages, errors):
        super(PavingAxiomError, self).__init__('; '.join(messages))
        self.messages = messages
        self.errors = errors
        self.code = errors[0][0]


class DisconnectedPavingError(PavingAxiomError):
    """custom exception handler"""

    def __init__(self):
        super(DisconnectedPavingError, self).__init__(
            ['Paving is not connected'], [(208, {})])


def _dart_list(darts):
    return ','.join(str(d + 1) for d in darts)


def _non_involutive(p):
    images = p.images
    return [i for i, j in enumerate(images) if images[j] != i]


class _Violations(object):
    """Collects axiom violations before raising them together"""

    def __init__(self):
        self.messages = []
        self.errors = []

    def add(self, code, message, **kwargs):
        LOGGER.error(message)
        self.messages.append(message)
        self.errors.append((code, kwargs))

    def check_involution(self, name, p, code_involution=201, code_fixed=202):
        bad = _non_involutive(p)
        if bad:
            self.add(code_involution,
                     f'{name} is not an involution (darts {_dart_list(bad)})',
                     name=name, darts=_dart_list(bad))
            return

        fixed = fixed_points(p)
        if fixed:
            self.add(code_fixed,
                     f'{name} has fixed points at darts {_dart_list(fixed)}',
                     name=name, darts=_dart_list(fixed))

    def raise_if_any(self):
        if self.errors:
            raise PavingAxiomError(self.messages, self.errors)


def _check_sizes(named):
    sizes = sorted({p.n for _, p in named})
    if len(sizes) > 1:
        msg = f'Paving permutations differ in size: {sizes}'
        LOGGER.error(msg)
        raise PavingAxiomError([msg], [(207, {'sizes': sizes})])


class Paving(object):
    """
    Involution-triple form of a paving with cached sigma and phi
    """

    __slots__ = ('alpha', 'beta', 'gamma', 'phi', 'sigma')

    def __init__(self, alpha, beta, gamma, check=True):
        """
        :param alpha: `Permutation`
        :param beta: `Permutation`
        :param gamma: `Permutation`
        :param check: `bool` of whether to validate the involutions
        """

        if check:
            named = [('alpha', alpha), ('beta', beta), ('gamma', gamma)]
            _check_sizes(named)

            violations = _Violations()
            for name, p in named:
                violations.check_involution(name, p)
            violations.raise_if_any()

        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.phi = compose(alpha, beta)
        self.sigma = compose(gamma, self.phi)

    @classmethod
    def from_images(cls, alpha, beta, gamma):
        """
        Trusted construction from raw image tuples (no validation)
        """

        return cls(Permutation(alpha, check=False),
                   Permutation(beta, check=False),
                   Permutation(gamma, check=False), check=False)

    @property
    def n(self):
        return self.alpha.n

    @property
    def triple(self):
        return (self.alpha, self.beta, self.gamma)

    def images(self):
        return tuple(p.images for p in self.triple)

    def __eq__(self, other):
        if not isinstance(other, Paving):
            return NotImplemented
        return self.triple == other.triple

    def __lt__(self, other):
        return self.images() < other.images()

    def __hash__(self):
        return hash(self.triple)

    def __repr__(self):
        return (f'Paving(n={self.n}, alpha={self.alpha}, '
                f'beta={self.beta}, gamma={self.gamma})')


class PavingStats(object):
    """
    f-vector (vertices, edges, 2-faces, 3-cells) and derived counts
    """

    def __init__(self, f_vector, connected):
        self.f_vector = tuple(f_vector)
        self.connected = connected

    @property
    def complexity(self):
        f0, f1, f2, f3 = self.f_vector
        return f3 - f2 + f1 - f0

    @property
    def euler_characteristic(self):
        return -self.complexity

    def to_dict(self):
        return {
            'f_vector': list(self.f_vector),
            'complexity': self.complexity,
            'euler_characteristic': self.euler_characteristic,
            'connected': self.connected
        }

    def __eq__(self, other):
        if not isinstance(other, PavingStats):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return f'PavingStats({self.to_dict()})'


class CosetGraph(object):
    """
    Schreier graph of the stabilizer of the root dart: one involution on
    the cosets per generator letter.
    """

    def __init__(self, n, actions, root=0):
        """
        :param n: number of cosets (subgroup index)
        :param actions: `dict` of letter to image tuple
        :param root: coset of the subgroup itself
        """

        self.n = n
        self.actions = actions
        self.root = root

    def __repr__(self):
        return f'CosetGraph(n={self.n}, root={self.root})'


def paving_from_involutions(alpha, beta, gamma):
    """
    Build a paving from its three fixed-point-free involutions

    :param alpha: `Permutation`
    :param beta: `Permutation`
    :param gamma: `Permutation`
    :returns: `Paving`
    """

    return Paving(alpha, beta, gamma)


def paving_from_quadruple(alpha, sigma, phi):
    """
    Build a paving from <D; alpha, sigma, phi>, checking that alpha,
    alpha*phi and phi*sigma^-1 are fixed-point-free involutions. Every
    violation is reported, not just the first.

    :param alpha: `Permutation`
    :param sigma: `Permutation`
    :param phi: `Permutation`
    :returns: `Paving` with beta = alpha*phi and gamma = sigma*phi^-1
    """

    _check_sizes([('alpha', alpha), ('sigma', sigma), ('phi', phi)])

    beta = compose(alpha, phi)
    gamma_inv = compose(phi, inverse(sigma))

    violations = _Violations()
    violations.check_involution('alpha', alpha)
    violations.check_involution('alpha*phi', beta, 203, 204)
    violations.check_involution('phi*sigma^-1', gamma_inv, 205, 206)
    violations.raise_if_any()

    gamma = compose(sigma, inverse(phi))
    return Paving(alpha, beta, gamma, check=False)


def is_connected(p):
    """
    :param p: `Paving`
    :returns: `bool` of whether <alpha, beta, gamma> is transitive
    """

    return is_transitive(list(p.triple), p.n)


def _require_connected(p):
    if not is_connected(p):
        LOGGER.error('Paving is not connected')
        raise DisconnectedPavingError()


def paving_stats(p):
    """
    Orbit counts of a paving

    :param p: `Paving`
    :returns: `PavingStats`
    """

    n = p.n
    alpha, sigma, phi = p.alpha, p.sigma, p.phi
    sigma_inv = inverse(sigma)

    f3 = orbit_count([alpha, sigma], n)
    f2 = orbit_count([compose(sigma_inv, alpha),
                      compose(inverse(phi), sigma)], n)
    f1 = orbit_count([alpha, phi], n)
    f0 = orbit_count([sigma, phi], n)

    return PavingStats((f0, f1, f2, f3), is_connected(p))


def underlying_map(p):
    """
    :param p: `Paving`
    :returns: `Map2D` <D; alpha, sigma>, one component per 3-cell
    """

    return Map2D(p.alpha, p.sigma)


def relabel(p, by):
    """
    Simultaneous conjugation of alpha, beta and gamma

    :param p: `Paving`
    :param by: `Permutation`
    :returns: `Paving`
    """

    return Paving(*[conjugate(g, by) for g in p.triple], check=False)


def traversal_key(gens, start):
    """
    Relabel darts in breadth-first visiting order from <start>, trying
    generators in the given order, and return the relabeled images.

    :param gens: sequence of image tuples
    :param start: start dart
    :returns: `tuple` of image tuples, or None if not every dart is reached
    """

    n = len(gens[0])
    labels = [-1] * n
    labels[start] = 0
    order = [start]
    head = 0

    while head < len(order):
        d = order[head]
        head += 1
        for g in gens:
            e = g[d]
            if labels[e] < 0:
                labels[e] = len(order)
                order.append(e)

    if len(order) < n:
        return None

    return tuple(tuple(labels[g[d]] for d in order) for g in gens)


def canonical_images(gens):
    """
    Least traversal key over all start darts, and how many start darts
    reach it.

    :param gens: sequence of image tuples generating a transitive group
    :returns: `tuple` of (key, count)
    """

    best = None
    count = 0

    for start in range(len(gens[0])):
        key = traversal_key(gens, start)
        if key is None:
            return None, 0
        if best is None or key < best:
            best, count = key, 1
        elif key == best:
            count += 1

    return best, count


def canonical_form(p):
    """
    Canonical representative of the isomorphism class of a connected
    paving. Two connected pavings are isomorphic iff their canonical
    forms are equal.

    :param p: `Paving`
    :returns: `Paving`
    """

    _require_connected(p)
    key, _ = canonical_images(p.images())
    return Paving.from_images(*key)


def automorphism_count(p):
    """
    Number of dart permutations commuting with alpha, beta and gamma.
    The centralizer acts freely on the darts, so this divides n.

    :param p: connected `Paving`
    :returns: `int`
    """

    _require_connected(p)
    _, count = canonical_images(p.images())
    return count


def coset_graph(p):
    """
    Coset action of the generators a, b, c on the stabilizer of dart 0

    :param p: connected `Paving`
    :returns: `CosetGraph`
    """

    _require_connected(p)
    actions = dict(zip(LETTERS, p.images()))
    return CosetGraph(p.n, actions, root=0)


def free_reduce(word):
    """
    Cancel adjacent equal letters (every generator is an involution)

    :param word: `str` over the generator letters
    :returns: reduced `str`
    """

    stack = []
    for letter in word:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return ''.join(stack)


def schreier_generators(graph):
    """
    Schreier generators of the root stabilizer from a breadth-first
    spanning tree: one word u_d x u_e^-1 per non-tree edge d -x- e.

    :param graph: `CosetGraph`
    :returns: `list` of freely reduced words
    """

    words = {graph.root: ''}
    tree = set()
    queue = [graph.root]

    for d in queue:
        for letter in LETTERS:
            e = graph.actions[letter][d]
            if e not in words:
                words[e] = words[d] + letter
                tree.add((min(d, e), max(d, e), letter))
                queue.append(e)

    generators = []
    for d in range(graph.n):
        for letter in LETTERS:
            e = graph.actions[letter][d]
            if d > e or (d, e, letter) in tree:
                continue
            word = free_reduce(words[d] + letter + words[e][::-1])
            LOGGER.debug(f'Schreier generator from {d}-{letter}-{e}: {word}')
            generators.append(word)

    return generators


def subgroup_rank(graph):
    """
    :param graph: `CosetGraph`
    :returns: number of free Schreier generators (n/2 + 1 when free)
    """

    return len(schreier_generators(graph))


def is_free(graph):
    """
    The stabilizer is free iff no generator letter fixes a coset.

    :param graph: `CosetGraph`
    :returns: `bool`
    """

    return all(
        is_fpf_involution(Permutation(action, check=False))
        for action in graph.actions.values()
    )


def mirror_double(m):
    """
    Glue a connected 2D map to its mirror image: darts i + n carry the
    mirrored map and phi swaps i with i + n.

    :param m: connected `Map2D` whose alpha pairs every dart
    :returns: `Paving` on 2n darts with two 3-cells and complexity 2g
    """

    if not map_is_connected(m):
        msg = 'Map is not connected'
        LOGGER.error(msg)
        raise MapError(msg, code=115)

    require_pairing(m)

    n = m.n
    sigma_inv = inverse(m.sigma)

    alpha = list(m.alpha.images) + [m.alpha(i) + n for i in range(n)]
    sigma = list(m.sigma.images) + [sigma_inv(i) + n for i in range(n)]
    phi = [(i + n) % (2 * n) for i in range(2 * n)]

    return paving_from_quadruple(Permutation(alpha, check=False),
                                 Permutation(sigma, check=False),
                                 Permutation(phi, check=False))


def random_paving(n, rng=None, connected=True):
    """
    Random paving from three uniform fixed-point-free involutions

    :param n: even dart count
    :param rng: `random.Random` instance
    :param connected: `bool` of whether to redraw until transitive
    :returns: `Paving`
    """

    rng = rng or random

    while True:
        p = Paving(*[random_fpf_involution(n, rng) for _ in range(3)],
                   check=False)
        if not connected or n == 0 or is_connected(p):
            return p


def paving_from_dict(dict_):
    """
    :param dict_: `dict` in involution form (alpha, beta, gamma) or
                  quadruple form (alpha, sigma, phi), 1-based
    :returns: `Paving`
    """

    keys = set(dict_)

    if {'alpha', 'beta', 'gamma'} <= keys:
        names = ('alpha', 'beta', 'gamma')
        build = paving_from_involutions
    elif {'alpha', 'sigma', 'phi'} <= keys:
        names = ('alpha', 'sigma', 'phi')
        build = paving_from_quadruple
    else:
        msg = 'Paving needs alpha, beta, gamma or alpha, sigma, phi'
        LOGGER.error(msg)
        raise InputError(msg, error=msg)

    p = build(*[from_one_based(dict_[name]) for name in names])

    if 'n' in dict_ and dict_['n'] != p.n:
        msg = f'Declared n={dict_["n"]} but arrays hold {p.n} darts'
        LOGGER.error(msg)
        raise InputError(msg, error=msg)

    return p


def paving_to_dict(p, form='involutions'):
    """
    :param p: `Paving`
    :param form: `involutions` or `quadruple`
    :returns: `dict` with 1-based image arrays
    """

    if form == 'quadruple':
        names = ('alpha', 'sigma', 'phi')
    else:
        names = ('alpha', 'beta', 'gamma')

    dict_ = {'n': p.n}
    for name in names:
        dict_[name] = to_one_based(getattr(p, name))
    return dict_


def load_paving(filepath):
    """
    :param filepath: path to a paving JSON document
    :returns: `Paving`
    """

    return paving_from_dict(load_json(filepath, schema='paving'))


def load_map(filepath):
    """
    :param filepath: path to a map JSON document
    :returns: `Map2D`
    """

    return map_from_dict(load_json(filepath, schema='map'))


def analysis(p):
    """
    Stats of a paving and of its underlying map components

    :param p: `Paving`
    :returns: `dict`
    """

    stats = paving_stats(p)
    base = underlying_map(p)
    base_stats = map_stats(base)

    component_stats = []
    for component in map_components(base):
        entry = map_stats(component).to_dict()
        entry['genus'] = entry.pop('genus_per_component')[0]
        entry.pop('components')
        component_stats.append(entry)

    return {
        'paving': paving_to_dict(p),
        'stats': stats.to_dict(),
        'underlying_map': {
            'components': base_stats.components,
            'euler_characteristic': base_stats.euler_characteristic,
            'component_stats': component_stats
        }
    }


def _echo_analysis(result):
    stats = result['stats']
    base = result['underlying_map']

    click.echo(f'n: {result["paving"]["n"]}')
    click.echo(f'f-vector: {tuple(stats["f_vector"])}')
    click.echo(f'complexity: {stats["complexity"]}')
    click.echo(f'euler characteristic: {stats["euler_characteristic"]}')
    click.echo(f'connected: {stats["connected"]}')
    click.echo(f'map components: {base["components"]}')

    for i, comp in enumerate(base['component_stats'], start=1):
        click.echo(f'  component {i}: vertices={comp["vertices"]} '
                   f'edges={comp["edges"]} faces={comp["faces"]} '
                   f'genus={comp["genus"]}')


def report_failure(err):
    """
    Echo a library error on stderr through the error definitions

    :param err: exception carrying `code`/`kwargs` or `errors`
    :returns: `bool` of whether any message was severe
    """

    severe = False
    with CheckReport() as check_report:
        for message, is_severe in check_report.add_error(err):
            click.echo(message, err=True)
            severe = severe or is_severe
    return severe


@click.command()
@click.pass_context
@click.option('--input', '-i', 'input_', required=True,
              type=click.Path(exists=True, dir_okay=False),
              help='Paving JSON file (involution or quadruple form)')
@click.option('--format', '-f', 'format_', default='table',
              type=click.Choice(['table', 'json']), help='Output format')
def analyze(ctx, input_, format_):
    """validate a paving and report its f-vector"""

    try:
        p = load_paving(input_)
    except (InputError, PavingAxiomError, PermutationError) as err:
        report_failure(err)
        ctx.exit(1)

    LOGGER.info(f'Analyzing paving on {p.n} darts from {input_}')
    result = analysis(p)

    if format_ == 'json':
        click.echo(write_json(result))
    else:
        _echo_analysis(result)


@click.command('mirror-double')
@click.pass_context
@click.option('--map', '-m', 'map_', required=True,
              type=click.Path(exists=True, dir_okay=False),
              help='2D map JSON file')
@click.option('--out', '-o', 'out', default=None,
              type=click.Path(dir_okay=False),
              help='Output paving JSON file (default: stdout)')
def mirror_double_(ctx, map_, out):
    """glue a map to its mirror image"""

    try:
        m = load_map(map_)
        p = mirror_double(m)
    except (InputError, MapError, PavingAxiomError, PermutationError) as err:
        report_failure(err)
        ctx.exit(1)

    stats = paving_stats(p)
    document = paving_to_dict(p)

    if out is None:
        click.echo(write_json(document))
    else:
        write_json(document, out)
        click.echo(f'Wrote {p.n}-dart paving to {out}')

    click.echo(f'f-vector: {stats.f_vector}, '
               f'complexity: {stats.complexity}', err=out is None)
