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

import logging

from pavings.perm import (Permutation, compose, conjugate, cycles,
                          from_one_based, inverse, is_fpf_involution,
                          is_involution, is_transitive, orbit_count, orbits,
                          to_one_based)

LOGGER = logging.getLogger(__name__)


class MapError(ValueError):
    """custom exception handler"""

    def __init__(self, message, code=111, **kwargs):
        super(MapError, self).__init__(message)
        self.code = code
        self.kwargs = kwargs


class Map2D(object):
    """
    Oriented combinatorial map <D; alpha, sigma>: alpha pairs darts into
    edges, sigma rotates darts around vertices. Faces are the cycles of
    sigma^-1 alpha.
    """

    __slots__ = ('alpha', 'sigma')

    def __init__(self, alpha, sigma):
        """
        :param alpha: edge involution (`Permutation`)
        :param sigma: vertex rotation (`Permutation`)
        """

        if alpha.n != sigma.n:
            msg = f'alpha on {alpha.n} darts, sigma on {sigma.n} darts'
            LOGGER.error(msg)
            raise MapError(msg, code=112, sizes=[alpha.n, sigma.n])

        if not is_involution(alpha):
            msg = 'alpha is not an involution'
            LOGGER.error(msg)
            raise MapError(msg, code=111)

        self.alpha = alpha
        self.sigma = sigma

    @property
    def n(self):
        return self.alpha.n

    @property
    def phi(self):
        """face permutation sigma^-1 alpha"""

        return compose(inverse(self.sigma), self.alpha)

    def __eq__(self, other):
        if not isinstance(other, Map2D):
            return NotImplemented
        return (self.alpha, self.sigma) == (other.alpha, other.sigma)

    def __hash__(self):
        return hash((self.alpha, self.sigma))

    def __repr__(self):
        return f'Map2D(n={self.n}, alpha={self.alpha}, sigma={self.sigma})'


class MapStats(object):
    """Orbit statistics of a 2D map"""

    def __init__(self, vertices, edges, faces, components,
                 genus_per_component):
        self.vertices = vertices
        self.edges = edges
        self.faces = faces
        self.components = components
        self.genus_per_component = genus_per_component

    @property
    def euler_characteristic(self):
        return self.faces - self.edges + self.vertices

    def to_dict(self):
        return {
            'vertices': self.vertices,
            'edges': self.edges,
            'faces': self.faces,
            'components': self.components,
            'euler_characteristic': self.euler_characteristic,
            'genus_per_component': self.genus_per_component
        }

    def __repr__(self):
        return f'MapStats({self.to_dict()})'


def _cycles_within(p, block):
    """number of cycles of p whose darts lie in block"""

    block = set(block)
    return sum(1 for c in cycles(p) if c[0] in block)


def _genus(chi):
    if chi % 2 == 0 and chi <= 2:
        return (2 - chi) // 2
    return None


def map_stats(m):
    """
    Vertices, edges, faces and genus of a 2D map

    :param m: `Map2D`
    :returns: `MapStats`
    """

    n = m.n
    phi = m.phi

    genera = []
    for block in orbits([m.alpha, m.sigma], n):
        chi = (_cycles_within(phi, block) - _cycles_within(m.alpha, block)
               + _cycles_within(m.sigma, block))
        genera.append(_genus(chi))

    stats = MapStats(
        vertices=orbit_count([m.sigma], n),
        edges=orbit_count([m.alpha], n),
        faces=orbit_count([phi], n),
        components=orbit_count([m.alpha, m.sigma], n),
        genus_per_component=genera
    )

    LOGGER.debug(f'Map stats: {stats}')
    return stats


def is_connected(m):
    """
    :param m: `Map2D`
    :returns: `bool` of whether <alpha, sigma> acts transitively
    """

    return is_transitive([m.alpha, m.sigma], m.n)


def restrict(m, block):
    """
    Restriction of a map to a union of its components, darts renumbered
    in increasing order.

    :param m: `Map2D`
    :param block: darts closed under alpha and sigma
    :returns: `Map2D`
    """

    darts = sorted(block)
    index = {d: i for i, d in enumerate(darts)}

    try:
        alpha = [index[m.alpha(d)] for d in darts]
        sigma = [index[m.sigma(d)] for d in darts]
    except KeyError as err:
        msg = f'Dart block is not closed under the map: {err}'
        LOGGER.error(msg)
        raise MapError(msg, code=113)

    return Map2D(Permutation(alpha, check=False),
                 Permutation(sigma, check=False))


def components(m):
    """
    :param m: `Map2D`
    :returns: `list` of connected `Map2D` components, ordered by least dart
    """

    return [restrict(m, block) for block in orbits([m.alpha, m.sigma], m.n)]


def relabel(m, by):
    """
    Simultaneous conjugation of both permutations

    :param m: `Map2D`
    :param by: `Permutation`
    :returns: `Map2D`
    """

    return Map2D(conjugate(m.alpha, by), conjugate(m.sigma, by))


def disjoint_union(*maps):
    """
    :param maps: `Map2D` objects
    :returns: `Map2D` with the darts of each map shifted past the previous
    """

    alpha, sigma = [], []
    for m in maps:
        offset = len(alpha)
        alpha.extend(i + offset for i in m.alpha.images)
        sigma.extend(i + offset for i in m.sigma.images)

    return Map2D(Permutation(alpha, check=False),
                 Permutation(sigma, check=False))


def require_pairing(m):
    """
    Raise unless alpha pairs every dart (fixed-point-free).

    :param m: `Map2D`
    :returns: void
    """

    if not is_fpf_involution(m.alpha):
        msg = 'alpha has fixed points'
        LOGGER.error(msg)
        raise MapError(msg, code=114)


def map_from_dict(dict_):
    """
    :param dict_: `dict` with 1-based "alpha" and "sigma" image arrays
    :returns: `Map2D`
    """

    m = Map2D(from_one_based(dict_['alpha']), from_one_based(dict_['sigma']))
    if 'n' in dict_ and dict_['n'] != m.n:
        msg = f'Declared n={dict_["n"]} but arrays hold {m.n} darts'
        LOGGER.error(msg)
        raise MapError(msg, code=112, sizes=[dict_['n'], m.n])
    return m


def map_to_dict(m):
    """
    :param m: `Map2D`
    :returns: `dict` with 1-based image arrays
    """

    return {
        'n': m.n,
        'alpha': to_one_based(m.alpha),
        'sigma': to_one_based(m.sigma)
    }
