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
Permutations of the dart set {0, ..., n-1}.

Composition is "apply the right factor first": ``compose(p, q)(i)`` is
``p(q(i))``. Darts are 0-based in memory; every external format
(JSON, cycle strings, CLI output) is 1-based.
"""

from collections import Counter
from math import gcd
import logging
import random

LOGGER = logging.getLogger(__name__)


class PermutationError(ValueError):
    """custom exception handler"""

    def __init__(self, message, code=101, **kwargs):
        super(PermutationError, self).__init__(message)
        self.code = code
        self.kwargs = kwargs


class Permutation(object):
    """
    Immutable bijection of {0, ..., n-1}, stored as a tuple of images.
    """

    __slots__ = ('_images',)

    def __init__(self, images, check=True):
        """
        :param images: sequence where images[i] is the image of dart i.
        :param check: `bool` of whether to validate the images.
        """

        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            # reported 1-based, as read and written externally
            shown = [i + 1 if isinstance(i, int) else i for i in images]
            msg = f'Not a permutation of 1..{len(images)}: {shown}'
            LOGGER.error(msg)
            raise PermutationError(msg, code=101, images=shown)

        self._images = images

    @property
    def images(self):
        return self._images

    @property
    def n(self):
        return len(self._images)

    def __len__(self):
        return len(self._images)

    def __call__(self, i):
        return self._images[i]

    def __iter__(self):
        return iter(self._images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f'Permutation({to_cycle_string(self)}, n={self.n})'


class CycleType(object):
    """
    Cycle type of a permutation: counts[k] is the number of cycles
    of length k + 1.
    """

    __slots__ = ('counts',)

    def __init__(self, counts):
        counts = list(counts)
        while counts and counts[-1] == 0:
            counts.pop()
        self.counts = tuple(counts)

    @property
    def n(self):
        return sum((k + 1) * c for k, c in enumerate(self.counts))

    def __eq__(self, other):
        if not isinstance(other, CycleType):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __repr__(self):
        parts = [f'{c}x{k + 1}' for k, c in enumerate(self.counts) if c]
        return f'CycleType({", ".join(parts)})'


def _check_sizes(*perms):
    sizes = {p.n for p in perms}
    if len(sizes) > 1:
        msg = f'Size mismatch: {sorted(sizes)}'
        LOGGER.error(msg)
        raise PermutationError(msg, code=102, sizes=sorted(sizes))


def identity(n):
    """
    Identity permutation on n darts

    :param n: dart count
    :returns: `Permutation`
    """

    return Permutation(range(n), check=False)


def compose(p, q):
    """
    Product p*q, with q applied first

    :param p: left factor
    :param q: right factor (applied first)
    :returns: `Permutation` r with r(i) = p(q(i))
    """

    _check_sizes(p, q)
    pi = p.images
    return Permutation([pi[j] for j in q.images], check=False)


def compose_all(*perms):
    """
    Product of several permutations, rightmost applied first

    :param perms: one or more `Permutation` objects on the same darts
    :returns: `Permutation`
    """

    result = perms[-1]
    for p in reversed(perms[:-1]):
        result = compose(p, result)
    return result


def inverse(p):
    """
    Inverse permutation

    :param p: `Permutation`
    :returns: `Permutation` q with p*q = id
    """

    images = [0] * p.n
    for i, j in enumerate(p.images):
        images[j] = i
    return Permutation(images, check=False)


def fixed_points(p):
    """
    :param p: `Permutation`
    :returns: `list` of darts fixed by p
    """

    return [i for i, j in enumerate(p.images) if i == j]


def is_involution(p):
    """
    :param p: `Permutation`
    :returns: `bool` of whether p*p is the identity
    """

    images = p.images
    return all(images[j] == i for i, j in enumerate(images))


def is_fpf_involution(p):
    """
    :param p: `Permutation`
    :returns: `bool` of whether p is an involution without fixed points
    """

    images = p.images
    return all(j != i and images[j] == i for i, j in enumerate(images))


def _matchings(free):
    """
    Recursively pair the smallest free dart with every other free dart.
    Yields lists of pairs.
    """

    if not free:
        yield []
        return

    first = free[0]
    for pos in range(1, len(free)):
        rest = free[1:pos] + free[pos + 1:]
        for matching in _matchings(rest):
            yield [(first, free[pos])] + matching


def _matching_to_images(n, pairs):
    images = [0] * n
    for i, j in pairs:
        images[i] = j
        images[j] = i
    return tuple(images)


def fpf_involution_images(n, first_partner=None):
    """
    Raw image tuples of all fixed-point-free involutions on n darts.

    :param n: dart count
    :param first_partner: if given, only yield involutions pairing dart 0
                          with this dart (used to split the stream)
    :returns: generator of `tuple`
    """

    if n == 0:
        yield ()
        return
    if n % 2 == 1:
        return

    free = list(range(n))
    partners = range(1, n) if first_partner is None else [first_partner]

    for partner in partners:
        rest = free[1:partner] + free[partner + 1:]
        for matching in _matchings(rest):
            yield _matching_to_images(n, [(0, partner)] + matching)


def fpf_involutions(n, first_partner=None):
    """
    Stream of every fixed-point-free involution on n darts, each exactly
    once: (n-1)!! of them for even n, none for odd n > 0, and the empty
    permutation for n = 0.

    :param n: dart count
    :param first_partner: optional partner of dart 0 (stream split)
    :returns: generator of `Permutation`
    """

    for images in fpf_involution_images(n, first_partner):
        yield Permutation(images, check=False)


def double_factorial(n):
    """
    :param n: integer >= -1
    :returns: n!! (with (-1)!! = 0!! = 1)
    """

    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def count_fpf_involutions(n):
    """
    :param n: dart count
    :returns: number of fixed-point-free involutions on n darts
    """

    if n % 2 == 1:
        return 0
    return double_factorial(n - 1)


def random_fpf_involution(n, rng=None):
    """
    Uniformly random fixed-point-free involution: pair a random
    shuffle of the darts consecutively.

    :param n: even dart count
    :param rng: `random.Random` instance (default: module RNG)
    :returns: `Permutation`
    """

    if n % 2 == 1:
        msg = f'No fixed-point-free involution on {n} darts'
        LOGGER.error(msg)
        raise PermutationError(msg, code=103, n=n)

    rng = rng or random
    darts = list(range(n))
    rng.shuffle(darts)
    pairs = zip(darts[0::2], darts[1::2])
    return Permutation(_matching_to_images(n, pairs), check=False)


class UnionFind(object):
    """
    Disjoint sets over {0, ..., n-1} with path halving and union by size.
    """

    def __init__(self, n):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        self.count -= 1
        return True


def orbit_partition(gens, n):
    """
    Union-find over generator edges i -- g(i).

    :param gens: list of `Permutation` (or raw image tuples) on n darts
    :param n: dart count
    :returns: `UnionFind` holding the orbits
    """

    uf = UnionFind(n)
    for g in gens:
        images = g.images if isinstance(g, Permutation) else g
        if len(images) != n:
            msg = f'Generator on {len(images)} darts, expected {n}'
            LOGGER.error(msg)
            raise PermutationError(msg, code=102, sizes=[len(images), n])
        for i, j in enumerate(images):
            if i != j:
                uf.union(i, j)
    return uf


def orbits(gens, n):
    """
    :param gens: list of `Permutation` on n darts
    :param n: dart count
    :returns: `list` of orbits (sorted lists of darts), ordered by least dart
    """

    uf = orbit_partition(gens, n)
    blocks = {}
    for i in range(n):
        blocks.setdefault(uf.find(i), []).append(i)
    return sorted(blocks.values())


def orbit_count(gens, n):
    """
    Number of orbits of the group generated by gens acting on n darts.
    The group itself is never materialised.

    :param gens: list of `Permutation` on n darts
    :param n: dart count
    :returns: `int`
    """

    return orbit_partition(gens, n).count


def is_transitive(gens, n):
    """
    Transitivity of the generated group. The empty action (n = 0) is
    not transitive; a single dart (n = 1) is one orbit, so it is
    transitive even with no generators.

    :param gens: list of `Permutation` on n darts
    :param n: dart count
    :returns: `bool`
    """

    if n == 0:
        return False
    return orbit_count(gens, n) == 1


def conjugate(p, by):
    """
    Conjugate by^-1 * p * by

    :param p: `Permutation`
    :param by: `Permutation`
    :returns: `Permutation`
    """

    _check_sizes(p, by)
    return compose_all(inverse(by), p, by)


def cycles(p):
    """
    :param p: `Permutation`
    :returns: `list` of cycles (0-based tuples), each starting at its
              least dart, ordered by least dart; fixed points included
    """

    seen = [False] * p.n
    result = []
    for start in range(p.n):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p(i)
        result.append(tuple(cycle))
    return result


def cycle_type(p):
    """
    :param p: `Permutation`
    :returns: `CycleType`
    """

    lengths = Counter(len(c) for c in cycles(p))
    top = max(lengths) if lengths else 0
    return CycleType([lengths.get(k + 1, 0) for k in range(top)])


def order(p):
    """
    :param p: `Permutation`
    :returns: multiplicative order of p
    """

    result = 1
    for c in cycles(p):
        result = result * len(c) // gcd(result, len(c))
    return result


def from_cycles(cycles_, n):
    """
    Build a permutation from 1-based cycle notation, e.g.
    ``from_cycles([(1, 2), (3, 4)], 4)`` for (1,2)(3,4).

    :param cycles_: iterable of 1-based cycles
    :param n: dart count
    :returns: `Permutation`
    """

    images = list(range(n))
    for cycle in cycles_:
        for pos, dart in enumerate(cycle):
            images[dart - 1] = cycle[(pos + 1) % len(cycle)] - 1
    return Permutation(images)


def to_cycle_string(p):
    """
    1-based cycle notation without fixed points, '()' for the identity

    :param p: `Permutation`
    :returns: `str`
    """

    parts = [
        '(' + ','.join(str(i + 1) for i in c) + ')'
        for c in cycles(p) if len(c) > 1
    ]
    return ''.join(parts) or '()'


def from_one_based(images):
    """
    :param images: 1-based image array, e.g. [2, 1, 4, 3]
    :returns: `Permutation`
    """

    return Permutation([int(i) - 1 for i in images])


def to_one_based(p):
    """
    :param p: `Permutation`
    :returns: `list` of 1-based images
    """

    return [i + 1 for i in p.images]


def to_cycles(p):
    """
    :param p: `Permutation`
    :returns: `list` of 1-based cycles of length > 1
    """

    return [tuple(i + 1 for i in c) for c in cycles(p) if len(c) > 1]
