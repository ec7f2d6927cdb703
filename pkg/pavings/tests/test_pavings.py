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

import os
import random
import unittest

from pavings import config
from pavings.map2d import (Map2D, MapError, components, disjoint_union,
                           is_connected as map_is_connected, map_from_dict,
                           map_stats, relabel as relabel_map)
from pavings.paving import (Paving, PavingAxiomError, analysis,
                            automorphism_count, canonical_form, coset_graph,
                            free_reduce, is_connected, is_free, load_map,
                            load_paving, mirror_double, paving_from_dict,
                            paving_from_quadruple, paving_stats,
                            paving_to_dict, random_paving, relabel,
                            schreier_generators, subgroup_rank,
                            underlying_map)
from pavings.perm import (Permutation, PermutationError, compose, conjugate,
                          count_fpf_involutions, cycle_type, cycles,
                          fixed_points, fpf_involutions, from_cycles,
                          from_one_based, identity, inverse, is_involution,
                          is_fpf_involution, is_transitive, order,
                          orbit_count, random_fpf_involution,
                          to_cycle_string, to_cycles, to_one_based)
from pavings.util import InputError, load_json, str2bool


def resolve_test_data_path(test_data_file):
    """
    helper function to ensure filepath is valid
    for different testing context (setuptools, directly, etc.)

    :param test_data_file: Path relative to the fixture directory.
    :returns: Full path to the input file.
    """

    if os.path.exists(test_data_file):
        return test_data_file
    else:
        path = os.path.join(config.PAVINGS_FIXTURE_DIR, test_data_file)
        if os.path.exists(path):
            return path


def paving(alpha, beta, gamma):
    """Paving from 1-based image arrays"""

    return Paving(*[from_one_based(p) for p in (alpha, beta, gamma)])


P1 = ([2, 1], [2, 1], [2, 1])
P2 = ([2, 1, 4, 3], [2, 1, 4, 3], [3, 4, 1, 2])
P3 = ([2, 1, 4, 3], [3, 4, 1, 2], [2, 1, 4, 3])
P4 = ([2, 1, 4, 3], [3, 4, 1, 2], [3, 4, 1, 2])
P5 = ([2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1])


class PermutationTest(unittest.TestCase):
    """Test suite for perm.py"""

    def test_compose_order(self):
        """Test that the right factor is applied first"""

        p = from_cycles([(1, 2)], 3)
        q = from_cycles([(2, 3)], 3)

        self.assertEqual(compose(p, q)(0), 1)
        self.assertEqual(compose(q, p)(0), 2)
        self.assertEqual(p * q, compose(p, q))

    def test_inverse(self):
        """Test inverse and identity"""

        p = from_cycles([(1, 3, 5, 2)], 6)

        self.assertEqual(compose(p, inverse(p)), identity(6))
        self.assertEqual(compose(inverse(p), p), identity(6))
        self.assertEqual(order(p), 4)

    def test_invalid_images(self):
        """Test rejection of non-bijective image arrays"""

        with self.assertRaises(PermutationError) as ctx:
            Permutation([0, 0, 1])
        self.assertEqual(ctx.exception.code, 101)

        with self.assertRaises(PermutationError) as ctx:
            from_one_based([1, 1])
        self.assertEqual(ctx.exception.kwargs['images'], [1, 1])
        self.assertIn('[1, 1]', str(ctx.exception))

        with self.assertRaises(PermutationError) as ctx:
            compose(identity(2), identity(3))
        self.assertEqual(ctx.exception.code, 102)

    def test_involutions(self):
        """Test involution predicates"""

        self.assertTrue(is_fpf_involution(from_one_based([2, 1, 4, 3])))
        self.assertTrue(is_involution(from_one_based([1, 3, 2])))
        self.assertFalse(is_fpf_involution(from_one_based([1, 3, 2])))
        self.assertFalse(is_involution(from_one_based([2, 3, 1])))
        self.assertEqual(fixed_points(from_one_based([1, 3, 2])), [0])

    def test_fpf_involution_stream(self):
        """Test that the stream yields (n-1)!! distinct involutions"""

        for n in range(0, 9):
            stream = list(fpf_involutions(n))
            self.assertEqual(len(stream), count_fpf_involutions(n))
            self.assertEqual(len(set(stream)), len(stream))
            for p in stream:
                self.assertTrue(n == 0 or is_fpf_involution(p))

        self.assertEqual(count_fpf_involutions(8), 105)
        self.assertEqual(list(fpf_involutions(3)), [])
        self.assertEqual(len(list(fpf_involutions(0))), 1)

        split = [len(list(fpf_involutions(6, first_partner=k)))
                 for k in range(1, 6)]
        self.assertEqual(split, [3] * 5)

    def test_random_fpf_involution(self):
        """Test random involutions on even and odd dart counts"""

        rng = random.Random(7)
        for n in (2, 4, 10):
            self.assertTrue(is_fpf_involution(random_fpf_involution(n, rng)))

        with self.assertRaises(PermutationError) as ctx:
            random_fpf_involution(5, rng)
        self.assertEqual(ctx.exception.code, 103)

    def test_orbits(self):
        """Test orbit counting and transitivity"""

        alpha = from_one_based([2, 1, 4, 3])
        beta = from_one_based([3, 4, 1, 2])

        self.assertEqual(orbit_count([alpha], 4), 2)
        self.assertEqual(orbit_count([alpha, beta], 4), 1)
        self.assertTrue(is_transitive([alpha, beta], 4))
        self.assertFalse(is_transitive([alpha], 4))
        self.assertFalse(is_transitive([], 0))
        self.assertEqual(orbit_count([], 0), 0)
        self.assertTrue(is_transitive([], 1))
        self.assertEqual(orbit_count([], 1), 1)

    def test_cycles(self):
        """Test cycle notation both ways"""

        p = from_cycles([(1, 5, 3), (2, 9, 8)], 10)

        self.assertEqual(to_cycle_string(p), '(1,5,3)(2,9,8)')
        self.assertEqual(cycles(p)[0], (0, 4, 2))
        self.assertEqual(cycle_type(p).counts, (4, 0, 2))
        self.assertEqual(to_cycle_string(identity(3)), '()')
        self.assertEqual(to_one_based(from_one_based([3, 1, 2])), [3, 1, 2])
        self.assertEqual(to_cycles(p), [(1, 5, 3), (2, 9, 8)])
        self.assertEqual(from_cycles(to_cycles(p), 10), p)

    def test_conjugate(self):
        """Test conjugation keeps the cycle type"""

        p = from_cycles([(1, 2, 3)], 4)
        by = from_cycles([(1, 4)], 4)

        q = conjugate(p, by)
        self.assertEqual(cycle_type(q), cycle_type(p))
        self.assertEqual(compose(by, q), compose(p, by))


class Map2DTest(unittest.TestCase):
    """Test suite for map2d.py"""

    def test_single_edge(self):
        """Test one edge with one vertex on the sphere"""

        m = Map2D(from_one_based([2, 1]), from_one_based([2, 1]))
        stats = map_stats(m)

        self.assertEqual(stats.vertices, 1)
        self.assertEqual(stats.edges, 1)
        self.assertEqual(stats.faces, 2)
        self.assertEqual(stats.euler_characteristic, 2)
        self.assertEqual(stats.genus_per_component, [0])

    def test_tetrahedron(self):
        """Test the boundary of a tetrahedron"""

        m = load_map(resolve_test_data_path('maps/tetrahedron.json'))
        stats = map_stats(m)

        self.assertTrue(map_is_connected(m))
        self.assertEqual((stats.vertices, stats.edges, stats.faces),
                         (4, 6, 4))
        self.assertEqual(stats.euler_characteristic, 2)
        self.assertEqual(stats.genus_per_component, [0])

    def test_map_fixtures(self):
        """Test every map fixture against its expected counts"""

        for name in ('single-edge', 'tetrahedron', 'torus'):
            path = resolve_test_data_path(f'maps/{name}.json')
            expected = load_json(path)['expected']
            stats = map_stats(load_map(path))

            self.assertEqual(stats.vertices, expected['vertices'])
            self.assertEqual(stats.edges, expected['edges'])
            self.assertEqual(stats.faces, expected['faces'])
            self.assertEqual(stats.genus_per_component, [expected['genus']])

    def test_disconnected(self):
        """Test components and genus per component"""

        tetra = load_map(resolve_test_data_path('maps/tetrahedron.json'))
        torus = load_map(resolve_test_data_path('maps/torus.json'))
        m = disjoint_union(tetra, torus)
        stats = map_stats(m)

        self.assertFalse(map_is_connected(m))
        self.assertEqual(stats.components, 2)
        self.assertEqual(stats.genus_per_component, [0, 1])
        self.assertEqual(stats.euler_characteristic, 2)
        self.assertEqual(components(m), [tetra, torus])

    def test_relabel_invariance(self):
        """Test that relabeling darts keeps the counts"""

        m = load_map(resolve_test_data_path('maps/tetrahedron.json'))
        by = random_fpf_involution(12, random.Random(3))

        self.assertEqual(map_stats(relabel_map(m, by)).to_dict(),
                         map_stats(m).to_dict())

    def test_invalid_map(self):
        """Test map validation errors"""

        with self.assertRaises(MapError) as ctx:
            Map2D(from_one_based([2, 3, 1]), identity(3))
        self.assertEqual(ctx.exception.code, 111)

        with self.assertRaises(MapError) as ctx:
            Map2D(identity(2), identity(4))
        self.assertEqual(ctx.exception.code, 112)

        with self.assertRaises(MapError) as ctx:
            map_from_dict({'n': 3, 'alpha': [2, 1], 'sigma': [1, 2]})
        self.assertEqual(ctx.exception.code, 112)

    def test_fixed_points_allowed(self):
        """Test that a standalone map may leave a dart unpaired"""

        m = Map2D(from_one_based([1]), from_one_based([1]))
        stats = map_stats(m)

        self.assertEqual(stats.edges, 1)
        self.assertEqual(stats.faces, 1)


class PavingTest(unittest.TestCase):
    """Test suite for paving.py"""

    def test_small_examples(self):
        """Test f-vectors of the four-dart examples"""

        expected = [
            (P1, (1, 1, 1, 1)),
            (P2, (2, 2, 1, 1)),
            (P3, (1, 1, 1, 1)),
            (P4, (1, 1, 2, 2)),
            (P5, (2, 1, 1, 2)),
        ]

        for images, f_vector in expected:
            stats = paving_stats(paving(*images))
            self.assertEqual(stats.f_vector, f_vector)
            self.assertEqual(stats.euler_characteristic, 0)
            self.assertEqual(stats.complexity, 0)
            self.assertTrue(stats.connected)

    def test_fixture_files(self):
        """Test that each paving fixture reports its expected stats"""

        for name in ('p1', 'p2', 'p3', 'p4', 'p5', 'thurston'):
            path = resolve_test_data_path(f'pavings/{name}.json')
            expected = load_json(path)['expected']
            stats = paving_stats(load_paving(path)).to_dict()

            for key, value in expected.items():
                self.assertEqual(stats[key], value, f'{name}: {key}')

    def test_thurston(self):
        """Test the figure-eight glueing of two tetrahedra"""

        p = load_paving(resolve_test_data_path('pavings/thurston.json'))
        stats = paving_stats(p)

        self.assertEqual(p.n, 24)
        self.assertTrue(is_connected(p))
        self.assertEqual(stats.f_vector, (1, 2, 4, 2))
        self.assertEqual(stats.complexity, -1)
        self.assertEqual(stats.euler_characteristic, 1)

        base = map_stats(underlying_map(p))
        self.assertEqual(base.components, 2)
        self.assertEqual(base.genus_per_component, [0, 0])
        for component in components(underlying_map(p)):
            cs = map_stats(component)
            self.assertEqual((cs.vertices, cs.edges, cs.faces), (4, 6, 4))

    def test_forms_agree(self):
        """Test that the triple and quadruple forms describe one paving"""

        p = paving(*P5)
        q = paving_from_quadruple(p.alpha, p.sigma, p.phi)

        self.assertEqual(p, q)
        self.assertEqual(paving_from_dict(paving_to_dict(p, 'quadruple')), p)
        self.assertEqual(paving_from_dict(paving_to_dict(p)), p)

    def test_axiom_violations(self):
        """Test that every violated axiom is reported"""

        with self.assertRaises(PavingAxiomError) as ctx:
            paving([2, 1, 3], [2, 1, 3], [2, 1, 3])
        codes = [code for code, _ in ctx.exception.errors]
        self.assertEqual(codes, [202, 202, 202])

        with self.assertRaises(PavingAxiomError) as ctx:
            paving([2, 1], [2, 1, 4, 3], [2, 1])
        self.assertEqual(ctx.exception.code, 207)

        alpha = from_one_based([2, 1, 4, 3])
        with self.assertRaises(PavingAxiomError) as ctx:
            paving_from_quadruple(alpha, identity(4), identity(4))
        codes = [code for code, _ in ctx.exception.errors]
        self.assertIn(206, codes)
        self.assertNotIn(204, codes)

        with self.assertRaises(PavingAxiomError) as ctx:
            paving_from_quadruple(alpha, identity(4),
                                  from_one_based([2, 3, 1, 4]))
        codes = [code for code, _ in ctx.exception.errors]
        self.assertIn(203, codes)

    def test_disconnected(self):
        """Test that a disjoint union is not connected"""

        p = paving([2, 1, 4, 3], [2, 1, 4, 3], [2, 1, 4, 3])

        self.assertFalse(is_connected(p))
        self.assertFalse(paving_stats(p).connected)
        with self.assertRaises(PavingAxiomError) as ctx:
            canonical_form(p)
        self.assertEqual(ctx.exception.code, 208)

    def test_dict_input(self):
        """Test malformed paving documents"""

        with self.assertRaises(InputError):
            paving_from_dict({'alpha': [2, 1]})

        with self.assertRaises(InputError):
            paving_from_dict({'n': 4, 'alpha': [2, 1], 'beta': [2, 1],
                              'gamma': [2, 1]})

    def test_automorphisms(self):
        """Test automorphism counts of the small examples"""

        self.assertEqual(automorphism_count(paving(*P1)), 2)
        for images in (P2, P3, P4, P5):
            self.assertEqual(automorphism_count(paving(*images)), 4)

    def test_canonical_forms(self):
        """Test that canonical forms separate the four-dart classes"""

        forms = {canonical_form(paving(*images))
                 for images in (P2, P3, P4, P5)}
        self.assertEqual(len(forms), 4)

        p = paving(*P5)
        by = from_one_based([3, 1, 4, 2])
        self.assertEqual(canonical_form(relabel(p, by)), canonical_form(p))

    def check_random_invariants(self, count):
        rng = random.Random(2024)

        for n in range(2, 13, 2):
            for _ in range(count):
                p = random_paving(n, rng)
                by = Permutation(rng.sample(range(n), n))
                q = relabel(p, by)
                stats = paving_stats(p)

                self.assertEqual(compose(p.alpha, p.phi), p.beta)
                self.assertEqual(compose(p.phi, inverse(p.sigma)), p.gamma)
                self.assertEqual(paving_stats(q), stats)
                self.assertEqual(canonical_form(q), canonical_form(p))
                self.assertEqual(n % automorphism_count(p), 0)
                self.assertEqual(stats.euler_characteristic,
                                 -stats.complexity)
                self.assertEqual(stats.f_vector[3],
                                 map_stats(underlying_map(p)).components)

    def test_random_invariants(self):
        """Test structural invariants on random connected pavings"""

        self.check_random_invariants(
            config.EXTRAS.get('tests', {}).get('random_pavings', 50))

    @unittest.skipUnless(str2bool(os.environ.get('PAVINGS_TEST_SLOW', 'no')),
                         'set PAVINGS_TEST_SLOW=1')
    def test_random_invariants_full(self):
        """Test structural invariants on 1000 pavings per dart count"""

        self.check_random_invariants(1000)

    def test_coset_graph(self):
        """Test the free subgroup attached to a rooted paving"""

        rng = random.Random(11)
        for n in (2, 4, 6, 8):
            graph = coset_graph(random_paving(n, rng))

            self.assertTrue(is_free(graph))
            self.assertEqual(subgroup_rank(graph), n // 2 + 1)
            for word in schreier_generators(graph):
                self.assertEqual(free_reduce(word), word)

        self.assertEqual(free_reduce('abbac'), 'c')
        self.assertEqual(free_reduce(''), '')

    def test_mirror_double(self):
        """Test that the mirror double has complexity twice the genus"""

        for name, genus in (('single-edge', 0), ('tetrahedron', 0),
                            ('torus', 1)):
            m = load_map(resolve_test_data_path(f'maps/{name}.json'))
            p = mirror_double(m)
            stats = paving_stats(p)

            self.assertEqual(p.n, 2 * m.n)
            self.assertTrue(stats.connected)
            self.assertEqual(stats.f_vector[3], 2)
            self.assertEqual(stats.complexity, 2 * genus)

        single = load_map(resolve_test_data_path('maps/single-edge.json'))
        self.assertEqual(canonical_form(mirror_double(single)),
                         canonical_form(paving(*P4)))

    def test_mirror_double_random_maps(self):
        """Test mirror doubles of random connected maps"""

        rng = random.Random(5)
        count = config.EXTRAS.get('tests', {}).get('random_maps', 20)

        done = 0
        while done < count:
            n = rng.choice([2, 4, 6, 8])
            alpha = random_fpf_involution(n, rng)
            sigma = Permutation(rng.sample(range(n), n))
            m = Map2D(alpha, sigma)
            if not map_is_connected(m):
                continue

            genus = map_stats(m).genus_per_component[0]
            self.assertEqual(paving_stats(mirror_double(m)).complexity,
                             2 * genus)
            done += 1

    def test_mirror_double_errors(self):
        """Test mirror double preconditions"""

        tetra = load_map(resolve_test_data_path('maps/tetrahedron.json'))
        with self.assertRaises(MapError) as ctx:
            mirror_double(disjoint_union(tetra, tetra))
        self.assertEqual(ctx.exception.code, 115)

        with self.assertRaises(MapError) as ctx:
            mirror_double(Map2D(identity(1), identity(1)))
        self.assertEqual(ctx.exception.code, 114)

    def test_analysis(self):
        """Test the analysis document of the figure-eight paving"""

        p = load_paving(resolve_test_data_path('pavings/thurston.json'))
        result = analysis(p)

        self.assertEqual(result['stats']['f_vector'], [1, 2, 4, 2])
        self.assertEqual(result['underlying_map']['components'], 2)
        self.assertEqual(result['underlying_map']['euler_characteristic'], 4)
        self.assertEqual(
            [c['genus'] for c in result['underlying_map']['component_stats']],
            [0, 0])


if __name__ == '__main__':
    unittest.main()
