from __future__ import division, absolute_import, print_function
import os
import unittest
import warnings
from collections import Counter
import numpy as np

from wlplanar import (ColoredGraph, bipyramid, tetrahedron, cube,
                      octahedron, icosahedron,
                      rhombic_dodecahedron, triakis_tetrahedron,
                      triakis_octahedron, tetrakis_hexahedron,
                      triakis_icosahedron, kleetope, prism, antiprism, wheel,
                      solid_specs, solid_names, generate, exception_solids,
                      non_exception_polyhedra, subdivided_solids,
                      discrete_pair, is_exception,
                      consecutive_neighbor_property, face_triples,
                      gadget_graph, gadget_graphs, exhaustive_graphs,
                      connected_graphs, planar_graphs, corpus, faces,
                      face_lengths,
                      is_k_connected, isomorphic, canonical_form,
                      path_graph, cycle_graph, star_graph, disjoint_union,
                      individualized_is_discrete)


seed = 2718
np.random.seed(seed)
os.environ["PYTHONHASHSEED"] = str(seed)

RUN_SLOW_TESTS = bool(os.environ.get('WLPLANAR_SLOW_TESTS') or
                      os.environ.get('RUN_SLOW_TESTS'))


class TestElementaryGraphs(unittest.TestCase):

    def test_sizes(self):
        self.assertEqual((path_graph(4).n, path_graph(4).m), (4, 3))
        self.assertEqual((cycle_graph(5).n, cycle_graph(5).m), (5, 5))
        self.assertEqual(star_graph(3).degrees(), [3, 1, 1, 1])
        self.assertRaises(ValueError, cycle_graph, 2)

    def test_cycle_rotation(self):
        self.assertEqual(len(faces(cycle_graph(5))), 2)

    def test_disjoint_union(self):
        g = disjoint_union(cycle_graph(3), path_graph(2))
        self.assertEqual(g.edges, ((0, 1), (0, 2), (1, 2), (3, 4)))
        self.assertIsNone(g.arc_colors)
        h = disjoint_union(path_graph(2).with_arc_colors({(0, 1): 3}),
                           path_graph(2))
        self.assertEqual(h.arc_color(0, 1), 3)
        self.assertEqual(h.arc_color(2, 3), 0)


class TestSolids(unittest.TestCase):

    def test_table_rows_match(self):
        for spec in solid_specs():
            observed = spec.check()
            self.assertTrue(observed['match'], msg=(spec, observed))

    def test_bipyramid_counts(self):
        spec = [s for s in solid_specs(range(7, 8))][0]
        observed = spec.check()
        self.assertEqual((observed['V'], observed['E'], observed['F']),
                         (9, 21, 14))
        self.assertEqual(observed['V-type'], Counter({7: 2, 4: 7}))
        self.assertRaises(ValueError, bipyramid, 2)

    def test_kleetopes(self):
        g = tetrakis_hexahedron()
        self.assertEqual((g.n, g.m, len(faces(g))), (14, 36, 24))
        self.assertEqual(Counter(g.degrees()), Counter({4: 6, 6: 8}))
        g = triakis_icosahedron()
        self.assertEqual((g.n, g.m, len(faces(g))), (32, 90, 60))

    def test_kleetope_of_any_polyhedron(self):
        g = kleetope(prism(5))
        self.assertEqual((g.n, g.m), (17, 45))
        self.assertEqual(set(face_lengths(g)), {3})
        self.assertEqual(Counter(g.degrees()), Counter({6: 10, 4: 5, 5: 2}))
        self.assertTrue(is_k_connected(g, 3))
        self.assertEqual(g.name, 'kleetope(prism(5))')
        self.assertRaises(ValueError, kleetope, path_graph(3))

    def test_three_connected(self):
        for g in (tetrahedron(), cube(), icosahedron(), prism(5),
                  antiprism(4), wheel(5), rhombic_dodecahedron()):
            self.assertTrue(is_k_connected(g, 3), msg=g)

    def test_isomorphic_twins(self):
        self.assertIsNotNone(isomorphic(bipyramid(4), octahedron()))
        self.assertIsNotNone(isomorphic(prism(4), cube()))
        self.assertIsNotNone(isomorphic(antiprism(3), octahedron()))
        self.assertIsNotNone(isomorphic(wheel(3), tetrahedron()))

    def test_generate(self):
        self.assertEqual(generate('bipyramid', 5).n, 7)
        self.assertEqual(generate('cube').n, 8)
        self.assertEqual(generate('octahedron').n, 6)
        self.assertRaises(ValueError, generate, 'bipyramid')
        self.assertRaises(ValueError, generate, 'dodecahedron')
        self.assertEqual(solid_names()[0], 'bipyramid')
        self.assertEqual(len(solid_names()), 8)

    def test_families(self):
        self.assertEqual(len(exception_solids()), 13)
        names = [g.name for g in non_exception_polyhedra()]
        self.assertNotIn('prism(4)', names)
        self.assertNotIn('antiprism(3)', names)
        self.assertIn('prism(3)', names)
        self.assertEqual(names[-1], 'triakis-icosahedron')
        for g in subdivided_solids():
            self.assertEqual(sorted(set(g.degrees()))[0], 2)


class TestExceptions(unittest.TestCase):

    def test_cube_tetrahedron_icosahedron(self):
        self.assertTrue(is_exception(cube()))
        self.assertTrue(is_exception(tetrahedron()))
        self.assertTrue(is_exception(icosahedron()))

    def test_non_exceptions(self):
        self.assertFalse(is_exception(prism(3)))
        self.assertFalse(is_exception(wheel(5)))
        v, w = discrete_pair(prism(5))
        self.assertTrue(individualized_is_discrete(prism(5), [v, w]))

    def test_discrete_pair_preconditions(self):
        self.assertRaises(ValueError, discrete_pair, cycle_graph(5))
        self.assertRaises(ValueError, discrete_pair,
                          ColoredGraph(8, cube().edges))

    def test_consecutive_neighbors(self):
        for g in exception_solids(range(3, 7)):
            self.assertTrue(consecutive_neighbor_property(g), msg=g)
        self.assertFalse(consecutive_neighbor_property(prism(5)))
        self.assertRaises(ValueError, consecutive_neighbor_property,
                          path_graph(3))

    def test_face_triples(self):
        self.assertEqual(len(face_triples(tetrahedron())), 4)
        self.assertEqual(len(face_triples(cube())), 24)
        self.assertIn((0, 1, 3), face_triples(cube()))
        self.assertNotIn((0, 1, 7), face_triples(cube()))

    def test_every_exception(self):
        if not RUN_SLOW_TESTS:
            warnings.warn("Skipping `test_every_exception` as RUN_SLOW_TESTS "
                          "is false.")
            return
        for g in exception_solids():
            self.assertTrue(is_exception(g), msg=g)
        for g in non_exception_polyhedra():
            self.assertFalse(is_exception(g), msg=g)


class TestGadgets(unittest.TestCase):

    def test_gadget_graphs(self):
        g = gadget_graph(['A', 'B'])
        self.assertEqual(g.n, 7)
        self.assertTrue(is_k_connected(g, 2))
        self.assertFalse(is_k_connected(g, 3))
        self.assertGreaterEqual(min(g.degrees()), 3)
        self.assertTrue(gadget_graph(['A', 'A'], joined=True).has_edge(0, 1))

    def test_all_gadget_graphs_are_two_connected(self):
        graphs = gadget_graphs(8)
        self.assertTrue(graphs)
        for g in graphs:
            self.assertLessEqual(g.n, 8)
            self.assertTrue(is_k_connected(g, 2), msg=g)
            self.assertFalse(is_k_connected(g, 3), msg=g)
            self.assertGreaterEqual(min(g.degrees()), 3, msg=g)


class TestEnumeration(unittest.TestCase):

    def test_counts(self):
        self.assertEqual([len(exhaustive_graphs(n)) for n in range(1, 6)],
                         [1, 2, 4, 11, 34])
        self.assertEqual(Counter(g.n for g in connected_graphs(5)),
                         Counter({1: 1, 2: 1, 3: 2, 4: 6, 5: 21}))
        self.assertEqual(Counter(g.n for g in planar_graphs(5)),
                         Counter({1: 1, 2: 1, 3: 2, 4: 6, 5: 20}))

    def test_methods_agree(self):
        for n in range(1, 5):
            by_edges = [canonical_form(g) for g in
                        exhaustive_graphs(n, method='edges')]
            by_extension = [canonical_form(g) for g in exhaustive_graphs(n)]
            self.assertEqual(by_edges, by_extension)
        self.assertRaises(ValueError, exhaustive_graphs, 3, 'guess')

    def test_names_and_order(self):
        graphs = exhaustive_graphs(4)
        self.assertEqual(graphs[0].name, 'n4_0')
        edge_counts = [g.m for g in graphs]
        self.assertEqual(edge_counts, sorted(edge_counts))

    def test_limits(self):
        self.assertRaises(ValueError, exhaustive_graphs, 8)
        self.assertRaises(ValueError, corpus, 8)

    def test_six_vertices(self):
        if not RUN_SLOW_TESTS:
            warnings.warn("Skipping `test_six_vertices` as RUN_SLOW_TESTS is "
                          "false.")
            return
        self.assertEqual(len(exhaustive_graphs(6)), 156)
        self.assertEqual(Counter(g.n for g in connected_graphs(6))[6], 112)
        self.assertEqual(Counter(g.n for g in planar_graphs(6))[6], 99)


if __name__ == '__main__':
    unittest.main()
