from __future__ import division, absolute_import, print_function
import json
import os
import random
import unittest
from os.path import join, dirname
import numpy as np
from hypothesis import given, settings, strategies as st

from wlplanar import (ColoredGraph, Coloring, initial_coloring,
                      refinement_rounds, refine_to_stable, joint_stable,
                      stable_coloring, distinguishes, stable_histograms,
                      individualize, is_discrete, individualized_is_discrete,
                      walk_counts, determines_orbits_check, read_graph,
                      cycle_graph, path_graph, complete_graph, star_graph,
                      disjoint_union, cube, prism)


seed = 2718
np.random.seed(seed)
random.seed(seed)
os.environ["PYTHONHASHSEED"] = str(seed)


def fixture(name):
    return read_graph(join(dirname(__file__), name))


@st.composite
def small_graphs(draw, max_n=7, colors=3):
    """Random graphs on at most `max_n` vertices with random arc colors."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [e for e in pairs if draw(st.booleans())]
    g = ColoredGraph(n, edges)
    arc_colors = dict(((u, v), draw(st.integers(0, colors - 1)))
                      for u, v in g.arcs())
    return g.with_arc_colors(arc_colors)


def random_relabeling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabeled(perm), perm


class TestColoring(unittest.TestCase):

    def test_dimension_checks(self):
        self.assertRaises(ValueError, Coloring, 4, np.zeros((2,) * 4))
        self.assertRaises(ValueError, Coloring, 2, np.zeros(3))
        self.assertRaises(ValueError, stable_coloring, path_graph(3), 0)

    def test_classes_and_histogram(self):
        c = Coloring(1, [1, 0, 1])
        self.assertEqual(list(c.classes.items()), [(0, [(1,)]),
                                                   (1, [(0,), (2,)])])
        self.assertEqual(c.histogram(), {0: 1, 1: 2})
        self.assertEqual(c.vertex_partition(), [[0, 2], [1]])
        self.assertEqual(c.color_of(2), 1)
        self.assertFalse(c.is_discrete())

    def test_color_of_pads_short_tuples(self):
        c = initial_coloring(path_graph(3), 3)
        self.assertEqual(c.color_of(0, 1), c.color_of(0, 1, 1))
        self.assertEqual(c.color_of(2), c.color_of(2, 2, 2))
        self.assertRaises(ValueError, c.color_of)

    def test_refines(self):
        fine, coarse = Coloring(1, [0, 1, 2]), Coloring(1, [0, 0, 1])
        self.assertTrue(fine.refines(coarse))
        self.assertFalse(coarse.refines(fine))
        self.assertRaises(ValueError, fine.refines, Coloring(1, [0, 1]))

    def test_json_is_stable_and_sorted(self):
        c = stable_coloring(fixture('path3.g'), 1)
        report = json.loads(c.to_json())
        self.assertEqual(report['k'], 1)
        self.assertFalse(report['discrete'])
        self.assertEqual(sorted(report['classes'].values()),
                         [[[0], [2]], [[1]]])
        self.assertEqual(c.to_json(), stable_coloring(
            fixture('path3.g'), 1).to_json())
        self.assertNotIn('discrete', json.loads(
            stable_coloring(path_graph(3), 2).to_json()))


class TestInitialColoring(unittest.TestCase):

    def test_vertex_colors(self):
        g = fixture('colored_triangle.g')
        c = initial_coloring(g, 1)
        self.assertEqual(c.vertex_partition(), [[0, 1], [2]])

    def test_pairs(self):
        self.assertEqual(initial_coloring(complete_graph(3), 2).num_classes,
                         2)
        self.assertEqual(initial_coloring(path_graph(3), 2).num_classes, 3)
        c = initial_coloring(fixture('colored_triangle.g'), 2)
        self.assertEqual(c.histogram()[c.color_of(0, 1)], 1)
        self.assertNotEqual(c.color_of(0, 1), c.color_of(1, 0))

    def test_triples_see_the_induced_subgraph(self):
        c = initial_coloring(path_graph(3), 3)
        # (0, 1, 2) induces a path, (0, 2, 1) a path with the middle last
        self.assertNotEqual(c.color_of(0, 1, 2), c.color_of(0, 2, 1))
        self.assertEqual(c.color_of(0, 1, 2), c.color_of(2, 1, 0))


class TestRefinement(unittest.TestCase):

    def test_path(self):
        rounds = list(refinement_rounds([path_graph(5)], 1))
        self.assertEqual([r[0].num_classes for r in rounds], [1, 2, 3])
        self.assertEqual(rounds[-1][0].round, 2)
        self.assertEqual(rounds[-1][0].vertex_partition(),
                         [[0, 4], [1, 3], [2]])

    def test_regular_graph_is_stable_at_once(self):
        rounds = list(refinement_rounds([cube()], 1))
        self.assertEqual(len(rounds), 1)
        self.assertEqual(rounds[0][0].num_classes, 1)

    def test_two_wl_computes_distances_on_cycles(self):
        g = cycle_graph(6)
        c = stable_coloring(g, 2)
        self.assertEqual(c.num_classes, 4)
        for tuples in c.classes.values():
            distances = set(min(abs(u - v), 6 - abs(u - v))
                            for u, v in tuples)
            self.assertEqual(len(distances), 1)

    def test_monotone(self):
        g = cube().subdivided(0, 1)
        for k in (1, 2):
            rounds = [r[0] for r in refinement_rounds([g], k)]
            for before, after in zip(rounds, rounds[1:]):
                self.assertTrue(after.refines(before))
                self.assertGreater(after.num_classes, before.num_classes)

    def test_joint_runs_share_ids(self):
        c6, triangles = fixture('c6.g'), fixture('two_triangles.g')
        a, b = joint_stable([c6, triangles], 1)
        self.assertEqual(a.histogram(), b.histogram())
        a, b = joint_stable([c6, triangles], 2)
        self.assertNotEqual(a.histogram(), b.histogram())

    def test_distinguishes(self):
        c6, triangles = fixture('c6.g'), fixture('two_triangles.g')
        self.assertFalse(distinguishes(c6, triangles, 1))
        self.assertTrue(distinguishes(c6, triangles, 2))
        self.assertTrue(distinguishes(c6, triangles, 3))
        self.assertFalse(distinguishes(cube(), cube().relabeled(
            [7, 6, 5, 4, 3, 2, 1, 0]), 3))
        self.assertTrue(distinguishes(path_graph(3), path_graph(4), 1))

    def test_arc_direction_matters(self):
        g = cycle_graph(3).with_arc_colors({(0, 1): 1, (1, 2): 1, (2, 0): 1})
        h = cycle_graph(3).with_arc_colors({(0, 1): 1, (2, 1): 1, (2, 0): 1})
        self.assertTrue(distinguishes(g, h, 1))

    def test_stable_histograms(self):
        hs = stable_histograms([cycle_graph(6), fixture('two_triangles.g'),
                                prism(3)], 2)
        self.assertNotEqual(hs[0], hs[1])
        self.assertNotEqual(hs[0], hs[2])
        self.assertEqual(len(set(hs)), 3)

    def test_refine_to_stable_from_a_given_start(self):
        g = path_graph(5)
        start = Coloring(1, [0, 0, 0, 0, 1])
        c = refine_to_stable(g, 1, start)
        self.assertTrue(c.is_discrete())
        self.assertRaises(ValueError, list,
                          refinement_rounds([g], 2, [start]))

    def test_empty_graph(self):
        c = stable_coloring(ColoredGraph(0), 2)
        self.assertEqual(c.num_classes, 0)


class TestInvariance(unittest.TestCase):

    @settings(max_examples=40, deadline=None)
    @given(small_graphs(), st.randoms(use_true_random=False))
    def test_relabeling_invariance(self, g, rng):
        h, perm = random_relabeling(g, rng)
        for k in (1, 2):
            cg, ch = joint_stable([g, h], k)
            self.assertEqual(cg.histogram(), ch.histogram())
            self.assertEqual(cg.round, ch.round)
            for v in range(g.n):
                self.assertEqual(cg.color_of(v), ch.color_of(perm[v]))

    @settings(max_examples=20, deadline=None)
    @given(small_graphs(max_n=5))
    def test_hierarchy(self, g):
        partitions = [stable_coloring(g, k).vertex_partition()
                      for k in (1, 2, 3)]
        for coarse, fine in zip(partitions, partitions[1:]):
            self.assertTrue(all(any(set(f) <= set(c) for c in coarse)
                                for f in fine))

    @settings(max_examples=20, deadline=None)
    @given(small_graphs(max_n=6))
    def test_byte_stable(self, g):
        self.assertEqual(stable_coloring(g, 2).to_json(),
                         stable_coloring(g, 2).to_json())

    def test_three_wl_relabeling(self):
        rng = random.Random(seed)
        g = prism(3)
        h, perm = random_relabeling(g, rng)
        cg, ch = joint_stable([g, h], 3)
        for u in range(g.n):
            for v in range(g.n):
                self.assertEqual(cg.color_of(u, v),
                                 ch.color_of(perm[u], perm[v]))


class TestIndividualization(unittest.TestCase):

    def test_fresh_colors(self):
        g = individualize(complete_graph(4), [0])
        self.assertEqual([g.vertex_color(v) for v in range(4)], [1, 0, 0, 0])
        g = individualize(complete_graph(4), [2, 0])
        self.assertEqual([g.vertex_color(v) for v in range(4)], [2, 0, 1, 0])

    def test_old_colors_are_kept(self):
        g = individualize(fixture('colored_triangle.g'), [0])
        self.assertEqual([g.vertex_color(v) for v in range(3)], [1, 0, 2])
        self.assertEqual(g.arc_color(0, 1), 5)

    def test_empty_list(self):
        g = cube()
        self.assertIs(individualize(g, []), g)

    def test_bad_vertices(self):
        self.assertRaises(ValueError, individualize, cube(), [0, 0])
        self.assertRaises(ValueError, individualize, cube(), [8])

    def test_discreteness(self):
        self.assertTrue(individualized_is_discrete(path_graph(3), [0]))
        self.assertFalse(individualized_is_discrete(path_graph(3), [1]))
        g = fixture('cube.g')
        self.assertFalse(individualized_is_discrete(g, [0]))
        self.assertFalse(individualized_is_discrete(g, [0, 1]))
        self.assertFalse(individualized_is_discrete(g, [0, 7]))
        self.assertTrue(individualized_is_discrete(g, [0, 1, 3]))

    def test_is_discrete_needs_vertex_colorings(self):
        self.assertTrue(is_discrete(Coloring(1, [0, 1])))
        self.assertRaises(ValueError, is_discrete,
                          stable_coloring(path_graph(2), 2))


class TestWalksAndOrbits(unittest.TestCase):

    def test_walk_counts(self):
        g = cycle_graph(4)
        self.assertTrue(np.array_equal(walk_counts(g, 0).astype(int),
                                       np.identity(4, dtype=int)))
        w2 = walk_counts(g, 2)
        self.assertEqual(w2[0, 2], 2)
        self.assertEqual(w2[0, 0], 2)
        self.assertEqual(w2[0, 1], 0)
        self.assertRaises(ValueError, walk_counts, g, -1)

    def test_walk_counts_do_not_overflow(self):
        w = walk_counts(complete_graph(5), 40)
        self.assertEqual(w[0, 0], (4 ** 40 + 4) // 5)

    def test_walk_counts_are_constant_on_pair_classes(self):
        g = cube().subdivided(0, 1)
        c = stable_coloring(g, 2)
        w = walk_counts(g, 3)
        for tuples in c.classes.values():
            self.assertEqual(len(set(w[u, v] for u, v in tuples)), 1)

    def test_determines_orbits(self):
        self.assertTrue(determines_orbits_check(star_graph(3), 1))
        self.assertTrue(determines_orbits_check(cube(), 1))
        self.assertTrue(determines_orbits_check(
            disjoint_union(cycle_graph(3), cycle_graph(4)), 2))
        self.assertFalse(determines_orbits_check(
            disjoint_union(cycle_graph(3), cycle_graph(4)), 1))

    def test_orbits_of_cycles_and_the_cube(self):
        self.assertTrue(determines_orbits_check(cycle_graph(6), 1))
        self.assertTrue(determines_orbits_check(cube(), 3))


if __name__ == '__main__':
    unittest.main()
