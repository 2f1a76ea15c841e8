from __future__ import division, absolute_import, print_function
import os
import unittest
from os.path import join, dirname
import numpy as np

from wlplanar import (ColoredGraph, SeparatorPair, DecompositionContext,
                      p_set, p0_set, minimal_pairs_by_separators,
                      minimal_pairs_meet_in_separators, bottom_vertices,
                      min_separator_vertices, lift_vertex_colors, g_top,
                      isotype, g_bot, bottom_exclusion_witnessed,
                      read_graph, isomorphic, path_graph, cycle_graph,
                      complete_graph, cube, gadget_graph, gadget_graphs)


seed = 2718
np.random.seed(seed)
os.environ["PYTHONHASHSEED"] = str(seed)


def fixture(name):
    return read_graph(join(dirname(__file__), name))


def pair(separator, component):
    return SeparatorPair(frozenset(separator), frozenset(component))


class TestSeparatorPairs(unittest.TestCase):

    def test_bowtie(self):
        g = fixture('bowtie.g')
        expected = [pair([2], [0, 1]), pair([2], [3, 4])]
        self.assertEqual(p_set(g), expected)
        self.assertEqual(p0_set(g), expected)
        self.assertEqual(bottom_vertices(g), [2])

    def test_path(self):
        g = path_graph(4)
        self.assertEqual(p_set(g), [pair([1], [0]), pair([1], [2, 3]),
                                    pair([2], [0, 1]), pair([2], [3])])
        self.assertEqual(p0_set(g), [pair([1], [0]), pair([2], [3])])
        self.assertEqual(bottom_vertices(g), [1, 2])
        self.assertEqual(min_separator_vertices(g), {1, 2})

    def test_cycle(self):
        g = cycle_graph(4)
        self.assertEqual(len(p_set(g)), 4)
        self.assertEqual(p0_set(g), p_set(g))
        self.assertEqual(bottom_vertices(g), [])

    def test_complete_graphs(self):
        self.assertRaises(ValueError, p_set, complete_graph(4))
        self.assertEqual(bottom_vertices(complete_graph(4)), [0, 1, 2, 3])
        self.assertEqual(min_separator_vertices(complete_graph(4)), set())

    def test_disconnected(self):
        self.assertRaises(ValueError, p_set, fixture('two_triangles.g'))

    def test_pairs_are_sorted(self):
        g = gadget_graph(['A', 'B', 'C'])
        pairs = p_set(g)
        self.assertEqual(pairs, sorted(pairs, key=SeparatorPair.sort_key))

    def test_gadgets(self):
        g = gadget_graph(['A', 'A'])
        p0 = p0_set(g)
        self.assertEqual(p0, [pair([0, 1], [2, 3]), pair([0, 1], [4, 5])])
        self.assertEqual(bottom_vertices(g), [0, 1])
        self.assertEqual(minimal_pairs_by_separators(g), p0)
        self.assertTrue(minimal_pairs_meet_in_separators(g))

    def test_characterizations_on_gadgets(self):
        for g in gadget_graphs(8):
            p0 = p0_set(g)
            self.assertEqual(minimal_pairs_by_separators(g), p0,
                             msg=repr(g))
            self.assertTrue(minimal_pairs_meet_in_separators(g, p0),
                            msg=repr(g))

    def test_meet_detects_overlap(self):
        overlapping = [pair([0, 1], [2, 3]), pair([0, 2], [1, 4])]
        self.assertFalse(minimal_pairs_meet_in_separators(None, overlapping))


class TestTorso(unittest.TestCase):

    def test_cut_vertex_torso(self):
        torso = g_top(path_graph(4), {1})
        self.assertEqual(torso.vertices, [0, 1])
        self.assertEqual(torso.base.edges, ((0, 1),))
        self.assertEqual(set(torso.base.arc_colors.values()), {2})
        self.assertEqual(torso.local(1), 1)

    def test_set_without_minimal_pair(self):
        torso = g_top(path_graph(4), {0, 3})
        self.assertEqual(torso.vertices, [0, 3])
        self.assertEqual(torso.base.edges, ((0, 1),))
        self.assertEqual(torso.base.arc_color(0, 1), 0)
        self.assertEqual(torso.base.vertex_color(0), 2)

    def test_separator_becomes_a_clique(self):
        g = gadget_graph(['A', 'A'])
        torso = g_top(g, {0, 1})
        self.assertEqual(torso.vertices, list(range(6)))
        self.assertTrue(torso.base.has_edge(0, 1))
        self.assertEqual(torso.base.arc_color(0, 1), 0)
        joined = g_top(gadget_graph(['A', 'A'], joined=True), {0, 1})
        self.assertEqual(joined.base.arc_color(0, 1), 1)

    def test_single_component(self):
        g = gadget_graph(['A', 'C'])
        torso = g_top(g, {0, 1}, component={2, 3})
        self.assertEqual(torso.vertices, [0, 1, 2, 3])
        self.assertRaises(ValueError, g_top, g, {0, 1}, None, {2})

    def test_arc_colors_are_packed(self):
        g = fixture('bowtie.g').with_arc_colors({(2, 0): 4})
        torso = g_top(g, {2})
        self.assertEqual(torso.base.arc_color(torso.local(2),
                                              torso.local(0)), 3 * 4 + 2)

    def test_vertex_colored(self):
        g = path_graph(3).with_arc_colors({(1, 1): 3})
        lifted = lift_vertex_colors(g)
        self.assertEqual(lifted.arc_color(1, 0), 3)
        self.assertEqual(lifted.arc_color(0, 1), 0)
        torso = g_top(g, {1}, vertex_colored=True)
        self.assertEqual(torso.base.arc_color(torso.local(1),
                                              torso.local(0)), 3 * 3 + 2)


class TestIsotype(unittest.TestCase):

    def test_isotype(self):
        self.assertEqual(isotype(complete_graph(3), [0]),
                         isotype(complete_graph(3), [1]))
        self.assertNotEqual(isotype(path_graph(3), [0]),
                            isotype(path_graph(3), [1]))

    def test_palette_ids(self):
        context = DecompositionContext()
        a = context.isotype(path_graph(3), [0])
        b = context.isotype(path_graph(3), [2])
        c = context.isotype(path_graph(3), [1])
        self.assertEqual((a, b, c), (0, 0, 1))
        self.assertEqual(len(context.isotypes), 2)


class TestReducedGraph(unittest.TestCase):

    def test_path(self):
        reduced = g_bot(path_graph(4))
        self.assertEqual(reduced.vertices, [1, 2])
        self.assertEqual(reduced.base.edges, ((0, 1),))
        self.assertEqual(reduced.decoded_color(0, 0),
                         reduced.decoded_color(1, 1))
        self.assertEqual(reduced.decoded_color(0, 1),
                         reduced.decoded_color(1, 0))
        self.assertEqual(reduced.decoded_color(0, 0)[0], 'bot')

    def test_bowtie(self):
        reduced = g_bot(fixture('bowtie.g'))
        self.assertEqual(reduced.vertices, [2])
        self.assertEqual(reduced.base.n, 1)

    def test_two_connected(self):
        reduced = g_bot(gadget_graph(['A', 'A']))
        self.assertEqual(reduced.vertices, [0, 1])
        self.assertEqual(reduced.base.edges, ((0, 1),))
        value = reduced.decoded_color(0, 1)[1]
        self.assertEqual(value, 0)

    def test_preconditions(self):
        self.assertRaises(ValueError, g_bot, complete_graph(4))
        self.assertRaises(ValueError, g_bot, cube())
        self.assertRaises(ValueError, g_bot, cycle_graph(5))
        self.assertRaises(ValueError, g_bot, fixture('two_triangles.g'))

    def test_reduction_preserves_isomorphism(self):
        context = DecompositionContext()
        ab = gadget_graph(['A', 'B'])
        ba = ab.relabeled([1, 0, 6, 5, 4, 3, 2])
        abm = gadget_graph(['A', 'Bm'])
        bases = [g_bot(g, context).base for g in (ab, ba, abm)]
        self.assertIsNotNone(isomorphic(ab, ba))
        self.assertIsNotNone(isomorphic(bases[0], bases[1]))
        same = isomorphic(ab, abm) is not None
        self.assertEqual(same, isomorphic(bases[0], bases[2]) is not None)

    def test_reduction_separates_non_isomorphic(self):
        context = DecompositionContext()
        g, h = gadget_graph(['A', 'A']), gadget_graph(['A', 'C'])
        self.assertIsNone(isomorphic(g, h))
        self.assertIsNone(isomorphic(g_bot(g, context).base,
                                     g_bot(h, context).base))

    def test_vertex_colored_reduction(self):
        g = path_graph(4).with_arc_colors({(0, 0): 1})
        reduced = g_bot(g, vertex_colored=True)
        self.assertNotEqual(reduced.decoded_color(0, 0),
                            reduced.decoded_color(1, 1))


class TestBottomExclusion(unittest.TestCase):

    def test_gadget_vertices(self):
        g = gadget_graph(['A', 'A'])
        bottom = bottom_vertices(g)
        for x in range(g.n):
            self.assertEqual(bottom_exclusion_witnessed(g, x),
                             x not in bottom, msg=x)

    def test_agrees_on_gadget_graphs(self):
        for g in gadget_graphs(8):
            bottom = bottom_vertices(g)
            seps = min_separator_vertices(g)
            for x in range(g.n):
                self.assertEqual(bottom_exclusion_witnessed(g, x, seps),
                                 x not in bottom, msg=(g, x))


if __name__ == '__main__':
    unittest.main()
