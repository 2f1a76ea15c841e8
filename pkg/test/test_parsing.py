from __future__ import division, absolute_import, print_function
import unittest
from os.path import join, dirname

from wlplanar import (parse_graph, read_graph, dump_graph, GraphFormatError,
                      MalformedLineError, DuplicateEdgeError, LoopError,
                      RotationError, ColoredGraph, faces, cube, bipyramid,
                      triakis_tetrahedron)


def fixture_path(name):
    return join(dirname(__file__), name)


class TestParser(unittest.TestCase):

    def test_fixture_files(self):
        g = read_graph(fixture_path('path3.g'))
        self.assertEqual((g.n, g.edges), (3, ((0, 1), (1, 2))))
        self.assertFalse(g.is_colored())
        self.assertIsNone(g.rotation)
        self.assertEqual(g.name, fixture_path('path3.g'))

        g = read_graph(fixture_path('colored_triangle.g'))
        self.assertEqual(g.arc_color(0, 1), 5)
        self.assertEqual(g.arc_color(1, 0), 0)
        self.assertEqual(g.vertex_color(2), 1)
        self.assertEqual(g.vertex_color(0), 0)

        g = read_graph(fixture_path('cube.g'))
        self.assertEqual(g.rotation[0], (4, 2, 1))
        self.assertEqual(len(faces(g)), 6)

    def test_comments_and_blank_lines(self):
        g = parse_graph('# header comment\n\n2 1   # counts\n0 1\n\n')
        self.assertEqual((g.n, g.m), (2, 1))

    def test_empty_graph(self):
        g = parse_graph('0 0\n')
        self.assertEqual((g.n, g.m), (0, 0))
        self.assertRaises(MalformedLineError, parse_graph, '# nothing\n')

    def test_isolated_vertex_without_rotation_line(self):
        g = parse_graph('3 1\n0 1\nrot 0: 1\nrot 1: 0\n')
        self.assertEqual(g.rotation, ((1,), (0,), ()))

    def _assert_line(self, error, text, lineno):
        with self.assertRaises(error) as cm:
            parse_graph(text)
        self.assertEqual(cm.exception.lineno, lineno)
        self.assertIn('line {}'.format(lineno), str(cm.exception))

    def test_malformed_lines(self):
        self._assert_line(MalformedLineError, '3\n', 1)
        self._assert_line(MalformedLineError, 'a b\n', 1)
        self._assert_line(MalformedLineError, '3 1\n0 1 2\n', 2)
        self._assert_line(MalformedLineError, '3 1\n0 x\n', 2)
        self._assert_line(MalformedLineError, '3 1\n0 3\n', 2)
        self._assert_line(MalformedLineError, '3 1\n0 1\n1 2\n', 3)
        self._assert_line(MalformedLineError, '3 2\n0 1\n', 2)
        self._assert_line(MalformedLineError, '3 1\n0 1\narc 0 2 1\n', 3)
        self._assert_line(MalformedLineError, '3 1\n0 1\narc 0 1 -1\n', 3)
        self._assert_line(MalformedLineError, '3 1\n0 1\narc 0 1\n', 3)
        self._assert_line(MalformedLineError,
                          '3 1\n0 1\narc 0 1 2\narc 0 1 3\n', 4)
        self._assert_line(MalformedLineError, '3 2\n0 1\narc 0 1 2\n1 2\n',
                          4)

    def test_duplicate_edges_and_loops(self):
        self._assert_line(DuplicateEdgeError, '3 2\n0 1\n1 0\n', 3)
        self._assert_line(LoopError, '3 1\n1 1\n', 2)

    def test_rotation_errors(self):
        self._assert_line(RotationError,
                          '3 2\n0 1\n1 2\nrot 0: 1\nrot 1: 0\nrot 2: 1\n', 5)
        self._assert_line(RotationError,
                          '3 2\n0 1\n1 2\nrot 0: 1\nrot 0: 1\n', 5)
        self.assertRaises(RotationError, parse_graph,
                          '3 2\n0 1\n1 2\nrot 0: 1\nrot 1: 0 2\n')
        self._assert_line(MalformedLineError, '2 1\n0 1\nrot 0 1\n', 3)

    def test_errors_are_value_errors(self):
        for error in (MalformedLineError, DuplicateEdgeError, LoopError,
                      RotationError):
            self.assertTrue(issubclass(error, GraphFormatError))
            self.assertTrue(issubclass(error, ValueError))


class TestDump(unittest.TestCase):

    def test_dump_format(self):
        g = ColoredGraph(3, [(1, 2), (0, 1)], {(1, 0): 4, (2, 2): 1})
        self.assertEqual(dump_graph(g, comment='small'),
                         '# small\n3 2\n0 1\n1 2\narc 1 0 4\narc 2 2 1\n')

    def test_dump_keeps_structure(self):
        for g in (cube(), bipyramid(5), triakis_tetrahedron(),
                  read_graph(fixture_path('colored_triangle.g'))):
            h = parse_graph(dump_graph(g, comment=g.name))
            self.assertEqual(h, g)
            self.assertEqual(h.rotation, g.rotation)


if __name__ == '__main__':
    unittest.main()
