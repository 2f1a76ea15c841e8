"""This submodule contains parse_graph() and dump_graph(), which convert
between ColoredGraph objects and the line-oriented graph file format used
by every command of the wlplanar CLI.

The format:

    # comments start with '#', blank lines are ignored
    n m                 # vertex and edge count
    u v                 # m edge lines, 0-indexed endpoints
    rot u: v1 v2 ...    # optional cyclic neighbor order at u
    arc u v c           # optional color c of the ordered pair (u, v)
    arc u u c           # optional vertex color of u
"""

# External dependencies
from __future__ import division, absolute_import, print_function

# Internal dependencies
from .graph import ColoredGraph, EmbeddingError


class GraphFormatError(ValueError):
    """A line of a graph file could not be accepted.  `lineno` is 1-based."""

    def __init__(self, lineno, message):
        self.lineno = lineno
        super(GraphFormatError, self).__init__(
            'line {}: {}'.format(lineno, message))


class MalformedLineError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class LoopError(GraphFormatError):
    pass


class RotationError(GraphFormatError):
    pass


def _ints(tokens, lineno, line):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedLineError(lineno, 'expected integers, found '
                                         '{!r}'.format(line))


def _check_vertex(v, n, lineno):
    if not 0 <= v < n:
        raise MalformedLineError(lineno, 'vertex {} is outside 0..{}'
                                         ''.format(v, n - 1))


def parse_graph(text, name=None):
    """Parses the contents of a graph file into a ColoredGraph.

    The returned graph has arc colors iff the file has `arc` lines and a
    rotation iff it has `rot` lines.  Every problem raises a subclass of
    GraphFormatError naming the offending line.

    EXAMPLE
    -------
    >>> g = parse_graph('3 3\\n0 1\\n1 2\\n0 2\\n')
    >>> g.n, g.m
    (3, 3)
    """
    n = m = None
    edges = []
    edge_lines = {}
    rotation = {}
    rotation_lines = {}
    arc_colors = {}
    arc_lines = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()

        if n is None:
            if len(tokens) != 2:
                raise MalformedLineError(lineno, 'header must be "n m", '
                                                 'found {!r}'.format(line))
            n, m = _ints(tokens, lineno, line)
            if n < 0 or m < 0:
                raise MalformedLineError(lineno, 'counts must be '
                                                 'non-negative')
            continue

        if tokens[0] == 'rot':
            if not tokens[1:] or not tokens[1].endswith(':'):
                raise MalformedLineError(lineno, 'expected "rot u: v1 ... vd"'
                                                 ', found {!r}'.format(line))
            head = tokens[1][:-1]
            u, = _ints([head], lineno, line)
            _check_vertex(u, n, lineno)
            if u in rotation:
                raise RotationError(lineno, 'second rotation for vertex {}'
                                            ''.format(u))
            cyc = _ints(tokens[2:], lineno, line)
            for v in cyc:
                _check_vertex(v, n, lineno)
            rotation[u] = cyc
            rotation_lines[u] = lineno

        elif tokens[0] == 'arc':
            if len(tokens) != 4:
                raise MalformedLineError(lineno, 'expected "arc u v c", '
                                                 'found {!r}'.format(line))
            u, v, c = _ints(tokens[1:], lineno, line)
            _check_vertex(u, n, lineno)
            _check_vertex(v, n, lineno)
            if c < 0:
                raise MalformedLineError(lineno, 'colors must be '
                                                 'non-negative')
            if (u, v) in arc_colors:
                raise MalformedLineError(lineno, 'second color for arc '
                                                 '({}, {})'.format(u, v))
            arc_colors[(u, v)] = c
            arc_lines.append((lineno, u, v))

        else:
            if len(tokens) != 2:
                raise MalformedLineError(lineno, 'expected an edge "u v", '
                                                 'found {!r}'.format(line))
            if rotation or arc_colors:
                raise MalformedLineError(lineno, 'edge lines must precede '
                                                 'rot and arc lines')
            u, v = _ints(tokens, lineno, line)
            _check_vertex(u, n, lineno)
            _check_vertex(v, n, lineno)
            if u == v:
                raise LoopError(lineno, 'loop at vertex {}'.format(u))
            e = (min(u, v), max(u, v))
            if e in edge_lines:
                raise DuplicateEdgeError(
                    lineno, 'edge {} {} already given on line {}'
                            ''.format(u, v, edge_lines[e]))
            if len(edges) == m:
                raise MalformedLineError(lineno, 'more than the announced '
                                                 '{} edges'.format(m))
            edge_lines[e] = lineno
            edges.append(e)

    if n is None:
        raise MalformedLineError(1, 'empty graph file')
    if len(edges) != m:
        raise MalformedLineError(lineno, 'expected {} edges, found {}'
                                         ''.format(m, len(edges)))

    adjacency = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    for lineno, u, v in arc_lines:
        if u != v and v not in adjacency[u]:
            raise MalformedLineError(lineno, '({}, {}) is not an edge'
                                             ''.format(u, v))

    if rotation:
        for v in range(n):
            if v not in rotation:
                if adjacency[v]:
                    raise RotationError(lineno, 'no rotation given for '
                                                'vertex {}'.format(v))
                rotation[v] = []
                continue
            cyc = rotation[v]
            if len(set(cyc)) != len(cyc) or set(cyc) != adjacency[v]:
                raise RotationError(
                    rotation_lines[v],
                    'rotation at {} lists {} but its neighbors are {}'
                    ''.format(v, cyc, sorted(adjacency[v])))

    try:
        return ColoredGraph(n, edges, arc_colors or None, rotation or None,
                            name=name)
    except EmbeddingError as err:
        raise RotationError(lineno, str(err))


def read_graph(filename):
    """Reads a graph file from disk; the file name becomes the graph name."""
    with open(filename) as f:
        return parse_graph(f.read(), name=filename)


def dump_graph(g, comment=None):
    """Returns the graph file text of `g`: sorted edges, `rot` lines when
    g has a rotation and `arc` lines for every non-zero arc color."""
    lines = []
    if comment:
        lines += ['# ' + c for c in comment.splitlines()]
    lines.append('{} {}'.format(g.n, g.m))
    lines += ['{} {}'.format(u, v) for u, v in g.edges]
    if g.rotation is not None:
        lines += ['rot {}: {}'.format(v, ' '.join(map(str, cyc)))
                  for v, cyc in enumerate(g.rotation)]
    if g.arc_colors is not None:
        lines += ['arc {} {} {}'.format(u, v, c)
                  for (u, v), c in sorted(g.arc_colors.items()) if c]
    return '\n'.join(lines) + '\n'
