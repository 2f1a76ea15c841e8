"""This submodule contains the class definition of ColoredGraph, the object
wlplanar is built around, together with the graph-level tools the rest of
the package relies on: face tracing on rotation systems, brute-force
connectivity and minimum separators, smoothing of degree-2 vertices and a
small-graph planarity test.

Vertices are always the integers 0, ..., n-1.  A graph carries an optional
arc coloring (colors of ordered pairs (u, v) with u == v or {u, v} an edge)
and an optional rotation system (the cyclic order of the neighbors around
every vertex, i.e. a combinatorial embedding).  Uncolored graphs behave as
monochromatic graphs with every arc colored 0."""

# External dependencies
from __future__ import division, absolute_import, print_function
from itertools import combinations
import numpy as np
import networkx as nx

# Internal dependencies
from .misctools import ColorPalette
from .constants import CORPUS_LIMIT


class EmbeddingError(ValueError):
    """Raised when a rotation system is missing or fails the Euler check."""


class ColoredGraph(object):
    """A simple undirected graph with optional arc colors and rotation.

    Args:
        n (int): number of vertices; the vertices are 0, ..., n-1.
        edges: iterable of vertex pairs.  Loops and repeated edges are
            rejected.
        arc_colors (dict): optional map from ordered pairs (u, v) to
            non-negative integers.  Allowed keys are (u, u) (the vertex
            color of u) and (u, v) for edges {u, v}.  Missing entries of
            the domain default to 0, so both directions of an arc are
            always present once any color is given.
        rotation (dict): optional map from each vertex to the cyclic
            sequence of its neighbors.
        name (str): optional label used in reports.

    The object is not meant to be mutated after construction; all
    transformations return new graphs.
    """

    def __init__(self, n, edges=(), arc_colors=None, rotation=None,
                 name=None):
        if int(n) != n or n < 0:
            raise ValueError("n must be a non-negative integer, "
                             "not {!r}.".format(n))
        self.n = int(n)
        self.name = name

        edge_set = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("Edge ({}, {}) has an endpoint outside "
                                 "0..{}.".format(u, v, self.n - 1))
            if u == v:
                raise ValueError("Loop at vertex {} is not allowed."
                                 "".format(u))
            e = (min(u, v), max(u, v))
            if e in edge_set:
                raise ValueError("Edge {} appears twice.".format(e))
            edge_set.add(e)
        self.edges = tuple(sorted(edge_set))

        self._adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            self._adj[u].add(v)
            self._adj[v].add(u)
        self._neighbors = tuple(tuple(sorted(a)) for a in self._adj)

        self.arc_colors = None
        if arc_colors is not None:
            self.arc_colors = self._completed_arc_colors(arc_colors)

        self.rotation = None
        if rotation is not None:
            self.rotation = self._checked_rotation(rotation)

        self._nx_graph = None

    def _completed_arc_colors(self, arc_colors):
        colors = {}
        for (u, v), c in arc_colors.items():
            u, v = int(u), int(v)
            if not self.in_arc_domain(u, v):
                raise ValueError("Arc color given for ({}, {}), which is "
                                 "neither a vertex nor an edge.".format(u, v))
            if int(c) != c or c < 0:
                raise ValueError("Arc colors must be non-negative integers, "
                                 "found {!r} on ({}, {}).".format(c, u, v))
            colors[(u, v)] = int(c)
        for v in range(self.n):
            colors.setdefault((v, v), 0)
        for u, v in self.edges:
            colors.setdefault((u, v), 0)
            colors.setdefault((v, u), 0)
        return colors

    def _checked_rotation(self, rotation):
        rot = []
        for v in range(self.n):
            cyc = tuple(int(w) for w in rotation.get(v, ()))
            if len(set(cyc)) != len(cyc):
                raise EmbeddingError("Rotation at vertex {} repeats a "
                                     "neighbor: {}".format(v, cyc))
            if set(cyc) != self._adj[v]:
                raise EmbeddingError(
                    "Rotation at vertex {} lists {} but its neighbors are "
                    "{}.".format(v, sorted(cyc), sorted(self._adj[v])))
            rot.append(cyc)
        return tuple(rot)

    # Basic queries ###########################################################

    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n)

    def neighbors(self, v):
        return self._neighbors[v]

    def degree(self, v):
        return len(self._neighbors[v])

    def degrees(self):
        return [len(nbrs) for nbrs in self._neighbors]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def in_arc_domain(self, u, v):
        return u == v or v in self._adj[u]

    def is_colored(self):
        return self.arc_colors is not None

    def arc_color(self, u, v):
        """Returns the color of the arc (u, v); 0 for uncolored graphs."""
        if not self.in_arc_domain(u, v):
            raise KeyError("({}, {}) is neither a vertex nor an edge."
                           "".format(u, v))
        if self.arc_colors is None:
            return 0
        return self.arc_colors[(u, v)]

    def vertex_color(self, v):
        return self.arc_color(v, v)

    def arcs(self):
        """Yields every ordered pair in the arc-color domain, diagonal
        first, then both directions of every edge."""
        for v in range(self.n):
            yield v, v
        for u, v in self.edges:
            yield u, v
            yield v, u

    def adjacency_matrix(self):
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def arc_color_matrix(self):
        """Returns an n x n integer array holding the arc colors, with -1
        at pairs outside the arc-color domain."""
        c = np.full((self.n, self.n), -1, dtype=np.int64)
        for u, v in self.arcs():
            c[u, v] = self.arc_color(u, v)
        return c

    def is_complete(self):
        return self.m == self.n * (self.n - 1) // 2

    # Transformations #########################################################

    def with_arc_colors(self, arc_colors, name=None):
        """Returns a copy of this graph carrying `arc_colors` instead."""
        return ColoredGraph(self.n, self.edges, arc_colors,
                            self._rotation_dict(), name=name or self.name)

    def uncolored(self):
        return ColoredGraph(self.n, self.edges, None, self._rotation_dict(),
                            name=self.name)

    def relabeled(self, perm):
        """Returns the graph obtained by renaming vertex v to perm[v]."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..{}."
                             "".format(self.n - 1))
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        colors = None
        if self.arc_colors is not None:
            colors = dict(((perm[u], perm[v]), c)
                          for (u, v), c in self.arc_colors.items())
        rotation = None
        if self.rotation is not None:
            rotation = dict((perm[v], [perm[w] for w in self.rotation[v]])
                            for v in range(self.n))
        return ColoredGraph(self.n, edges, colors, rotation, name=self.name)

    def induced_subgraph(self, vertices, name=None):
        """Returns G[vertices], relabeled so that the i-th smallest vertex
        of `vertices` becomes vertex i.  Colors are kept, and so is the
        rotation (restricted), since deleting vertices keeps an embedding
        planar."""
        kept = sorted(set(vertices))
        index = dict((v, i) for i, v in enumerate(kept))
        edges = [(index[u], index[v]) for u, v in self.edges
                 if u in index and v in index]
        colors = None
        if self.arc_colors is not None:
            colors = dict(((index[u], index[v]), c)
                          for (u, v), c in self.arc_colors.items()
                          if u in index and v in index)
        rotation = None
        if self.rotation is not None:
            rotation = dict((index[v], [index[w] for w in self.rotation[v]
                                        if w in index])
                            for v in kept)
        return ColoredGraph(len(kept), edges, colors, rotation, name=name)

    def without_vertices(self, removed, name=None):
        removed = set(removed)
        return self.induced_subgraph(
            [v for v in range(self.n) if v not in removed], name=name)

    def subdivided(self, u, v, name=None):
        """Returns the graph with edge {u, v} replaced by the path u-x-v
        through a new vertex x = n.  Both halves inherit the arc colors of
        the old edge; x gets vertex color 0."""
        if not self.has_edge(u, v):
            raise ValueError("({}, {}) is not an edge.".format(u, v))
        x = self.n
        edges = [e for e in self.edges if e != (min(u, v), max(u, v))]
        edges += [(u, x), (x, v)]
        colors = None
        if self.arc_colors is not None:
            colors = dict(self.arc_colors)
            forward, backward = colors.pop((u, v)), colors.pop((v, u))
            colors.update({(u, x): forward, (x, v): forward,
                           (x, u): backward, (v, x): backward, (x, x): 0})
        rotation = None
        if self.rotation is not None:
            rotation = self._rotation_dict()
            rotation[u] = [x if w == v else w for w in rotation[u]]
            rotation[v] = [x if w == u else w for w in rotation[v]]
            rotation[x] = [u, v]
        return ColoredGraph(self.n + 1, edges, colors, rotation,
                            name=name or self.name)

    def _rotation_dict(self):
        if self.rotation is None:
            return None
        return dict((v, list(cyc)) for v, cyc in enumerate(self.rotation))

    # Connectivity ############################################################

    def to_networkx(self):
        """Returns a (frozen) networkx.Graph with the same vertices and
        edges.  Colors are stored as the 'color' attribute."""
        if self._nx_graph is None:
            gnx = nx.Graph()
            gnx.add_nodes_from(range(self.n))
            gnx.add_edges_from(self.edges)
            for v in range(self.n):
                gnx.nodes[v]['color'] = self.vertex_color(v)
            for u, v in self.edges:
                gnx.edges[u, v]['color'] = (self.arc_color(u, v),
                                            self.arc_color(v, u))
            self._nx_graph = nx.freeze(gnx)
        return self._nx_graph

    def __getstate__(self):
        state = dict(self.__dict__)
        state['_nx_graph'] = None
        return state

    def components(self, removed=()):
        """Returns the vertex sets of the connected components of G - removed,
        ordered by their smallest vertex."""
        removed = set(removed)
        gnx = self.to_networkx()
        if removed:
            gnx = gnx.subgraph(v for v in range(self.n) if v not in removed)
        comps = [frozenset(c) for c in nx.connected_components(gnx)]
        return sorted(comps, key=min)

    def is_connected(self, removed=()):
        return len(self.components(removed)) <= 1

    def blocks(self):
        """Returns the vertex sets of the 2-connected components (blocks);
        bridges count as blocks of size 2."""
        return sorted((frozenset(b) for b in
                       nx.biconnected_components(self.to_networkx())),
                      key=sorted)

    def cut_vertices(self):
        return set(nx.articulation_points(self.to_networkx()))

    # Comparison ##############################################################

    def _key(self):
        colors = None
        if self.arc_colors is not None and any(self.arc_colors.values()):
            colors = tuple(sorted(self.arc_colors.items()))
        return self.n, self.edges, colors, self.rotation

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return not self == other

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        label = ' {!r}'.format(self.name) if self.name else ''
        return 'ColoredGraph{}(n={}, m={}{}{})'.format(
            label, self.n, self.m,
            ', colored' if self.is_colored() else '',
            ', embedded' if self.rotation is not None else '')


# Faces #######################################################################

def faces(g):
    """Traces the faces of the combinatorial embedding of `g`.

    The dart (u, v) is followed by (v, w) where w is the neighbor after u in
    the rotation at v.  Every dart lies on exactly one face.  The faces are
    returned as tuples of vertices (the tails of their darts), in the order
    they are first reached when the darts are scanned in sorted order.

    Raises EmbeddingError if `g` has no rotation or if V - E + F != 2.
    """
    if g.rotation is None:
        raise EmbeddingError("The graph has no rotation system.")
    if not g.is_connected():
        raise EmbeddingError("Face tracing needs a connected graph.")
    if g.m == 0:
        return [(0,)] if g.n == 1 else []

    position = [dict((w, i) for i, w in enumerate(cyc)) for cyc in g.rotation]
    seen = set()
    traced = []
    for u, v in sorted(d for e in g.edges for d in (e, e[::-1])):
        if (u, v) in seen:
            continue
        face = []
        dart = (u, v)
        while dart not in seen:
            seen.add(dart)
            a, b = dart
            face.append(a)
            cyc = g.rotation[b]
            dart = (b, cyc[(position[b][a] + 1) % len(cyc)])
        traced.append(tuple(face))

    if g.n - g.m + len(traced) != 2:
        raise EmbeddingError(
            "Euler check failed: V - E + F = {} - {} + {} != 2; the rotation "
            "does not describe a planar embedding.".format(g.n, g.m,
                                                           len(traced)))
    return traced


def face_lengths(g):
    """Returns the sorted list of face lengths of `g`'s embedding."""
    return sorted(len(f) for f in faces(g))


def rotation_from_coordinates(points, edges):
    """Derives the rotation system of a convex polyhedron from coordinates.

    Around every vertex p the neighbors are sorted by angle in the plane
    orthogonal to p - c, where c is the centroid of all points.  For a
    convex polyhedron c lies inside the cone spanned by the edges at p,
    so this is the cyclic order seen from outside.

    Args:
        points: (n, 3) array-like of coordinates.
        edges: iterable of vertex pairs.

    Returns:
        dict mapping every vertex to the tuple of its neighbors.
    """
    pts = np.asarray(points, dtype=float)
    nbrs = [[] for _ in range(len(pts))]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    center = pts.mean(axis=0)
    rotation = {}
    for v, p in enumerate(pts):
        d = p - center
        d /= np.linalg.norm(d)
        # any vector not parallel to d seeds the tangent basis
        seed = np.eye(3)[np.argmin(np.abs(d))]
        e1 = np.cross(d, seed)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(d, e1)
        angles = [np.arctan2(np.dot(pts[w] - p, e2), np.dot(pts[w] - p, e1))
                  for w in nbrs[v]]
        rotation[v] = tuple(w for _, w in sorted(zip(angles, nbrs[v])))
    return rotation


# Connectivity ################################################################

def is_k_connected(g, k):
    """Returns True iff g has more than k vertices and no set of fewer than
    k vertices disconnects it.  Brute force over all small vertex subsets,
    i.e. O(n^(k-1) (n + m))."""
    if k < 1:
        raise ValueError("k must be a positive integer.")
    if g.n <= k:
        return False
    for size in range(k):
        for removed in combinations(range(g.n), size):
            if not g.is_connected(removed):
                return False
    return True


def connectivity(g):
    """Returns the vertex connectivity of g: the size of a smallest
    separator, n - 1 for complete graphs and 0 for disconnected graphs."""
    if g.is_complete():
        return max(g.n - 1, 0)
    for size in range(g.n):
        for removed in combinations(range(g.n), size):
            if not g.is_connected(removed):
                return size
    raise AssertionError("non-complete graphs always have a separator")


def min_separators(g):
    """Returns all separators of minimum cardinality of a connected,
    non-complete graph, as frozensets sorted by their sorted elements.

    Cost O(n^c (n + m)) for connectivity c; intended for n up to a few
    dozen and c <= 3."""
    if not g.is_connected():
        raise ValueError("min_separators needs a connected graph.")
    if g.is_complete():
        raise ValueError("A complete graph has no separator.")
    c = connectivity(g)
    return [frozenset(s) for s in combinations(range(g.n), c)
            if not g.is_connected(s)]


# Smoothing ###################################################################

def _degree2_chains(g, retained):
    """Yields (u, v, path) for every path from a retained vertex u to a
    retained vertex v whose inner vertices all have degree 2; each such
    path is produced once from each end."""
    for u in sorted(retained):
        for w in g.neighbors(u):
            path = [u]
            prev, cur = u, w
            while cur not in retained:
                path.append(cur)
                a, b = g.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
            path.append(cur)
            yield u, cur, path


def _path_reading(g, path):
    """The colors met when walking `path`: both arc colors of every edge,
    and the vertex color of every inner vertex."""
    reading = []
    for i in range(len(path) - 1):
        a, b = path[i], path[i + 1]
        reading += [g.arc_color(a, b), g.arc_color(b, a)]
        if i + 1 < len(path) - 1:
            reading.append(g.vertex_color(b))
    return tuple(reading)


def _smooth_once(g, palette):
    degrees = g.degrees()
    retained = set(v for v in range(g.n) if degrees[v] >= 3)
    index = dict((v, i) for i, v in enumerate(sorted(retained)))
    readings = {}
    for u, v, path in _degree2_chains(g, retained):
        if u == v:
            continue
        readings.setdefault((u, v), []).append(
            (len(path) - 1, _path_reading(g, path)))

    edges = set()
    colors = {}
    for (u, v), paths in readings.items():
        direct = g.arc_color(u, v) if g.has_edge(u, v) else -1
        inner = tuple(sorted(p for p in paths if p[0] > 1))
        colors[(index[u], index[v])] = palette.intern(('paths', direct, inner))
        edges.add((min(index[u], index[v]), max(index[u], index[v])))
    for v in retained:
        colors[(index[v], index[v])] = palette.intern(
            ('vertex', g.vertex_color(v)))

    rotation = None
    if g.rotation is not None:
        rotation = {}
        for v in retained:
            ends = []
            for w in g.rotation[v]:
                prev, cur = v, w
                while cur not in retained:
                    a, b = g.neighbors(cur)
                    prev, cur = cur, (b if a == prev else a)
                ends.append(index[cur])
            rotation[index[v]] = ends
        if any(len(set(c)) != len(c) for c in rotation.values()):
            rotation = None  # parallel paths merged

    return ColoredGraph(len(retained), sorted(edges), colors, rotation,
                        name=g.name)


def smooth_degree2(g, palette=None):
    """Removes the degree-2 vertices of a 2-connected graph.

    One smoothing step keeps the vertices of degree at least 3 (relabeled
    in increasing order).  Two of them are adjacent iff g joins them by a
    path whose inner vertices all have degree 2.  The arc (u, v) of the
    result is colored with the palette id of

        ('paths', direct, ((length, reading), ...))

    where `direct` is the color of an original edge (u, v) or -1, and the
    sorted tuple lists every degree-2 path from u to v by its length and
    the colors read walking it from u to v.  Vertex colors become
    ('vertex', c).  Merging parallel paths can create new degree-2
    vertices, so steps are repeated while the result is 2-connected, has
    a degree-2 vertex and is not a cycle.  A graph without degree-2
    vertices is returned as is, once it passed the checks below.

    Args:
        g (ColoredGraph): 2-connected, not a cycle.
        palette (ColorPalette): shared palette, so that several smoothed
            graphs stay comparable and tags can be decoded.  A fresh one
            is used if omitted.
    """
    if not is_k_connected(g, 2):
        raise ValueError("smooth_degree2 needs a 2-connected graph.")
    if max(g.degrees()) < 3:
        raise ValueError("The graph is a cycle; smoothing would leave "
                         "nothing.")
    if 2 not in g.degrees():
        return g
    if palette is None:
        palette = ColorPalette()
    while True:
        g = _smooth_once(g, palette)
        degrees = g.degrees()
        if (2 not in degrees or max(degrees) < 3 or
                not is_k_connected(g, 2)):
            return g


# Small-graph planarity #######################################################

def _set_partitions(items, blocks):
    """Yields every partition of the list `items` into exactly `blocks`
    non-empty blocks."""
    if blocks == 0:
        if not items:
            yield []
        return
    if len(items) < blocks:
        return
    first, rest = items[0], items[1:]
    # `first` alone in a block
    for part in _set_partitions(rest, blocks - 1):
        yield [[first]] + part
    # `first` joins one of the blocks of a partition of the rest
    for part in _set_partitions(rest, blocks):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _contains_kuratowski_minor(g):
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    gnx = g.to_networkx()

    def connected(block):
        return nx.is_connected(gnx.subgraph(block))

    def touching(b1, b2):
        return any(adj[v] & b2 for v in b1)

    for size in range(5, g.n + 1):
        for kept in combinations(range(g.n), size):
            for nblocks in (5, 6):
                for part in _set_partitions(list(kept), nblocks):
                    if not all(connected(b) for b in part):
                        continue
                    sets = [set(b) for b in part]
                    touch = [[touching(a, b) for b in sets] for a in sets]
                    if nblocks == 5:
                        if all(touch[i][j] for i, j in
                               combinations(range(5), 2)):
                            return True
                        continue
                    for side in combinations(range(1, 6), 2):
                        left = (0,) + side
                        right = [j for j in range(6) if j not in left]
                        if all(touch[i][j] for i in left for j in right):
                            return True
    return False


def is_planar_small(g):
    """Decides planarity of a graph with at most CORPUS_LIMIT vertices by
    brute-force search for a K5 or K3,3 minor (Wagner's theorem)."""
    if g.n > CORPUS_LIMIT:
        raise ValueError("is_planar_small handles at most {} vertices."
                         "".format(CORPUS_LIMIT))
    if g.n <= 4 or g.m < 9:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return not _contains_kuratowski_minor(g)
