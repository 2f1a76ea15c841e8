"""This submodule contains generators for the graphs the experiments run
on: the eight families of 3-connected planar graphs with fixing number 3
(the "exceptions"), other polyhedral families that are not exceptions, a
few elementary graphs and the exhaustive enumeration of small graphs.

Polyhedra are built from 3D coordinates; their rotation systems are read
off the convex hull with rotation_from_coordinates() and checked with the
Euler formula.  The triakis and tetrakis solids add one apex per face to
their base solid directly on its rotation system (kleetope())."""

# External dependencies
from __future__ import division, absolute_import, print_function
from collections import Counter, OrderedDict
from itertools import combinations, combinations_with_replacement
import logging
import numpy as np

# Internal dependencies
from .constants import CORPUS_DEFAULT, CORPUS_LIMIT
from .graph import (ColoredGraph, faces, is_k_connected, is_planar_small,
                    rotation_from_coordinates)
from .oracle import canonical_form, isomorphic, oracle_limit, orbits
from .wl import individualized_is_discrete

logger = logging.getLogger(__name__)


# Elementary graphs ###########################################################

def path_graph(n):
    return ColoredGraph(n, [(i, i + 1) for i in range(n - 1)],
                        name='path({})'.format(n))


def cycle_graph(n):
    if n < 3:
        raise ValueError("A cycle needs at least 3 vertices.")
    rotation = dict((i, [(i - 1) % n, (i + 1) % n]) for i in range(n))
    return ColoredGraph(n, [(i, (i + 1) % n) for i in range(n)],
                        rotation=rotation, name='cycle({})'.format(n))


def complete_graph(n):
    return ColoredGraph(n, combinations(range(n), 2),
                        name='complete({})'.format(n))


def star_graph(leaves):
    """The star K_{1,leaves} with center 0."""
    return ColoredGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)],
                        name='star({})'.format(leaves))


def disjoint_union(*gs):
    """The disjoint union; the vertices of the i-th graph follow those of
    the graphs before it.  Colors are kept, rotations dropped."""
    n, edges, colors = 0, [], {}
    for g in gs:
        edges += [(u + n, v + n) for u, v in g.edges]
        for u, v in g.arcs():
            colors[(u + n, v + n)] = g.arc_color(u, v)
        n += g.n
    colored = any(g.is_colored() for g in gs)
    return ColoredGraph(n, edges, colors if colored else None,
                        name='+'.join(g.name or '?' for g in gs))


# Polyhedra ###################################################################

def _edges_at_min_distance(points):
    pts = np.asarray(points, dtype=float)
    dist = np.linalg.norm(pts[:, None] - pts[None, :], axis=-1)
    shortest = dist[np.triu_indices(len(pts), 1)].min()
    return [(u, v) for u, v in combinations(range(len(pts)), 2)
            if np.isclose(dist[u, v], shortest)]


class Polyhedron(object):
    """Coordinates and edges of a convex polyhedron."""

    def __init__(self, name, points, edges):
        self.name = name
        self.points = np.asarray(points, dtype=float)
        self.edges = sorted((min(e), max(e)) for e in edges)

    def graph(self):
        """The graph with the rotation system seen from outside; raises
        EmbeddingError if the rotation fails the Euler check."""
        rotation = rotation_from_coordinates(self.points, self.edges)
        g = ColoredGraph(len(self.points), self.edges, rotation=rotation,
                         name=self.name)
        faces(g)
        return g


def _bipyramid(n):
    if n < 3:
        raise ValueError("A bipyramid needs n >= 3, not {}.".format(n))
    angles = 2 * np.pi * np.arange(n) / n
    points = [(np.cos(a), np.sin(a), 0.) for a in angles]
    points += [(0., 0., 1.), (0., 0., -1.)]
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)] + [(i, n + 1) for i in range(n)]
    return Polyhedron('bipyramid({})'.format(n), points, edges)


def _tetrahedron():
    points = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    return Polyhedron('tetrahedron', points, combinations(range(4), 2))


def _cube():
    # vertex 4*bx + 2*by + bz sits at (+-1, +-1, +-1)
    points = [(2 * bx - 1, 2 * by - 1, 2 * bz - 1)
              for bx in (0, 1) for by in (0, 1) for bz in (0, 1)]
    edges = [(u, v) for u, v in combinations(range(8), 2)
             if bin(u ^ v).count('1') == 1]
    return Polyhedron('cube', points, edges)


def _octahedron():
    points = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1),
              (0, 0, -1)]
    return Polyhedron('octahedron', points, _edges_at_min_distance(points))


def _icosahedron():
    phi = (1 + np.sqrt(5)) / 2
    points = []
    for s1 in (1, -1):
        for s2 in (phi, -phi):
            points += [(0, s1, s2), (s1, s2, 0), (s2, 0, s1)]
    return Polyhedron('icosahedron', points, _edges_at_min_distance(points))


def _rhombic_dodecahedron():
    cube = _cube()
    points = list(cube.points)
    edges = []
    for axis in range(3):
        for sign in (1, -1):
            apex = [0., 0., 0.]
            apex[axis] = 2. * sign
            points.append(apex)
            edges += [(v, len(points) - 1) for v in range(8)
                      if cube.points[v][axis] == sign]
    return Polyhedron('rhombic-dodecahedron', points, edges)


def kleetope(g, name=None):
    """Adds one apex per face of `g`, joined to the vertices of that face.

    The apex of the face (f0, ..., fk-1) is inserted at each f(i+1) right
    after f(i), and its own rotation is the face reversed, so every new face
    is a triangle.  Raises EmbeddingError if `g` has no rotation and
    ValueError if a face visits a vertex twice."""
    traced = faces(g)
    rotation = g._rotation_dict()
    edges = list(g.edges)
    x = g.n
    for face in traced:
        if len(set(face)) != len(face):
            raise ValueError("The face {} is not a cycle.".format(face))
        k = len(face)
        for i in range(k):
            a, b = face[i], face[(i + 1) % k]
            cyc = rotation[b]
            cyc.insert(cyc.index(a) + 1, x)
        rotation[x] = list(reversed(face))
        edges += [(v, x) for v in face]
        x += 1
    kept = g.name or 'graph'
    return ColoredGraph(x, edges, rotation=rotation,
                        name=name or 'kleetope({})'.format(kept))


def _prism(n):
    if n < 3:
        raise ValueError("A prism needs n >= 3, not {}.".format(n))
    angles = 2 * np.pi * np.arange(n) / n
    points = [(np.cos(a), np.sin(a), 1.) for a in angles]
    points += [(np.cos(a), np.sin(a), -1.) for a in angles]
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Polyhedron('prism({})'.format(n), points, edges)


def _antiprism(n):
    if n < 3:
        raise ValueError("An antiprism needs n >= 3, not {}.".format(n))
    angles = 2 * np.pi * np.arange(n) / n
    points = [(np.cos(a), np.sin(a), .5) for a in angles]
    points += [(np.cos(a + np.pi / n), np.sin(a + np.pi / n), -.5)
               for a in angles]
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(i, n + (i - 1) % n) for i in range(n)]
    return Polyhedron('antiprism({})'.format(n), points, edges)


def _wheel(rim):
    if rim < 3:
        raise ValueError("A wheel needs a rim of at least 3 vertices.")
    angles = 2 * np.pi * np.arange(rim) / rim
    points = [(np.cos(a), np.sin(a), 0.) for a in angles] + [(0., 0., 1.)]
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Polyhedron('wheel({})'.format(rim), points, edges)


def bipyramid(n):
    """The n-gonal bipyramid: an n-cycle 0..n-1 plus apexes n and n+1."""
    return _bipyramid(n).graph()


def tetrahedron():
    return _tetrahedron().graph()


def cube():
    """The cube; vertex 4*bx + 2*by + bz sits at (+-1, +-1, +-1), so 0, 1,
    3 lie on a face and 7 is antipodal to 0."""
    return _cube().graph()


def octahedron():
    return _octahedron().graph()


def icosahedron():
    return _icosahedron().graph()


def rhombic_dodecahedron():
    return _rhombic_dodecahedron().graph()


def triakis_tetrahedron():
    return kleetope(tetrahedron(), 'triakis-tetrahedron')


def triakis_octahedron():
    return kleetope(octahedron(), 'triakis-octahedron')


def tetrakis_hexahedron():
    return kleetope(cube(), 'tetrakis-hexahedron')


def triakis_icosahedron():
    return kleetope(icosahedron(), 'triakis-icosahedron')


def prism(n):
    return _prism(n).graph()


def antiprism(n):
    return _antiprism(n).graph()


def wheel(rim):
    """The wheel with `rim` rim vertices 0..rim-1 and hub `rim`."""
    return _wheel(rim).graph()


# The exceptions ##############################################################

class SolidSpec(object):
    """One row of the table of exceptions: a generator and the expected
    vertex, edge and face counts with vertex-degree and face-length
    multisets (as Counters)."""

    def __init__(self, name, generator, vertices, edges, faces, vertex_type,
                 face_type):
        self.name = name
        self.generator = generator
        self.vertices = vertices
        self.edges = edges
        self.faces = faces
        self.vertex_type = Counter(vertex_type)
        self.face_type = Counter(face_type)

    def generate(self):
        return self.generator()

    def check(self, g=None):
        """Compares a generated graph with the row; returns a dict of the
        observed values and a 'match' verdict."""
        if g is None:
            g = self.generate()
        face_list = faces(g)
        observed = OrderedDict([
            ('V', g.n), ('E', g.m), ('F', len(face_list)),
            ('V-type', Counter(g.degrees())),
            ('F-type', Counter(len(f) for f in face_list))])
        expected = OrderedDict([
            ('V', self.vertices), ('E', self.edges), ('F', self.faces),
            ('V-type', self.vertex_type), ('F-type', self.face_type)])
        observed['match'] = all(observed[key] == expected[key]
                                for key in expected)
        return observed

    def __repr__(self):
        return 'SolidSpec({!r})'.format(self.name)


def bipyramid_spec(n):
    return SolidSpec('bipyramid({})'.format(n), lambda: bipyramid(n),
                     n + 2, 3 * n, 2 * n, Counter({n: 2}) + Counter({4: n}),
                     {3: 2 * n})


FIXED_SOLIDS = OrderedDict([
    ('tetrahedron', SolidSpec('tetrahedron', tetrahedron, 4, 6, 4,
                              {3: 4}, {3: 4})),
    ('cube', SolidSpec('cube', cube, 8, 12, 6, {3: 8}, {4: 6})),
    ('triakis-tetrahedron', SolidSpec('triakis-tetrahedron',
                                      triakis_tetrahedron, 8, 18, 12,
                                      {3: 4, 6: 4}, {3: 12})),
    ('icosahedron', SolidSpec('icosahedron', icosahedron, 12, 30, 20,
                              {5: 12}, {3: 20})),
    ('rhombic-dodecahedron', SolidSpec('rhombic-dodecahedron',
                                       rhombic_dodecahedron, 14, 24, 12,
                                       {3: 8, 4: 6}, {4: 12})),
    ('triakis-octahedron', SolidSpec('triakis-octahedron',
                                     triakis_octahedron, 14, 36, 24,
                                     {3: 8, 8: 6}, {3: 24})),
    ('tetrakis-hexahedron', SolidSpec('tetrakis-hexahedron',
                                      tetrakis_hexahedron, 14, 36, 24,
                                      {4: 6, 6: 8}, {3: 24})),
])

# bipyramids are checked for these n
BIPYRAMID_RANGE = range(3, 9)


def solid_specs(bipyramids=BIPYRAMID_RANGE):
    """The rows of the table: one per bipyramid in `bipyramids`, then the
    seven fixed solids."""
    return [bipyramid_spec(n) for n in bipyramids] + list(
        FIXED_SOLIDS.values())


def solid_names():
    return ['bipyramid'] + list(FIXED_SOLIDS)


def generate(name, n=None):
    """Generates a solid by name ('bipyramid' needs n) or a family member
    ('prism', 'antiprism', 'wheel', 'triakis-icosahedron', 'octahedron')."""
    parametrized = {'bipyramid': bipyramid, 'prism': prism,
                    'antiprism': antiprism, 'wheel': wheel}
    fixed = dict((key, spec.generator) for key, spec in FIXED_SOLIDS.items())
    fixed.update({'octahedron': octahedron,
                  'triakis-icosahedron': triakis_icosahedron})
    if name in parametrized:
        if n is None:
            raise ValueError("{} needs a size parameter.".format(name))
        return parametrized[name](n)
    if name in fixed:
        return fixed[name]()
    raise ValueError("Unknown solid {!r}; expected one of {}.".format(
        name, sorted(list(parametrized) + list(fixed))))


def exception_solids(bipyramids=BIPYRAMID_RANGE):
    return [spec.generate() for spec in solid_specs(bipyramids)]


def non_exception_polyhedra(max_prism=8, max_rim=10):
    """Prisms and antiprisms (3 <= n <= max_prism), wheels (4 <= rim <=
    max_rim) and the triakis icosahedron, without the members isomorphic to
    an exception (prism(4) is the cube, antiprism(3) the octahedron)."""
    family = [prism(n) for n in range(3, max_prism + 1)]
    family += [antiprism(n) for n in range(3, max_prism + 1)]
    family += [wheel(rim) for rim in range(4, max_rim + 1)]
    solids = exception_solids()
    kept = []
    for g in family:
        twins = [s for s in solids if (s.n, s.m) == (g.n, g.m)]
        if any(isomorphic(g, s) is not None for s in twins):
            logger.debug('%r is an exception; left out', g)
            continue
        kept.append(g)
    return kept + [triakis_icosahedron()]


def subdivided_solids(bipyramids=BIPYRAMID_RANGE):
    """Every exception with its first edge subdivided."""
    return [g.subdivided(*g.edges[0], name='{}/sub{}'.format(g.name,
                                                             g.edges[0]))
            for g in exception_solids(bipyramids)]


def polyhedra():
    """All curated 3-connected planar graphs: exceptions first."""
    return exception_solids() + non_exception_polyhedra()


def discrete_pair(g):
    """Returns the first ordered pair (v, w) of distinct vertices such that
    1-WL is discrete after individualizing v and w, or None.  When g is
    small enough for the oracle, v only runs over orbit representatives."""
    if g.rotation is None or not is_k_connected(g, 3):
        raise ValueError("discrete_pair expects a 3-connected planar graph "
                         "with a rotation system.")
    faces(g)
    if g.n <= oracle_limit():
        firsts = [orbit[0] for orbit in orbits(g)]
    else:
        firsts = range(g.n)
    for v in firsts:
        for w in range(g.n):
            if w != v and individualized_is_discrete(g, [v, w]):
                return v, w
    return None


def is_exception(g):
    """True iff no two individualized vertices make 1-WL discrete on the
    3-connected planar graph g."""
    return discrete_pair(g) is None


def consecutive_neighbor_property(g):
    """True iff for every vertex v, any two neighbors consecutive in the
    rotation at v have a common neighbor other than v whose degree equals
    the degree of v.  Every exception has this property."""
    if g.rotation is None:
        raise ValueError("The graph has no rotation system.")
    degrees = g.degrees()
    for v, cyc in enumerate(g.rotation):
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            common = set(g.neighbors(a)) & set(g.neighbors(b)) - {v}
            if not any(degrees[x] == degrees[v] for x in common):
                return False
    return True


def face_triples(g):
    """All sets of three vertices lying on a common face, as sorted
    tuples."""
    triples = set()
    for face in faces(g):
        triples.update(combinations(sorted(set(face)), 3))
    return sorted(triples)


# Separator gadgets ###########################################################

# name: (size, inner edges, edges to the separator vertices 'a' and 'b')
GADGETS = OrderedDict([
    ('A', (2, [(0, 1)], [(0, 'a'), (0, 'b'), (1, 'a'), (1, 'b')])),
    ('B', (3, [(0, 1), (1, 2), (0, 2)],
           [(0, 'a'), (1, 'b'), (2, 'a'), (2, 'b')])),
    ('Bm', (3, [(0, 1), (1, 2), (0, 2)],
            [(0, 'b'), (1, 'a'), (2, 'a'), (2, 'b')])),
    ('C', (3, [(0, 1), (1, 2), (0, 2)],
           [(i, s) for i in range(3) for s in 'ab'])),
])


def gadget_graph(kinds, joined=False):
    """Glues the named gadgets onto the separator {0, 1} (vertex 0 plays
    'a', vertex 1 plays 'b'); `joined` adds the edge 0-1.  With two or more
    gadgets the result is 2-connected, not 3-connected and of minimum
    degree 3."""
    n, edges = 2, [(0, 1)] if joined else []
    for kind in kinds:
        size, inner, outer = GADGETS[kind]
        edges += [(n + u, n + v) for u, v in inner]
        edges += [(n + u, 'ab'.index(s)) for u, s in outer]
        n += size
    return ColoredGraph(n, edges, name='gadgets({}){}'.format(
        ','.join(kinds), '+ab' if joined else ''))


def gadget_graphs(max_n=10):
    """Every gadget_graph() with at least two gadgets and at most max_n
    vertices."""
    graphs = []
    for count in range(2, max_n // 2 + 1):
        for kinds in combinations_with_replacement(GADGETS, count):
            if 2 + sum(GADGETS[k][0] for k in kinds) <= max_n:
                graphs += [gadget_graph(kinds, joined)
                           for joined in (False, True)]
    return graphs


# Exhaustive enumeration ######################################################

def _deduplicated(graphs):
    forms = OrderedDict()
    for g in graphs:
        forms.setdefault(canonical_form(g), g)
    return [forms[f] for f in sorted(forms, key=lambda f: (
        sum(c >= 0 for row in f[2] for c in row), f))]


def exhaustive_graphs(n, method='extension'):
    """All graphs on n vertices up to isomorphism, ordered by edge count
    and canonical form.

    Args:
        n (int): at most CORPUS_LIMIT.
        method (str): 'extension' adds a vertex with every neighborhood to
            each graph on n - 1 vertices; 'edges' tries every edge subset.
            Both give the same list.
    """
    if n > CORPUS_LIMIT:
        raise ValueError("Exhaustive enumeration is limited to {} vertices."
                         "".format(CORPUS_LIMIT))
    if method == 'edges':
        pairs = list(combinations(range(n), 2))
        candidates = (ColoredGraph(n, [pairs[i] for i in range(len(pairs))
                                       if mask >> i & 1])
                      for mask in range(2 ** len(pairs)))
        graphs = _deduplicated(candidates)
    elif method == 'extension':
        if n <= 1:
            graphs = [ColoredGraph(n)]
        else:
            graphs = _deduplicated(
                ColoredGraph(n, list(g.edges) + [(v, n - 1) for v in nbrs])
                for g in exhaustive_graphs(n - 1)
                for size in range(n)
                for nbrs in combinations(range(n - 1), size))
    else:
        raise ValueError("Unknown method {!r}.".format(method))
    for i, g in enumerate(graphs):
        g.name = 'n{}_{}'.format(n, i)
    return graphs


def connected_graphs(max_n=CORPUS_DEFAULT, method='extension'):
    """All connected graphs on 1..max_n vertices up to isomorphism."""
    return [g for n in range(1, max_n + 1)
            for g in exhaustive_graphs(n, method) if g.is_connected()]


def planar_graphs(max_n=CORPUS_DEFAULT):
    """All connected planar graphs on 1..max_n vertices up to
    isomorphism (without rotation systems)."""
    return [g for g in connected_graphs(max_n) if is_planar_small(g)]


def corpus(max_n=CORPUS_DEFAULT):
    """The test corpus: every connected graph on at most max_n vertices,
    the curated polyhedra and the exceptions with one edge subdivided."""
    if max_n > CORPUS_LIMIT:
        raise ValueError("corpus() is limited to max_n <= {}."
                         "".format(CORPUS_LIMIT))
    return connected_graphs(max_n) + polyhedra() + subdivided_solids()
