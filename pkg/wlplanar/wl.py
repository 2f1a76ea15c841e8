"""This submodule contains the k-dimensional Weisfeiler-Leman refinement
engine (k = 1, 2, 3) together with individualization, the distinguishing
test and walk counts.

Colors are dense integer ids.  Every round collects the signatures of all
tuples of all graphs of a joint run, sorts them structurally and numbers
them 0, 1, ... in that order, so equal ids mean equal signatures across
the graphs of one run.  Ids of separate runs are not comparable.

For k = 1 the signature of v is its previous color together with the
sorted tuple of (lambda(v, w), lambda(w, v), color(w)) over the neighbors
w of v.  For k >= 2 colors live in a numpy array of shape (n,)*k and the
signature of a tuple is its previous color together with the sorted
multiset of the k-vectors obtained by substituting each vertex w into
each of the k positions.  The whole round is done with numpy.  The color
array has n^k entries, which alone would allow 3-WL up to n of about 150,
but the substitution signatures of a round hold n^(k+1) k-vectors, about
a gigabyte for 3-WL at n = 80; that is the practical limit."""

# External dependencies
from __future__ import division, absolute_import, print_function
from collections import OrderedDict
import json
import logging
import numpy as np

# Internal dependencies
from .constants import WL_DIMENSIONS

logger = logging.getLogger(__name__)


def _check_k(k):
    if k not in WL_DIMENSIONS:
        raise ValueError("k must be one of {}, not {!r}."
                         "".format(WL_DIMENSIONS, k))


class Coloring(object):
    """A coloring of the k-tuples of the vertices of one graph.

    Args:
        k (int): dimension.
        colors (array-like): integer array of shape (n,)*k; colors[t] is
            the color id of the tuple t.
        round (int): the refinement round this coloring belongs to.
    """

    def __init__(self, k, colors, round=0):
        _check_k(k)
        self.k = k
        self.colors = np.asarray(colors, dtype=np.int64)
        if self.colors.ndim != k:
            raise ValueError("A coloring of {}-tuples needs a {}-dimensional "
                             "array.".format(k, k))
        self.n = self.colors.shape[0]
        self.round = round

    @property
    def classes(self):
        """Maps every color id to the lexicographically sorted list of
        tuples having it; ids are ascending."""
        classes = {}
        for t in np.ndindex(*self.colors.shape):
            classes.setdefault(int(self.colors[t]), []).append(t)
        return OrderedDict(sorted(classes.items()))

    @property
    def num_classes(self):
        return len(np.unique(self.colors))

    def color_of(self, *vs):
        """Color of a tuple of at most k vertices; shorter tuples are
        extended by repeating their last entry."""
        if not vs or len(vs) > self.k:
            raise ValueError("Expected between 1 and {} vertices."
                             "".format(self.k))
        vs = tuple(vs) + (vs[-1],) * (self.k - len(vs))
        return int(self.colors[vs])

    def vertex_colors(self):
        """The color of (v, ..., v) for every vertex v."""
        diagonal = (np.arange(self.n),) * self.k
        return self.colors[diagonal]

    def vertex_partition(self):
        """Vertex classes (by vertex color), each sorted, ordered by their
        smallest vertex."""
        classes = {}
        for v, c in enumerate(self.vertex_colors().tolist()):
            classes.setdefault(c, []).append(v)
        return sorted(classes.values())

    def histogram(self):
        """Maps every color id to the size of its class."""
        ids, counts = np.unique(self.colors, return_counts=True)
        return dict(zip(ids.tolist(), counts.tolist()))

    def partition(self):
        """The partition of V^k induced by the coloring, independent of the
        actual ids."""
        return frozenset(frozenset(ts) for ts in self.classes.values())

    def refines(self, other):
        """True iff every class of self lies inside a class of `other`."""
        if self.colors.shape != other.colors.shape:
            raise ValueError("Colorings of different tuple sets.")
        pairs = np.stack([self.colors.ravel(), other.colors.ravel()], axis=1)
        if not len(pairs):
            return True
        return len(np.unique(pairs, axis=0)) == self.num_classes

    def is_discrete(self):
        return self.num_classes == self.colors.size

    def to_json(self):
        """Serializes the coloring as
        {"k": k, "round": r, "classes": {id: [[v, ...], ...]}} with
        ascending ids and sorted tuples.  For k = 1 a "discrete" flag is
        added."""
        report = OrderedDict([('k', self.k), ('round', self.round)])
        report['classes'] = OrderedDict(
            (str(c), [list(map(int, t)) for t in ts])
            for c, ts in self.classes.items())
        if self.k == 1:
            report['discrete'] = self.is_discrete()
        return json.dumps(report)

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return (self.k == other.k and self.round == other.round and
                np.array_equal(self.colors, other.colors))

    def __ne__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'Coloring(k={}, n={}, round={}, classes={})'.format(
            self.k, self.n, self.round, self.num_classes)


# Initial colors ##############################################################

def _initial_rows(g, k):
    """One row per k-tuple (in np.ndindex order) describing its lifted arc
    color and the ordered isomorphism type of the colored subgraph it
    induces."""
    n = g.n
    arc = g.arc_color_matrix()
    idx = np.indices((n,) * k).reshape(k, -1)
    if k == 1:
        return arc[idx[0], idx[0]].reshape(-1, 1)

    pair = arc[idx[0], idx[1]]
    columns = [np.where(pair >= 0, pair, 1), np.where(pair >= 0, 0, 1)]
    adjacency = g.adjacency_matrix()
    for i in range(k):
        for j in range(i + 1, k):
            columns.append(np.where(idx[i] == idx[j], 2,
                                    adjacency[idx[i], idx[j]]))
    for i in range(k):
        for j in range(k):
            columns.append(arc[idx[i], idx[j]])
    return np.stack(columns, axis=1)


def _joint_ids(blocks):
    """Numbers the distinct rows of all blocks 0, 1, ... in lexicographic
    order and returns one id vector per block."""
    width = max([b.shape[1] for b in blocks] + [1])
    padded = [np.pad(b, ((0, 0), (0, width - b.shape[1])),
                     constant_values=-1) for b in blocks]
    stacked = np.concatenate(padded, axis=0)
    if not len(stacked):
        return [np.zeros(0, dtype=np.int64) for _ in blocks]
    _, inverse = np.unique(stacked, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1).astype(np.int64)
    bounds = np.cumsum([len(b) for b in blocks])[:-1]
    return np.split(inverse, bounds)


def _initial_arrays(gs, k):
    ids = _joint_ids([_initial_rows(g, k) for g in gs])
    return [i.reshape((g.n,) * k) for g, i in zip(gs, ids)]


def initial_coloring(g, k):
    """Returns the round-0 coloring of the k-tuples of g.

    Two tuples get equal colors iff their lifted arc colors agree and the
    colored subgraphs they induce are isomorphic via position j -> j.  The
    lifted color of (v1, ..., vk) is (lambda(v1, v2), 0) if (v1, v2) is a
    vertex or an edge and (1, 1) otherwise.

    EXAMPLE
    -------
    >>> from wlplanar import ColoredGraph
    >>> initial_coloring(ColoredGraph(3, [(0, 1), (1, 2), (0, 2)]), 2)
    Coloring(k=2, n=3, round=0, classes=2)
    """
    _check_k(k)
    return Coloring(k, _initial_arrays([g], k)[0], 0)


# Refinement ##################################################################

def _neighbor_arcs(g):
    return [[(w, g.arc_color(v, w), g.arc_color(w, v))
             for w in g.neighbors(v)] for v in range(g.n)]


def _refine_vertices(arcs, arrays):
    signatures = []
    for nbrs, colors in zip(arcs, arrays):
        col = colors.tolist()
        signatures.append([
            (col[v], tuple(sorted((a, b, col[w]) for w, a, b in nbrs[v])))
            for v in range(len(col))])
    order = sorted(set(s for block in signatures for s in block))
    index = dict((s, i) for i, s in enumerate(order))
    return [np.array([index[s] for s in block], dtype=np.int64)
            for block in signatures]


def _substitution_vectors(colors, k):
    """For every tuple t and vertex w the k-vector of colors of the tuples
    t[w/1], ..., t[w/k]; shape (n^k * n, k) with w varying fastest."""
    n = colors.shape[0]
    shape = (n,) * (k + 1)
    parts = [np.broadcast_to(np.expand_dims(np.moveaxis(colors, j, -1), j),
                             shape) for j in range(k)]
    return np.stack(parts, axis=-1).reshape(-1, k)


def _refine_tuples(arrays, k):
    ns = [a.shape[0] for a in arrays]
    vector_ids = _joint_ids([_substitution_vectors(a, k) for a in arrays])
    widest = max(ns + [0])
    rows = []
    for a, n, ids in zip(arrays, ns, vector_ids):
        multisets = np.sort(ids.reshape(n ** k, n), axis=1)
        padding = np.full((n ** k, widest - n), -1, dtype=np.int64)
        rows.append(np.concatenate(
            [a.reshape(-1, 1), np.full((n ** k, 1), n, dtype=np.int64),
             multisets, padding], axis=1))
    return [i.reshape(a.shape) for a, i in zip(arrays, _joint_ids(rows))]


def _joint_class_count(arrays):
    if not arrays:
        return 0
    return len(np.unique(np.concatenate([a.ravel() for a in arrays])))


def refinement_rounds(gs, k, initial=None):
    """Runs k-WL jointly on the graphs `gs` and yields, for every round
    i = 0, 1, ..., the list of their round-i colorings.  The last list
    yielded is the stable one: refinement stops as soon as a round does
    not increase the number of classes of the joint partition.

    Args:
        gs (list): ColoredGraph objects.
        k (int): dimension in {1, 2, 3}.
        initial (list): optional starting colorings, one per graph;
            default is the initial coloring.
    """
    _check_k(k)
    gs = list(gs)
    if initial is None:
        arrays = _initial_arrays(gs, k)
    else:
        if len(initial) != len(gs) or any(c.k != k for c in initial):
            raise ValueError("Expected one {}-dimensional coloring per "
                             "graph.".format(k))
        arrays = [c.colors for c in initial]
    arcs = [_neighbor_arcs(g) for g in gs] if k == 1 else None

    i = 0
    count = _joint_class_count(arrays)
    yield [Coloring(k, a, i) for a in arrays]
    while True:
        if k == 1:
            refined = _refine_vertices(arcs, arrays)
        else:
            refined = _refine_tuples(arrays, k)
        refined_count = _joint_class_count(refined)
        if refined_count == count:
            logger.debug('%s-WL on %s graph(s) stable after %s round(s), '
                         '%s classes', k, len(gs), i, count)
            return
        i += 1
        arrays, count = refined, refined_count
        yield [Coloring(k, a, i) for a in arrays]


def refine_to_stable(g, k, initial):
    """Refines `initial` on g until stable and returns the stable
    coloring."""
    for colorings in refinement_rounds([g], k, [initial]):
        pass
    return colorings[0]


def joint_stable(gs, k):
    """Returns the stable k-WL colorings of the graphs `gs`, computed in one
    joint run so that equal ids mean equal colors across the graphs."""
    for colorings in refinement_rounds(gs, k):
        pass
    return colorings


def stable_coloring(g, k):
    return joint_stable([g], k)[0]


def distinguishes(g, h, k):
    """True iff k-WL distinguishes g and h: some stable color occurs a
    different number of times in the two graphs.

    EXAMPLE
    -------
    >>> from wlplanar import cycle_graph, disjoint_union
    >>> c6, two_triangles = cycle_graph(6), disjoint_union(cycle_graph(3),
    ...                                                   cycle_graph(3))
    >>> distinguishes(c6, two_triangles, 1), distinguishes(c6, two_triangles, 2)
    (False, True)
    """
    cg, ch = joint_stable([g, h], k)
    return cg.histogram() != ch.histogram()


def stable_histograms(gs, k):
    """Stable color histograms of the graphs `gs` from one joint run, as
    hashable sorted tuples; two graphs are distinguished by k-WL iff their
    histograms differ."""
    return [tuple(sorted(c.histogram().items())) for c in joint_stable(gs, k)]


# Individualization and discreteness ##########################################

def individualize(g, vs):
    """Gives the i-th vertex of `vs` the fresh color i (1-based) and every
    other vertex color 0, composed with the existing vertex colors: the new
    color of v is old(v) * (t + 1) + i(v) for t = len(vs).  Arc colors of
    edges are kept.  An empty list returns g itself."""
    vs = [int(v) for v in vs]
    if len(set(vs)) != len(vs):
        raise ValueError("Cannot individualize a vertex twice: {}".format(vs))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError("Vertex {} is not in the graph.".format(v))
    if not vs:
        return g
    t = len(vs)
    position = dict((v, i + 1) for i, v in enumerate(vs))
    colors = dict(g.arc_colors) if g.arc_colors is not None else {}
    for v in range(g.n):
        colors[(v, v)] = g.vertex_color(v) * (t + 1) + position.get(v, 0)
    return g.with_arc_colors(colors)


def is_discrete(c):
    """True iff the 1-dimensional coloring `c` has only singleton
    classes."""
    if c.k != 1:
        raise ValueError("is_discrete is defined for vertex colorings "
                         "(k = 1), not k = {}.".format(c.k))
    return c.is_discrete()


def individualized_is_discrete(g, vs):
    """True iff 1-WL is discrete on g after individualizing `vs`."""
    return stable_coloring(individualize(g, vs), 1).is_discrete()


# Walks and orbits ############################################################

def walk_counts(g, i):
    """Returns the n x n matrix W with W[u, v] the number of walks of length
    exactly i from u to v.  Entries are Python ints, so long walks do not
    overflow."""
    if i < 0:
        raise ValueError("Walk length must be non-negative.")
    a = g.adjacency_matrix().astype(object)
    w = np.identity(g.n, dtype=np.int64).astype(object)
    for _ in range(i):
        w = w.dot(a)
    return w


def determines_orbits_check(g, k):
    """True iff the vertex classes of the stable k-WL coloring of g are
    exactly the orbits of its automorphism group."""
    from .oracle import orbits
    classes = set(frozenset(c) for c in stable_coloring(g, k)
                  .vertex_partition())
    return classes == set(frozenset(o) for o in orbits(g))
