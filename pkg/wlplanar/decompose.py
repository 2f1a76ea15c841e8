"""This submodule contains the decomposition of a graph along its minimum
separators: the pairs (S, K) of a minimum separator S with a component K
of G - S, the minimal such pairs, the torso graph G_top^S hanging off a
separator and the reduced graph G_bot left after all minimal components
are cut away.  The reduced graph carries an arc coloring that records, for
every vertex and arc, the isomorphism type of the torso below it, so that
two graphs are isomorphic iff their reduced graphs are.

Isomorphism types are canonical forms from wlplanar.oracle, interned in a
DecompositionContext; reduced graphs built with one context are directly
comparable, those of different contexts are not."""

# External dependencies
from __future__ import division, absolute_import, print_function
from collections import namedtuple
import logging

# Internal dependencies
from .constants import ISOTYPE_LIMIT
from .graph import ColoredGraph, is_k_connected, min_separators
from .misctools import ColorPalette
from .oracle import canonical_form

logger = logging.getLogger(__name__)


class SeparatorPair(namedtuple('SeparatorPair', 'separator component')):
    """A minimum separator S together with the vertex set K of one component
    of G - S.  Both are frozensets."""
    __slots__ = ()

    def sort_key(self):
        return sorted(self.separator), sorted(self.component)

    def __repr__(self):
        return 'SeparatorPair({}, {})'.format(sorted(self.separator),
                                              sorted(self.component))


class TorsoGraph(object):
    """The torso G_top^S of a vertex set S.

    Attributes:
        base (ColoredGraph): the torso, relabeled so that local vertex i is
            the original vertex vertices[i]; arc colors are the encoded
            torso coloring.
        separator (frozenset): S, in original labels.
        vertices (list): the original labels of the torso vertices, sorted.
    """

    def __init__(self, base, separator, vertices):
        self.base = base
        self.separator = frozenset(separator)
        self.vertices = list(vertices)
        self._local = dict((v, i) for i, v in enumerate(self.vertices))

    def local(self, v):
        """The torso label of the original vertex v."""
        return self._local[v]

    def __repr__(self):
        return 'TorsoGraph(S={}, vertices={})'.format(sorted(self.separator),
                                                      self.vertices)


class ReducedGraph(object):
    """The reduced graph G_bot.

    Attributes:
        base (ColoredGraph): G_bot relabeled to 0..len(vertices)-1, colored
            with ids of `context.colors`.
        vertices (list): the original labels of V_bot, sorted.
        context (DecompositionContext): decodes the colors.
    """

    def __init__(self, base, vertices, context):
        self.base = base
        self.vertices = list(vertices)
        self.context = context

    def decoded_color(self, u, v):
        """The structured color (marker, lambda or 0, isotype id) of the arc
        (u, v), in reduced-graph labels."""
        return self.context.colors.value(self.base.arc_color(u, v))

    def __repr__(self):
        return 'ReducedGraph(vertices={}, m={})'.format(self.vertices,
                                                        self.base.m)


class DecompositionContext(object):
    """Interning tables for one run of reductions.

    Attributes:
        isotypes (ColorPalette): canonical forms of individualized torsos.
        colors (ColorPalette): the reduced-graph arc colors built from them.
        isotype_limit (int): the largest torso that will be canonized.
    """

    def __init__(self, isotype_limit=ISOTYPE_LIMIT):
        self.isotypes = ColorPalette()
        self.colors = ColorPalette()
        self.isotype_limit = isotype_limit

    def isotype(self, g, individualized):
        return isotype(g, individualized, self.isotypes, self.isotype_limit)


# Separator pairs #############################################################

def _check_decomposable(g):
    if not g.is_connected():
        raise ValueError("Separator pairs are defined for connected graphs.")
    if g.is_complete():
        raise ValueError("A complete graph has no separator.")


def p_set(g):
    """Returns all pairs (S, K) with S a minimum separator of g and K the
    vertex set of a component of g - S, sorted by (S, K)."""
    _check_decomposable(g)
    pairs = [SeparatorPair(s, k) for s in min_separators(g)
             for k in g.components(s)]
    return sorted(pairs, key=SeparatorPair.sort_key)


def p0_set(g, pairs=None):
    """Returns the minimal elements of p_set(g) with respect to inclusion
    of the components."""
    if pairs is None:
        pairs = p_set(g)
    return [p for p in pairs
            if not any(q.component < p.component for q in pairs)]


def minimal_pairs_by_separators(g, pairs=None):
    """The pairs (S, K) of p_set(g) such that no minimum separator meets K.
    For graphs of large enough minimum degree this agrees with p0_set."""
    if pairs is None:
        pairs = p_set(g)
    separators = set(p.separator for p in pairs)
    return [p for p in pairs
            if not any(s & p.component for s in separators)]


def minimal_pairs_meet_in_separators(g, p0=None):
    """True iff any two distinct minimal pairs (S, K), (S', K') satisfy
    (K | S) & (K' | S') == S & S'."""
    if p0 is None:
        p0 = p0_set(g)
    for i, p in enumerate(p0):
        for q in p0[i + 1:]:
            if ((p.component | p.separator) & (q.component | q.separator)
                    != p.separator & q.separator):
                return False
    return True


def bottom_vertices(g):
    """The vertex set V_bot: all vertices outside the components of minimal
    pairs.  Complete graphs keep every vertex."""
    if g.is_complete():
        return list(range(g.n))
    removed = set()
    for p in p0_set(g):
        removed |= p.component
    return [v for v in range(g.n) if v not in removed]


def min_separator_vertices(g):
    """The union of all minimum separators of g."""
    if g.is_complete():
        return set()
    return set().union(*min_separators(g))


# Torsos ######################################################################

def lift_vertex_colors(g):
    """Turns a vertex coloring into the arc coloring lambda(u, v) = color(u)
    used for torsos of vertex-colored graphs."""
    return g.with_arc_colors(dict(((u, v), g.vertex_color(u))
                                  for u, v in g.arcs()))


def _torso_color(g, separator, u, v):
    """The torso color of (u, v), packed into one integer as 3 * lambda +
    tag: tag 0 for added separator edges, 1 for original separator edges,
    2 otherwise (diagonal entries included)."""
    if u != v and u in separator and v in separator:
        if not g.has_edge(u, v):
            return 0
        return 3 * g.arc_color(u, v) + 1
    return 3 * g.arc_color(u, v) + 2


def g_top(g, separator, p0=None, component=None, vertex_colored=False):
    """Builds the torso G_top^S of the vertex set `separator`.

    The torso lives on S together with every K for which (S, K) is a
    minimal pair; if S is not the separator of a minimal pair it is just
    S.  Its edges are those of g inside this set plus all pairs of S.
    With `component` given, the torso is restricted to S | component
    (the graph G_top^(S, K)).

    Args:
        g (ColoredGraph): a connected graph.
        separator: the vertex set S.
        p0 (list): the minimal pairs of g, if already known.
        component: optional K of a minimal pair (S, K).
        vertex_colored (bool): treat g as vertex-colored and lift its vertex
            colors to arcs first.

    Returns:
        TorsoGraph
    """
    separator = frozenset(separator)
    if vertex_colored:
        g = lift_vertex_colors(g)
    if p0 is None:
        p0 = p0_set(g) if not g.is_complete() else []
    kept = set(separator)
    if component is not None:
        component = frozenset(component)
        if SeparatorPair(separator, component) not in p0:
            raise ValueError("({}, {}) is not a minimal pair."
                             "".format(sorted(separator), sorted(component)))
        kept |= component
    else:
        for p in p0:
            if p.separator == separator:
                kept |= p.component
    vertices = sorted(kept)
    index = dict((v, i) for i, v in enumerate(vertices))

    edges = set((index[u], index[v]) for u, v in g.edges
                if u in kept and v in kept)
    s = sorted(separator)
    for i, a in enumerate(s):
        for b in s[i + 1:]:
            edges.add((index[a], index[b]))

    colors = {}
    for u in vertices:
        colors[(index[u], index[u])] = _torso_color(g, separator, u, u)
        for v in vertices:
            if u != v and (g.has_edge(u, v) or
                           (u in separator and v in separator)):
                colors[(index[u], index[v])] = _torso_color(g, separator,
                                                            u, v)
    base = ColoredGraph(len(vertices), sorted(edges), colors)
    return TorsoGraph(base, separator, vertices)


def isotype(g, individualized, palette=None, limit=ISOTYPE_LIMIT):
    """The isomorphism type of g with the vertices `individualized`
    distinguished in order.  Returns the canonical form, or its id in
    `palette` when one is given.  Equal results mean an isomorphism maps
    the i-th individualized vertex of one graph to the i-th of the other.

    Raises OracleLimitError for graphs with more than `limit` vertices."""
    form = canonical_form(g, individualized, limit=limit)
    if palette is None:
        return form
    return palette.intern(form)


# Reduced graphs ##############################################################

def g_bot(g, context=None, vertex_colored=False):
    """Builds the reduced graph G_bot of a connected, not 3-connected g.

    V_bot drops the components of all minimal pairs.  In the 2-connected
    case the separators of the minimal pairs become cliques; otherwise
    G_bot is the induced subgraph on V_bot.  The arc (v1, v2) of G_bot
    (v1 == v2 allowed) is colored

        ('bot', lambda(v1, v2) or 0, isotype of G_top^{v1, v2}
                                     individualized at (v1, v2))

    where 0 is used for separator pairs that are not edges of g.

    Raises ValueError for 3-connected or complete inputs and for
    2-connected inputs of minimum degree below 3.
    """
    if context is None:
        context = DecompositionContext()
    if vertex_colored:
        g = lift_vertex_colors(g)
    _check_decomposable(g)
    if is_k_connected(g, 3):
        raise ValueError("g_bot needs a graph that is not 3-connected.")
    two_connected = is_k_connected(g, 2)
    if two_connected and min(g.degrees()) < 3:
        raise ValueError("g_bot on a 2-connected graph needs minimum "
                         "degree at least 3.")

    p0 = p0_set(g)
    kept = set(range(g.n))
    for p in p0:
        kept -= p.component
    vertices = sorted(kept)
    index = dict((v, i) for i, v in enumerate(vertices))

    edges = set((index[u], index[v]) for u, v in g.edges
                if u in kept and v in kept)
    if two_connected:
        for p in p0:
            a, b = sorted(p.separator)
            edges.add((index[a], index[b]))

    def color(u, v):
        torso = g_top(g, {u, v}, p0)
        ind = [torso.local(u)] if u == v else [torso.local(u),
                                               torso.local(v)]
        iso = context.isotype(torso.base, ind)
        value = g.arc_color(u, v) if g.in_arc_domain(u, v) else 0
        return context.colors.intern(('bot', value, iso))

    colors = {}
    for v in vertices:
        colors[(index[v], index[v])] = color(v, v)
    for a, b in edges:
        u, v = vertices[a], vertices[b]
        colors[(a, b)] = color(u, v)
        colors[(b, a)] = color(v, u)

    logger.debug('reduced %r to %s vertices (%s minimal pairs)', g,
                 len(vertices), len(p0))
    base = ColoredGraph(len(vertices), sorted(edges), colors, name=g.name)
    return ReducedGraph(base, vertices, context)


def bottom_exclusion_witnessed(g, x, separator_vertices=None):
    """Decides x not in V_bot by the vertex-deletion test: there is a vertex
    u of a minimum separator with x outside V_bot of G - u, such that the
    unique block of G - u containing x has exactly one vertex lying in a
    minimum separator of g.  Meant for 2-connected, not 3-connected g of
    minimum degree 3, where it agrees with `x not in bottom_vertices(g)`.
    """
    if separator_vertices is None:
        separator_vertices = min_separator_vertices(g)
    for u in sorted(separator_vertices):
        if u == x:
            continue
        rest = [v for v in range(g.n) if v != u]
        h = g.without_vertices([u])
        local = rest.index(x)
        if local in bottom_vertices(h):
            continue
        blocks = [b for b in h.blocks() if local in b]
        if len(blocks) != 1:
            continue
        block = set(rest[v] for v in blocks[0])
        if len(block & separator_vertices) == 1:
            return True
    return False
