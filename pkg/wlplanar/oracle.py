"""This submodule contains the ground-truth tools every refinement result is
checked against: isomorphism tests, automorphism groups, orbits, fixing
numbers and canonical forms of small colored graphs.

All of them walk an individualization-refinement search tree.  A node of
the tree individualizes a sequence of vertices and refines with 1-WL
(arc colors included); a child individualizes one more vertex of the first
smallest non-singleton class.  Leaves are discrete colorings.  Refinement
only prunes: every candidate mapping is checked edge by edge and color by
color before it is returned, so the results do not depend on 1-WL being
strong."""

# External dependencies
from __future__ import division, absolute_import, print_function
from itertools import combinations
import logging
import os
import numpy as np

# Internal dependencies
from .constants import ORACLE_LIMIT, ORACLE_LIMIT_ENV
from .wl import individualize, joint_stable, stable_coloring

logger = logging.getLogger(__name__)


class OracleLimitError(ValueError):
    """The input is larger than the brute-force tools accept."""


def oracle_limit():
    """The current size cap of the oracle: the value of the environment
    variable WLPLANAR_ORACLE_LIMIT if set, ORACLE_LIMIT otherwise."""
    value = os.environ.get(ORACLE_LIMIT_ENV)
    if value is None or not value.strip():
        return ORACLE_LIMIT
    try:
        limit = int(value)
    except ValueError:
        raise ValueError("{} must be an integer, found {!r}."
                         "".format(ORACLE_LIMIT_ENV, value))
    if limit < 1:
        raise ValueError("{} must be positive.".format(ORACLE_LIMIT_ENV))
    return limit


def _check_size(*gs):
    limit = oracle_limit()
    for g in gs:
        if g.n > limit:
            raise OracleLimitError(
                "{!r} has {} vertices; the oracle accepts at most {} (set {} "
                "to change this).".format(g, g.n, limit, ORACLE_LIMIT_ENV))


def is_isomorphism(g, h, perm):
    """True iff v -> perm[v] maps g onto h, preserving edges and every arc
    color."""
    if g.n != h.n or g.m != h.m or sorted(perm) != list(range(g.n)):
        return False
    for u, v in g.arcs():
        a, b = perm[u], perm[v]
        if not h.in_arc_domain(a, b):
            return False
        if g.arc_color(u, v) != h.arc_color(a, b):
            return False
    return True


def _target_cell(colors):
    """Vertices of the first smallest non-singleton color class."""
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    size, color = min((len(vs), c) for c, vs in cells.items() if len(vs) > 1)
    return cells[color]


def _search(g, h, ind_g, ind_h):
    """Yields every isomorphism from g to h that maps ind_g to ind_h
    position by position."""
    cg, ch = joint_stable([individualize(g, ind_g),
                           individualize(h, ind_h)], 1)
    if cg.histogram() != ch.histogram():
        return
    colors_g, colors_h = cg.colors.tolist(), ch.colors.tolist()
    if cg.is_discrete():
        where = dict((c, w) for w, c in enumerate(colors_h))
        perm = tuple(where[c] for c in colors_g)
        if is_isomorphism(g, h, perm):
            yield perm
        return
    cell = _target_cell(colors_g)
    v = cell[0]
    for w in range(h.n):
        if colors_h[w] == colors_g[v]:
            for perm in _search(g, h, ind_g + [v], ind_h + [w]):
                yield perm


def isomorphic(g, h):
    """Returns an isomorphism from g to h as a tuple perm (v -> perm[v]), or
    None if the graphs are not isomorphic.  Arc colors, vertex colors
    included, must be preserved.

    EXAMPLE
    -------
    >>> from wlplanar import cycle_graph
    >>> isomorphic(cycle_graph(4), cycle_graph(4).relabeled([2, 0, 3, 1])) is None
    False
    """
    _check_size(g, h)
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    return next(_search(g, h, [], []), None)


def automorphisms(g):
    """Returns every automorphism of g, as sorted tuples; the identity comes
    first."""
    _check_size(g)
    auts = sorted(_search(g, g, [], []))
    logger.debug('%r has %s automorphisms', g, len(auts))
    return auts


def pointwise_stabilizer(auts, fixed):
    """The automorphisms in `auts` fixing every vertex of `fixed`."""
    return [a for a in auts if all(a[v] == v for v in fixed)]


def orbits(g, auts=None):
    """The orbits of the automorphism group of g, each sorted, ordered by
    their smallest vertex."""
    if auts is None:
        auts = automorphisms(g)
    seen, result = set(), []
    for v in range(g.n):
        if v not in seen:
            orbit = sorted(set(a[v] for a in auts))
            seen.update(orbit)
            result.append(orbit)
    return result


def fixing_number(g, auts=None):
    """Returns (f, S): the fixing number f of g and a witness S, the
    lexicographically first vertex set of size f whose pointwise
    stabilizer is trivial."""
    if auts is None:
        auts = automorphisms(g)
    for size in range(g.n + 1):
        for fixed in combinations(range(g.n), size):
            if len(pointwise_stabilizer(auts, fixed)) == 1:
                return size, list(fixed)
    raise AssertionError("fixing all vertices always leaves the identity")


# Canonical forms #############################################################

def _leaves(g, ind):
    coloring = stable_coloring(individualize(g, ind), 1)
    colors = coloring.colors.tolist()
    if coloring.is_discrete():
        yield colors
        return
    for v in _target_cell(colors):
        for leaf in _leaves(g, ind + [v]):
            yield leaf


def canonical_form(g, individualized=(), limit=None):
    """Returns a hashable canonical form of g with the vertex sequence
    `individualized` distinguished.  Two graphs get equal forms iff some
    isomorphism between them preserves all arc colors and maps the i-th
    individualized vertex of one to the i-th of the other.

    The form is the least encoding over the leaves of the search tree,
    where a leaf relabels the vertices by the rank of their refined color
    and encodes the arc colors (-1 for non-edges) in that order.

    Args:
        g (ColoredGraph): the graph.
        individualized (sequence): distinct vertices of g.
        limit (int): optional size cap; larger graphs raise
            OracleLimitError.
    """
    individualized = [int(v) for v in individualized]
    if limit is not None and g.n > limit:
        raise OracleLimitError("Canonical forms are computed for at most {} "
                               "vertices; got {}.".format(limit, g.n))
    arc = g.arc_color_matrix()
    best = None
    for colors in _leaves(g, individualized):
        order = np.argsort(colors)
        label = np.empty(g.n, dtype=np.int64)
        label[order] = np.arange(g.n)
        encoding = (g.n, tuple(int(label[v]) for v in individualized),
                    tuple(map(tuple, arc[np.ix_(order, order)].tolist())))
        if best is None or encoding < best:
            best = encoding
    return best
