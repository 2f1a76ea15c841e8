"""This submodule contains the barycentric (Tutte) iteration on 3-connected
planar graphs and its link to color refinement: three vertices of a face
are pinned at (0,0), (1,0) and (0,1), every other vertex starts at (1,1)
and is moved to the average of its neighbors, round after round.  Vertices
that end up at different positions are already told apart by 1-WL after
individualizing the pinned face, round for round."""

# External dependencies
from __future__ import division, absolute_import, print_function
import logging
import warnings
import numpy as np
from scipy.sparse import lil_matrix
from scipy.sparse.linalg import spsolve
from scipy.spatial.distance import pdist

# Internal dependencies
from .constants import (TUTTE_EPS, TUTTE_MAX_ITER, INJECTIVITY_TOL,
                        POSITION_TOL, PINNED_COORDINATES, FREE_START)
from .graph import faces, is_k_connected
from .wl import individualize, refinement_rounds

logger = logging.getLogger(__name__)


class TutteLinkError(RuntimeError):
    """Two vertices at different positions shared a 1-WL color."""


class EmbeddingState(object):
    """Positions of the vertices after `iteration` rounds.

    Attributes:
        positions (numpy.ndarray): (n, 2) array, row v holds v's position.
        fixed (tuple): the three pinned vertices.
        iteration (int): number of rounds performed.
        converged (bool): whether the last round moved no coordinate by
            eps or more.
        movements (list): the largest coordinate movement of every round.
    """

    def __init__(self, positions, fixed, iteration=0, converged=False,
                 movements=None):
        self.positions = positions
        self.fixed = tuple(fixed)
        self.iteration = iteration
        self.converged = converged
        self.movements = movements if movements is not None else []

    def position(self, v):
        return tuple(self.positions[v])

    def min_distance(self):
        """Smallest distance between two vertices (inf for n < 2)."""
        if len(self.positions) < 2:
            return np.inf
        return pdist(self.positions).min()

    def is_injective(self, tol=INJECTIVITY_TOL):
        return self.min_distance() > tol

    def __repr__(self):
        return 'EmbeddingState(n={}, iteration={}, converged={})'.format(
            len(self.positions), self.iteration, self.converged)


def check_face_triple(g, face3):
    """Raises ValueError unless g is 3-connected with a rotation and the
    three distinct vertices face3 lie on a common face."""
    face3 = [int(v) for v in face3]
    if len(face3) != 3 or len(set(face3)) != 3:
        raise ValueError("Expected three distinct vertices, got {}."
                         "".format(face3))
    if not is_k_connected(g, 3):
        raise ValueError("The Tutte iteration needs a 3-connected graph.")
    if not any(set(face3) <= set(f) for f in faces(g)):
        raise ValueError("Vertices {} do not lie on a common face."
                         "".format(face3))
    return face3


def tutte_rounds(g, face3, eps=TUTTE_EPS, max_iter=TUTTE_MAX_ITER):
    """Yields (i, positions, movement) for i = 0, 1, ...: the positions
    after round i and the largest coordinate change of that round (inf for
    i = 0).  Stops after the first round moving less than eps, or after
    max_iter rounds.  The yielded arrays are fresh copies."""
    if not eps > 0:
        raise ValueError("eps must be positive, not {!r}.".format(eps))
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1.")
    face3 = check_face_triple(g, face3)

    adjacency = g.adjacency_matrix().astype(float)
    degrees = adjacency.sum(axis=1)[:, None]
    pinned = np.array(PINNED_COORDINATES)
    positions = np.tile(np.array(FREE_START, dtype=float), (g.n, 1))
    positions[face3] = pinned
    yield 0, positions.copy(), np.inf

    for i in range(1, max_iter + 1):
        updated = adjacency.dot(positions) / degrees
        updated[face3] = pinned
        movement = np.abs(updated - positions).max()
        positions = updated
        yield i, positions.copy(), movement
        if movement < eps:
            return


def tutte_iterate(g, face3, eps=TUTTE_EPS, max_iter=TUTTE_MAX_ITER):
    """Runs the barycentric iteration with face3 pinned at (0,0), (1,0),
    (0,1) and all other vertices starting at (1,1).

    Args:
        g (ColoredGraph): 3-connected, with a planar rotation.
        face3: three vertices of a common face.
        eps (float): stop once no coordinate moves by eps or more.
        max_iter (int): round limit.  Running out of rounds is reported by
            a warning and `converged = False`, not by an exception.

    Returns:
        EmbeddingState

    EXAMPLE
    -------
    >>> from wlplanar import tetrahedron
    >>> state = tutte_iterate(tetrahedron(), [0, 1, 2])
    >>> [round(x, 9) for x in state.position(3)]
    [0.333333333, 0.333333333]
    """
    movements = []
    for i, positions, movement in tutte_rounds(g, face3, eps, max_iter):
        if i:
            movements.append(movement)
    state = EmbeddingState(positions, face3, i, movements[-1] < eps
                           if movements else False, movements)
    if not state.converged:
        warnings.warn("Tutte iteration on {!r} did not converge within {} "
                      "rounds (last movement {:.3g})."
                      "".format(g, max_iter, movements[-1]))
    _log_contraction(g, movements)
    return state


def _log_contraction(g, movements):
    # transient: the first n rounds
    late = movements[g.n:]
    increases = sum(1 for a, b in zip(late, late[1:]) if b > a)
    if increases:
        logger.info('movement grew in %s late round(s) on %r', increases, g)


def tutte_solve(g, face3):
    """Solves the fixed point of the iteration directly: the sparse linear
    system d(v) x_v - sum of free neighbors = sum of pinned neighbors, for
    both coordinates.  Used to cross-check tutte_iterate()."""
    face3 = check_face_triple(g, face3)
    pinned = dict(zip(face3, PINNED_COORDINATES))
    free = [v for v in range(g.n) if v not in pinned]
    index = dict((v, i) for i, v in enumerate(free))

    laplacian = lil_matrix((len(free), len(free)))
    rhs = np.zeros((len(free), 2))
    for v in free:
        laplacian[index[v], index[v]] = g.degree(v)
        for w in g.neighbors(v):
            if w in pinned:
                rhs[index[v]] += pinned[w]
            else:
                laplacian[index[v], index[w]] -= 1

    positions = np.zeros((g.n, 2))
    for v, p in pinned.items():
        positions[v] = p
    if free:
        solution = spsolve(laplacian.tocsr(), rhs)
        positions[free] = np.asarray(solution).reshape(len(free), 2)
    return positions


def discreteness_link_check(g, face3, eps=TUTTE_EPS, max_iter=TUTTE_MAX_ITER,
                            tol=POSITION_TOL):
    """Returns whether 1-WL is discrete on g after individualizing face3.

    Along the way it checks, for every round i of the Tutte iteration, that
    vertices whose positions differ by more than `tol` have different
    round-i 1-WL colors; rounds after 1-WL has stabilized use the stable
    coloring.  A violation raises TutteLinkError.
    """
    face3 = check_face_triple(g, face3)
    rounds = [cs[0].colors for cs in
              refinement_rounds([individualize(g, face3)], 1)]
    for i, positions, _ in tutte_rounds(g, face3, eps, max_iter):
        colors = rounds[min(i, len(rounds) - 1)]
        for c in np.unique(colors):
            members = np.flatnonzero(colors == c)
            spread = np.ptp(positions[members], axis=0).max()
            if spread > tol:
                raise TutteLinkError(
                    "Round {} on {!r} with {} pinned: vertices {} share a "
                    "1-WL color but lie {:.3g} apart."
                    "".format(i, g, face3, members.tolist(), spread))
    stable = rounds[-1]
    return len(np.unique(stable)) == g.n
