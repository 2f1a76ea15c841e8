"""This submodule contains miscellaneous tools that are used internally, but
aren't specific to graphs or to the refinement algorithms."""

# External dependencies:
from __future__ import division, absolute_import, print_function


class ColorPalette(object):
    """Interns structured color values as small non-negative integers.

    Operations that build new colors out of old ones (smoothing degree-2
    paths, the reduced graph of a decomposition) produce tuples.  Graph
    files and the refinement engine want integers, so the tuples are
    interned here.  Two values receive the same id if and only if they
    are equal, and ids are handed out in order of first appearance, so
    a palette shared by several calls keeps their colors comparable.

    EXAMPLE
    -------
    >>> palette = ColorPalette()
    >>> palette.intern(('edge', 0))
    0
    >>> palette.intern(('vertex', 3))
    1
    >>> palette.intern(('edge', 0))
    0
    >>> palette.value(1)
    ('vertex', 3)
    """

    def __init__(self):
        self._ids = {}
        self._values = []

    def intern(self, value):
        try:
            return self._ids[value]
        except KeyError:
            self._ids[value] = len(self._values)
            self._values.append(value)
            return self._ids[value]

    def value(self, color_id):
        """Returns the structured value interned under `color_id`."""
        return self._values[color_id]

    def __contains__(self, value):
        return value in self._ids

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        return 'ColorPalette(%s colors)' % len(self)


def parse_vertex_list(text):
    """Converts a comma separated string like '0,6' into a list of ints.

    An empty or missing string gives the empty list."""
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(',') if tok.strip()]
    except ValueError:
        raise ValueError("Expected a comma separated list of vertices, "
                         "found {!r}.".format(text))
