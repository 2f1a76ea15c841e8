"""This submodule: tools for drawing straight-line embeddings of graphs
(e.g. converged Tutte embeddings) as svg files.
"""

# External dependencies:
from __future__ import division, absolute_import, print_function
from math import ceil
from xml.dom.minidom import parse as md_xml_parse
from svgwrite import Drawing
import numpy as np

# fill colors handed out to color classes, in order
class_colors = ['red', 'blue', 'green', 'orange', 'purple', 'cyan',
                'magenta', 'brown', 'lime', 'pink', 'turquoise', 'salmon',
                'tan', 'violet', 'yellow', 'darkblue', 'aqua', 'azure']

# stroke width and node radius relative to the larger side of the drawing
_default_relative_stroke_width = 0.004
_default_relative_node_radius = 0.012
_default_font_size = 0.03


def classes2colors(class_of):
    """Maps a list of class ids (one per vertex) to fill colors; classes are
    numbered in order of first appearance."""
    order = {}
    for c in class_of:
        order.setdefault(c, len(order))
    return [class_colors[order[c] % len(class_colors)] for c in class_of]


def embedding_bounding_box(positions):
    """returns (xmin, xmax, ymin, ymax) of a list of 2D positions."""
    pts = np.asarray(positions, dtype=float).reshape(-1, 2)
    if not len(pts):
        return 0., 1., 0., 1.
    return pts[:, 0].min(), pts[:, 0].max(), pts[:, 1].min(), pts[:, 1].max()


def embedding2Drawing(g, positions, filename=None, class_of=None,
                      node_colors=None, margin_size=0.1, mindim=600,
                      stroke_width=None, node_radius=None, labels=True,
                      baseunit='px'):
    """Creates an svgwrite.Drawing of g with vertex v drawn at positions[v].

    Args:
        g (ColoredGraph): the graph; edges become straight lines.
        positions: (n, 2) array-like of coordinates.  The y-axis points up
            (it is flipped for svg).
        filename (str): where Drawing.save() will write.
        class_of (list): optional class id per vertex (e.g. final 1-WL
            colors); vertices of one class share a fill color.
        node_colors (list): explicit fill color per vertex; overrides
            `class_of`.
        margin_size (float): min margin as a fraction of the drawing size.
        mindim (int): length of the shorter side of the output, in
            `baseunit`.
        stroke_width, node_radius (float): in drawing coordinates; scaled
            defaults if omitted.
        labels (bool): write vertex numbers next to the nodes.
    """
    pts = np.asarray(positions, dtype=float).reshape(-1, 2) * [1, -1]
    if len(pts) != g.n:
        raise ValueError("Expected {} positions, got {}.".format(g.n,
                                                                 len(pts)))
    if node_colors is None:
        node_colors = classes2colors(class_of) if class_of is not None \
            else ['black'] * g.n

    xmin, xmax, ymin, ymax = embedding_bounding_box(pts)
    dx, dy = max(xmax - xmin, 1e-9), max(ymax - ymin, 1e-9)
    size = max(dx, dy)
    if stroke_width is None:
        stroke_width = size * _default_relative_stroke_width
    if node_radius is None:
        node_radius = size * _default_relative_node_radius

    extra_space_for_style = 2 * node_radius
    xmin -= margin_size*dx + extra_space_for_style/2
    ymin -= margin_size*dy + extra_space_for_style/2
    dx += 2*margin_size*dx + extra_space_for_style
    dy += 2*margin_size*dy + extra_space_for_style
    viewbox = "%s %s %s %s" % (xmin, ymin, dx, dy)
    if dx > dy:
        szx = str(mindim) + baseunit
        szy = str(int(ceil(mindim * dy / dx))) + baseunit
    else:
        szx = str(int(ceil(mindim * dx / dy))) + baseunit
        szy = str(mindim) + baseunit

    dwg = Drawing(filename=filename, size=(szx, szy), debug=False,
                  viewBox=viewbox)
    for u, v in g.edges:
        dwg.add(dwg.line(tuple(pts[u]), tuple(pts[v]), stroke='black',
                         stroke_width=str(stroke_width)))
    for v in range(g.n):
        dwg.add(dwg.circle(tuple(pts[v]), node_radius, fill=node_colors[v]))
        if labels:
            x, y = pts[v] + node_radius
            dwg.add(dwg.text(str(v), insert=(x, y),
                             font_size=size * _default_font_size))
    return dwg


def embedding2svg(g, positions, filename, **kwargs):
    """Writes the drawing of embedding2Drawing() to `filename` and
    pretty-prints the xml."""
    dwg = embedding2Drawing(g, positions, filename=filename, **kwargs)
    dwg.save()

    xmlstring = md_xml_parse(filename).toprettyxml()
    with open(filename, 'w') as f:
        f.write(xmlstring)
    return filename
