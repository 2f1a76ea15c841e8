"""This submodule contains the command-line front end (the `wlplanar`
console script and `python -m wlplanar`).

Commands:

    wl FILE [--k K] [--ind 0,6]        stable coloring as JSON
    distinguish A B [--k K]            exit 0 if distinguished, 1 if not
    experiment NAME [flags]            run a named suite, JSON report
    catalog list | dump NAME | corpus  graph files of the catalog
    p0 FILE / gbot FILE                decomposition dumps as JSON
    tutte FILE --face a,b,c [--svg F]  Tutte embedding of a planar graph

Errors in the input (bad graph files, violated preconditions) are
reported on stderr with exit status 2."""

# External dependencies
from __future__ import division, absolute_import, print_function
from collections import OrderedDict
import argparse
import hashlib
import json
import logging
import os
import sys
import warnings

# Internal dependencies
from .catalog import FIXED_SOLIDS, corpus, generate, planar_graphs
from .constants import (CORPUS_DEFAULT, DEFAULT_SEED, RELABELINGS,
                        TUTTE_EPS, TUTTE_MAX_ITER)
from .decompose import DecompositionContext, g_bot, p0_set
from .experiments import ExperimentOptions, experiment_names, run_experiment
from .graph2svg import embedding2svg
from .misctools import parse_vertex_list
from .oracle import canonical_form, oracle_limit
from .parser import dump_graph, read_graph
from .tutte import discreteness_link_check, tutte_iterate
from .wl import distinguishes, individualize, stable_coloring

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _emit(text, out=None):
    if out:
        with open(out, 'w') as f:
            f.write(text if text.endswith('\n') else text + '\n')
        logger.info('wrote %s', out)
    else:
        print(text)


# Commands ####################################################################

def cmd_wl(args):
    g = read_graph(args.graph)
    ind = parse_vertex_list(args.ind)
    coloring = stable_coloring(individualize(g, ind), args.k)
    _emit(coloring.to_json(), args.out)
    return EXIT_OK


def cmd_distinguish(args):
    g, h = read_graph(args.first), read_graph(args.second)
    verdict = distinguishes(g, h, args.k)
    _emit('distinguished' if verdict else 'not distinguished', args.out)
    return EXIT_OK if verdict else EXIT_NO


def cmd_experiment(args):
    options = ExperimentOptions(
        k=args.k, eps=args.eps, max_iter=args.max_iter, seed=args.seed,
        jobs=args.jobs, max_n=args.max_n, timings=args.timings,
        relabelings=args.relabelings)
    report = run_experiment(args.name, options)
    _emit(report.to_json(), args.out)
    if not report.passed:
        logger.error('%s failed: %s', args.name,
                     ', '.join(report.failures()))
    return EXIT_OK if report.passed else EXIT_NO


def canonical_id(g):
    """A short hex digest of the canonical form of g, or None if g is too
    large for the oracle."""
    if g.n > oracle_limit():
        return None
    form = repr(canonical_form(g)).encode('utf-8')
    return hashlib.sha256(form).hexdigest()[:16]


def cmd_catalog(args):
    if args.action == 'list':
        names = ['bipyramid N', 'prism N', 'antiprism N', 'wheel N',
                 'octahedron', 'triakis-icosahedron']
        names += list(FIXED_SOLIDS)
        _emit('\n'.join(sorted(names)), args.out)
        return EXIT_OK
    if args.action == 'dump':
        if not args.name:
            raise ValueError("catalog dump needs a solid name.")
        g = generate(args.name, args.n)
        _emit(dump_graph(g, comment=g.name), args.out)
        return EXIT_OK

    # corpus
    if not args.dir:
        raise ValueError("catalog corpus needs --dir.")
    if not os.path.isdir(args.dir):
        os.makedirs(args.dir)
    graphs = (planar_graphs(args.max_n) if args.planar
              else corpus(args.max_n))
    manifest = []
    for i, g in enumerate(graphs):
        path = os.path.join(args.dir, '{:04d}.g'.format(i))
        with open(path, 'w') as f:
            f.write(dump_graph(g, comment=g.name))
        manifest.append(OrderedDict([('path', path), ('name', g.name),
                                     ('canonical_id', canonical_id(g))]))
    _emit(json.dumps(manifest, indent=2), args.out)
    return EXIT_OK


def _pair_json(p):
    return OrderedDict([('separator', sorted(p.separator)),
                        ('component', sorted(p.component))])


def cmd_p0(args):
    g = read_graph(args.graph)
    _emit(json.dumps([_pair_json(p) for p in p0_set(g)], indent=2),
          args.out)
    return EXIT_OK


def cmd_gbot(args):
    g = read_graph(args.graph)
    reduced = g_bot(g, DecompositionContext(), args.vertex_colored)
    base = reduced.base
    report = OrderedDict([
        ('vertices', reduced.vertices),
        ('edges', [list(e) for e in base.edges]),
        ('colors', [[u, v, base.arc_color(u, v),
                     list(reduced.decoded_color(u, v))]
                    for u, v in sorted(base.arcs())]),
        ('coloring', json.loads(stable_coloring(base, args.k).to_json()))])
    _emit(json.dumps(report, indent=2), args.out)
    return EXIT_OK


def cmd_tutte(args):
    g = read_graph(args.graph)
    face3 = parse_vertex_list(args.face)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always')
        state = tutte_iterate(g, face3, args.eps, args.max_iter)
    for w in caught:
        logger.warning('%s', w.message)
    discrete = discreteness_link_check(g, face3, args.eps, args.max_iter)
    report = OrderedDict([
        ('pinned', face3), ('iterations', state.iteration),
        ('converged', bool(state.converged)),
        ('injective', bool(state.is_injective())),
        ('discrete', bool(discrete)),
        ('positions', [[float(x), float(y)] for x, y in state.positions])])
    if args.svg:
        classes = stable_coloring(individualize(g, face3), 1).colors.tolist()
        embedding2svg(g, state.positions, args.svg, class_of=classes)
        logger.info('wrote %s', args.svg)
    _emit(json.dumps(report, indent=2), args.out)
    return EXIT_OK


# Argument parsing ############################################################

def _dimension(text):
    k = int(text)
    if k not in (1, 2, 3):
        raise argparse.ArgumentTypeError("k must be 1, 2 or 3")
    return k


def build_parser():
    parser = argparse.ArgumentParser(
        prog='wlplanar', description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='log debug messages')
    sub = parser.add_subparsers(dest='command')

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument('--out', help='write the output to this file')
        return p

    p = command('wl', cmd_wl, 'stable k-WL coloring of a graph file')
    p.add_argument('graph')
    p.add_argument('--k', type=_dimension, default=1)
    p.add_argument('--ind', default='',
                   help='vertices to individualize, e.g. 0,6')

    p = command('distinguish', cmd_distinguish,
                'does k-WL distinguish two graph files')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--k', type=_dimension, default=1)

    p = command('experiment', cmd_experiment, 'run a named experiment')
    p.add_argument('name', choices=experiment_names(aliases=True))
    p.add_argument('--k', type=_dimension, default=None)
    p.add_argument('--eps', type=float, default=TUTTE_EPS)
    p.add_argument('--max-iter', type=int, default=TUTTE_MAX_ITER)
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.add_argument('--jobs', type=int, default=1)
    p.add_argument('--max-n', type=int, default=CORPUS_DEFAULT)
    p.add_argument('--relabelings', type=int, default=RELABELINGS)
    p.add_argument('--timings', action='store_true',
                   help='add wall-times to the report')

    p = command('catalog', cmd_catalog, 'generate catalog graphs')
    p.add_argument('action', choices=['list', 'dump', 'corpus'])
    p.add_argument('name', nargs='?')
    p.add_argument('--n', type=int, default=None,
                   help='size parameter of bipyramids, prisms, ...')
    p.add_argument('--dir', help='output directory of `corpus`')
    p.add_argument('--max-n', type=int, default=CORPUS_DEFAULT)
    p.add_argument('--planar', action='store_true',
                   help='only the connected planar graphs')

    p = command('p0', cmd_p0, 'minimal separator pairs of a graph file')
    p.add_argument('graph')

    p = command('gbot', cmd_gbot, 'reduced graph of a graph file')
    p.add_argument('graph')
    p.add_argument('--k', type=_dimension, default=1)
    p.add_argument('--vertex-colored', action='store_true')

    p = command('tutte', cmd_tutte, 'Tutte embedding of a planar graph')
    p.add_argument('graph')
    p.add_argument('--face', required=True,
                   help='three vertices of a face, e.g. 0,1,2')
    p.add_argument('--eps', type=float, default=TUTTE_EPS)
    p.add_argument('--max-iter', type=int, default=TUTTE_MAX_ITER)
    p.add_argument('--svg', help='draw the embedding to this file')
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose
                        else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    if not getattr(args, 'func', None):
        parser.print_help()
        return EXIT_ERROR
    try:
        return args.func(args)
    except (ValueError, KeyError, IOError, OSError) as error:
        print('error: {}'.format(error), file=sys.stderr)
        return EXIT_ERROR
