"""This submodule contains the experiment harness: named suites of checks
that run the refinement engine, the decomposition tools and the Tutte
iteration over the catalog and compare them with the oracle.

Every experiment turns into a list of independent cases.  A case is a
module-level function applied to picklable arguments, so the cases can be
handed to a process pool.  The results are collected into an
ExperimentReport, whose JSON form only depends on the experiment and its
flags (wall-times are left out unless asked for)."""

# External dependencies
from __future__ import division, absolute_import, print_function
from collections import OrderedDict, namedtuple
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
import json
import logging
import time
import warnings
import numpy as np

# Internal dependencies
from .constants import (CORPUS_DEFAULT, DEFAULT_SEED, RELABELINGS,
                        SOLVE_AGREEMENT_TOL, TUTTE_EPS, TUTTE_MAX_ITER,
                        WL_DIMENSIONS)
from .catalog import (BIPYRAMID_RANGE, FIXED_SOLIDS, bipyramid_spec,
                      connected_graphs, consecutive_neighbor_property, corpus,
                      discrete_pair, exception_solids, face_triples,
                      gadget_graphs, non_exception_polyhedra, planar_graphs,
                      polyhedra, subdivided_solids, tetrahedron)
from .decompose import (DecompositionContext, SeparatorPair,
                        bottom_exclusion_witnessed, bottom_vertices, g_bot,
                        min_separator_vertices, minimal_pairs_by_separators,
                        minimal_pairs_meet_in_separators, p0_set, p_set)
from .graph import faces, is_k_connected, smooth_degree2
from .misctools import ColorPalette
from .oracle import automorphisms, fixing_number, isomorphic, orbits
from .oracle import oracle_limit
from .tutte import (TutteLinkError, discreteness_link_check, tutte_iterate,
                    tutte_solve)
from .wl import (determines_orbits_check, refinement_rounds,
                 stable_coloring, stable_histograms, walk_counts)

logger = logging.getLogger(__name__)

# size bounds of the individual suites
ORBITS_MAX_N = 12
REDUCTION_MAX_N = 10
SEPARATOR_PROPS_MAX_N = 12
SMOOTHING_MAX_N = 10
WALKS_MAX_N = 16
# largest graph the engine suite refines with 3-WL (tuples of every copy
# are refined jointly)
ENGINE_K3_MAX_N = 12


ExperimentOptions = namedtuple(
    'ExperimentOptions',
    'k eps max_iter seed jobs max_n timings relabelings')
ExperimentOptions.__new__.__defaults__ = (None, TUTTE_EPS, TUTTE_MAX_ITER,
                                          DEFAULT_SEED, 1, CORPUS_DEFAULT,
                                          False, RELABELINGS)


class ExperimentReport(object):
    """The outcome of one experiment.

    Attributes:
        experiment (str): the experiment name.
        flags (OrderedDict): the options that influence the results.
        inputs (list): descriptions of the graphs and generators used.
        cases (list): one OrderedDict per case, sorted by case id; each has
            an 'id' and a 'passed' entry.
    """

    def __init__(self, experiment, flags, inputs, cases):
        self.experiment = experiment
        self.flags = flags
        self.inputs = list(inputs)
        self.cases = sorted(cases, key=lambda case: case['id'])

    @property
    def passed(self):
        return all(case['passed'] for case in self.cases)

    def failures(self):
        return [case['id'] for case in self.cases if not case['passed']]

    def to_json(self):
        report = OrderedDict([('experiment', self.experiment),
                              ('flags', self.flags),
                              ('inputs', self.inputs),
                              ('cases', self.cases),
                              ('passed', self.passed)])
        return json.dumps(report, indent=2)

    def __repr__(self):
        return 'ExperimentReport({!r}, cases={}, passed={})'.format(
            self.experiment, len(self.cases), self.passed)


# Running cases ###############################################################

def _jsonable(value):
    if isinstance(value, dict):
        return OrderedDict((str(k), _jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in value]
        return sorted(items) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, (np.integer, np.bool_)):
        return value.item()
    if isinstance(value, np.floating):
        return float(value)
    return value


def _case(passed, details=()):
    case = OrderedDict([('passed', bool(passed))])
    for key, value in details:
        case[key] = _jsonable(value)
    return case


def _timed_call(func, args):
    start = time.time()
    result = func(*args)
    return result, time.time() - start


def _run_cases(tasks, jobs=1, timings=False):
    """Runs the tasks (case id, function, args) and returns their case
    dicts, in a process pool if jobs > 1."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_timed_call, func, args)
                       for _, func, args in tasks]
            outcomes = [f.result() for f in futures]
    else:
        outcomes = [_timed_call(func, args) for _, func, args in tasks]

    cases = []
    for (case_id, _, _), (case, seconds) in zip(tasks, outcomes):
        entry = OrderedDict([('id', case_id)])
        entry.update(case)
        if timings:
            entry['seconds'] = round(seconds, 3)
        cases.append(entry)
        if not case['passed']:
            logger.warning('case %s failed', case_id)
    return cases


def _type_string(counter):
    """Writes a multiset of degrees or face lengths as e.g. '7{4}+2{7}':
    count{value}, by increasing value."""
    return '+'.join('{}{{{}}}'.format(counter[value], value)
                    for value in sorted(counter))


def _describe(graphs):
    return [OrderedDict([('name', g.name), ('n', g.n), ('m', g.m)])
            for g in graphs]


# Table of exceptions #########################################################

def _spec(name, n):
    return bipyramid_spec(n) if name == 'bipyramid' else FIXED_SOLIDS[name]


def _solid_keys():
    return ([('bipyramid', n) for n in BIPYRAMID_RANGE] +
            [(name, None) for name in FIXED_SOLIDS])


def _solid_row_case(name, n):
    spec = _spec(name, n)
    observed = spec.check()
    expected = OrderedDict([('V', spec.vertices), ('E', spec.edges),
                            ('F', spec.faces),
                            ('V-type', _type_string(spec.vertex_type)),
                            ('F-type', _type_string(spec.face_type))])
    return _case(observed['match'], [
        ('V', observed['V']), ('E', observed['E']), ('F', observed['F']),
        ('V-type', _type_string(observed['V-type'])),
        ('F-type', _type_string(observed['F-type'])),
        ('expected', expected)])


def solid_table(options):
    tasks = [(_spec(name, n).name, _solid_row_case, (name, n))
             for name, n in _solid_keys()]
    return [_spec(name, n).name for name, n in _solid_keys()], tasks


def _exception_case(name, n):
    g = _spec(name, n).generate()
    auts = automorphisms(g)
    size, witness = fixing_number(g, auts)
    pair = discrete_pair(g)
    return _case(pair is None and size == 3, [
        ('n', g.n), ('automorphisms', len(auts)), ('discrete_pair', pair),
        ('fixing_number', size), ('witness', witness),
        ('consecutive_neighbors', consecutive_neighbor_property(g))])


def exceptions(options):
    tasks = [(_spec(name, n).name, _exception_case, (name, n))
             for name, n in _solid_keys()]
    return [task[0] for task in tasks], tasks


def _non_exception_case(g):
    pair = discrete_pair(g)
    return _case(pair is not None, [
        ('n', g.n), ('discrete_pair', pair),
        ('consecutive_neighbors', consecutive_neighbor_property(g))])


def non_exceptions(options):
    graphs = non_exception_polyhedra()
    tasks = [(g.name, _non_exception_case, (g,)) for g in graphs]
    return _describe(graphs), tasks


def _fixing_case(g, exception):
    size, witness = fixing_number(g)
    passed = size == 3 if exception else size <= 2
    return _case(passed, [('n', g.n), ('exception', exception),
                          ('fixing_number', size), ('witness', witness)])


def fixing_numbers(options):
    limit = oracle_limit()
    graphs = [(g, True) for g in exception_solids()]
    graphs += [(g, False) for g in non_exception_polyhedra()]
    graphs = [(g, e) for g, e in graphs if g.n <= limit]
    tasks = [(g.name, _fixing_case, (g, e)) for g, e in graphs]
    return _describe(g for g, _ in graphs), tasks


# Face triples and the Tutte iteration ########################################

def _face_triple_case(g, eps, max_iter):
    triples = face_triples(g)
    non_discrete = []
    try:
        for triple in triples:
            if not discreteness_link_check(g, triple, eps, max_iter):
                non_discrete.append(triple)
    except TutteLinkError as error:
        return _case(False, [('n', g.n), ('triples', len(triples)),
                             ('error', str(error))])
    return _case(not non_discrete, [('n', g.n), ('triples', len(triples)),
                                    ('non_discrete', non_discrete)])


def face_triple_experiment(options):
    graphs = polyhedra()
    tasks = [(g.name, _face_triple_case, (g, options.eps, options.max_iter))
             for g in graphs]
    return _describe(graphs), tasks


def _tutte_k4_case(eps, max_iter):
    g = tetrahedron()
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        state = tutte_iterate(g, [0, 1, 2], eps, min(max_iter, 10000))
    error = float(np.abs(state.positions[3] - 1 / 3).max())
    return _case(state.converged and error <= 1e-9, [
        ('iterations', state.iteration), ('position', state.position(3)),
        ('error', error)])


def _tutte_case(g, eps, max_iter):
    face3 = list(faces(g)[0][:3])
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        state = tutte_iterate(g, face3, eps, max_iter)
    gap = float(np.abs(state.positions - tutte_solve(g, face3)).max())
    injective = state.is_injective()
    return _case(state.converged and injective and
                 gap < SOLVE_AGREEMENT_TOL, [
                     ('n', g.n), ('pinned', face3),
                     ('iterations', state.iteration),
                     ('converged', state.converged),
                     ('injective', injective),
                     ('min_distance', float(state.min_distance())),
                     ('solve_gap', gap)])


def tutte_experiment(options):
    graphs = polyhedra()
    tasks = [('K4', _tutte_k4_case, (options.eps, options.max_iter))]
    tasks += [(g.name, _tutte_case, (g, options.eps, options.max_iter))
              for g in graphs]
    return ['K4'] + _describe(graphs), tasks


# Small planar graphs #########################################################

def _small_planar_case(graphs, k, seed):
    rng = np.random.RandomState(seed)
    copies = [g.relabeled(rng.permutation(g.n)) for g in graphs]
    histograms = stable_histograms(graphs + copies, k)
    originals = histograms[:len(graphs)]
    distinguished_copies = [g.name for g, a, b in
                            zip(graphs, originals, histograms[len(graphs):])
                            if a != b]
    oracle_failures = [g.name for g, h in zip(graphs, copies)
                       if isomorphic(g, h) is None]

    groups = OrderedDict()
    for g, histogram in zip(graphs, originals):
        groups.setdefault(histogram, []).append(g)
    undistinguished = [[a.name, b.name] for members in groups.values()
                       for a, b in combinations(members, 2)
                       if isomorphic(a, b) is None]
    pairs = len(graphs) * (len(graphs) - 1) // 2
    return _case(not (distinguished_copies or oracle_failures or
                      undistinguished), [
        ('k', k), ('graphs', len(graphs)), ('pairs', pairs),
        ('undistinguished_pairs', undistinguished),
        ('distinguished_copies', distinguished_copies),
        ('oracle_failures', oracle_failures)])


def small_planar(options):
    k = options.k or 3
    graphs = planar_graphs(options.max_n)
    tasks = []
    for n in range(1, options.max_n + 1):
        members = [g for g in graphs if g.n == n]
        tasks.append(('n={}'.format(n), _small_planar_case,
                      (members, k, options.seed + n)))
    return ['connected planar graphs, n <= {}'.format(options.max_n)], tasks


# Decomposition ###############################################################

def _reduction_pair_case(g, h):
    context = DecompositionContext()
    reduced_g, reduced_h = g_bot(g, context), g_bot(h, context)
    same = isomorphic(g, h) is not None
    reduced_same = isomorphic(reduced_g.base, reduced_h.base) is not None
    return _case(same == reduced_same, [
        ('isomorphic', same), ('reduced_isomorphic', reduced_same),
        ('reduced_n', [reduced_g.base.n, reduced_h.base.n])])


def _separator_pair_case(g, seed):
    pairs = p_set(g)
    p0 = p0_set(g, pairs)
    meet = minimal_pairs_meet_in_separators(g, p0)
    by_separators = minimal_pairs_by_separators(g, pairs) == p0

    perm = [int(p) for p in np.random.RandomState(seed).permutation(g.n)]
    mapped = sorted((SeparatorPair(frozenset(perm[v] for v in p.separator),
                                   frozenset(perm[v] for v in p.component))
                     for p in p0), key=SeparatorPair.sort_key)
    invariant = p0_set(g.relabeled(perm)) == mapped

    mismatched = []
    if is_k_connected(g, 2):
        bottom = set(bottom_vertices(g))
        separator_vertices = min_separator_vertices(g)
        mismatched = [x for x in range(g.n)
                      if (x not in bottom) != bottom_exclusion_witnessed(
                          g, x, separator_vertices)]
    return _case(meet and by_separators and invariant and not mismatched, [
        ('minimal_pairs', len(p0)), ('meet_in_separators', meet),
        ('minimal_by_separators', by_separators),
        ('relabeling_invariant', invariant),
        ('bottom_mismatches', mismatched)])


def _decomposable(g):
    """Connected, not complete, not 3-connected and, if 2-connected, of
    minimum degree at least 3."""
    if g.n < 3 or not g.is_connected() or g.is_complete():
        return False
    if not is_k_connected(g, 2):
        return True
    return min(g.degrees()) >= 3 and not is_k_connected(g, 3)


def _pair_tasks(graphs, seed, case):
    """One task per graph against a relabeled copy and one per graph
    against the next graph of equal n and m."""
    rng = np.random.RandomState(seed)
    tasks = []
    for i, g in enumerate(graphs):
        copy = g.relabeled(rng.permutation(g.n))
        tasks.append(('pair/{}~copy'.format(g.name), case, (g, copy)))
        if i + 1 < len(graphs):
            h = graphs[i + 1]
            if (h.n, h.m) == (g.n, g.m):
                tasks.append(('pair/{}~{}'.format(g.name, h.name), case,
                              (g, h)))
    return tasks


def reduction(options):
    exhaustive = [g for g in connected_graphs(options.max_n)
                  if _decomposable(g)]
    gadgets = gadget_graphs(SEPARATOR_PROPS_MAX_N)
    one_connected = [g for g in exhaustive if not is_k_connected(g, 2)]
    two_connected = [g for g in exhaustive + gadgets
                     if is_k_connected(g, 2) and g.n <= REDUCTION_MAX_N]

    tasks = _pair_tasks(one_connected, options.seed, _reduction_pair_case)
    tasks += _pair_tasks(two_connected, options.seed + 1,
                         _reduction_pair_case)
    tasks += [('graph/{}'.format(g.name), _separator_pair_case,
               (g, options.seed + i))
              for i, g in enumerate(exhaustive + gadgets)]
    inputs = ['decomposable connected graphs, n <= {}'.format(options.max_n),
              'separator gadgets, n <= {}'.format(SEPARATOR_PROPS_MAX_N)]
    return inputs, tasks


# Blocks and 2-separators #####################################################

def _block_case(g):
    coloring = stable_coloring(g, 2)
    colors = coloring.colors
    same = np.zeros((g.n, g.n), dtype=bool)
    for block in g.blocks():
        members = sorted(block)
        same[np.ix_(members, members)] = True
    off_diagonal = ~np.eye(g.n, dtype=bool)
    shared = (set(colors[same & off_diagonal].tolist()) &
              set(colors[~same & off_diagonal].tolist()))

    vertex_colors = coloring.vertex_colors().tolist()
    cuts = g.cut_vertices()
    cut_shared = (set(vertex_colors[v] for v in cuts) &
                  set(vertex_colors[v] for v in range(g.n) if v not in cuts))

    walks = [walk_counts(g, i) for i in range(g.n + 1)]
    seen, walk_violations = {}, 0
    for u, v in np.ndindex(g.n, g.n):
        key = tuple(w[u, v] for w in walks)
        if seen.setdefault(colors[u, v], key) != key:
            walk_violations += 1
    return _case(not shared and not cut_shared and not walk_violations, [
        ('n', g.n), ('blocks', len(g.blocks())), ('cut_vertices', cuts),
        ('block_colors_shared', shared), ('cut_colors_shared', cut_shared),
        ('walk_violations', walk_violations)])


def block_props(options):
    graphs = connected_graphs(options.max_n)
    graphs += [g for g in subdivided_solids() + polyhedra()
               if g.n <= WALKS_MAX_N]
    tasks = [(g.name, _block_case, (g,)) for g in graphs]
    return _describe(graphs), tasks


def _two_separator_case(g):
    coloring = stable_coloring(g, 3)
    separating, other = set(), set()
    for u, v in combinations(range(g.n), 2):
        target = other if g.is_connected([u, v]) else separating
        target.update([coloring.color_of(u, v), coloring.color_of(v, u)])
    return _case(not separating & other, [
        ('n', g.n), ('separating_colors', len(separating)),
        ('shared', separating & other)])


def _smoothing_case(g):
    palette = ColorPalette()
    smoothed = smooth_degree2(g, palette)
    if 2 in smoothed.degrees() or not is_k_connected(smoothed, 2):
        # stopped at a cycle or an edge; a second pass is undefined
        return _case(True, [('n', g.n), ('smoothed_n', smoothed.n),
                            ('idempotent', None)])
    idempotent = smooth_degree2(smoothed, palette) == smoothed
    return _case(idempotent, [('n', g.n), ('smoothed_n', smoothed.n),
                              ('idempotent', idempotent)])


def _smoothing_pair_case(g, h):
    palette = ColorPalette()
    same = isomorphic(g, h) is not None
    smoothed_same = isomorphic(smooth_degree2(g, palette),
                               smooth_degree2(h, palette)) is not None
    return _case(same == smoothed_same, [
        ('isomorphic', same), ('smoothed_isomorphic', smoothed_same)])


def separator_props(options):
    candidates = (connected_graphs(options.max_n) + subdivided_solids() +
                  gadget_graphs(SEPARATOR_PROPS_MAX_N))
    two_connected = [g for g in candidates if is_k_connected(g, 2)]
    tasks = [('3wl/{}'.format(g.name), _two_separator_case, (g,))
             for g in two_connected if g.n <= SEPARATOR_PROPS_MAX_N]

    smoothable = [g for g in two_connected
                  if g.n <= SMOOTHING_MAX_N and max(g.degrees()) >= 3]
    tasks += [('smooth/{}'.format(g.name), _smoothing_case, (g,))
              for g in smoothable]
    tasks += [('smooth-' + case_id, func, args) for case_id, func, args in
              _pair_tasks(smoothable, options.seed, _smoothing_pair_case)]
    return _describe(two_connected), tasks


# Orbits ######################################################################

def _orbit_case(g, k):
    orbit_list = orbits(g)
    contained = OrderedDict()
    for j in WL_DIMENSIONS:
        colors = stable_coloring(g, j).vertex_colors()
        contained[j] = all(len(set(colors[orbit].tolist())) == 1
                           for orbit in orbit_list)
    exact = determines_orbits_check(g, k)
    return _case(exact and all(contained.values()), [
        ('n', g.n), ('k', k), ('orbits', len(orbit_list)),
        ('determines_orbits', exact), ('orbits_in_classes', contained)])


def orbit_experiment(options):
    k = options.k or 3
    graphs = [g for g in polyhedra() if g.n <= ORBITS_MAX_N]
    graphs += [g for g in planar_graphs(options.max_n)
               if is_k_connected(g, 3)]
    tasks = [(g.name, _orbit_case, (g, k)) for g in graphs]
    return _describe(graphs), tasks


# Engine properties ###########################################################

def _engine_case(g, seed, relabelings):
    rng = np.random.RandomState(seed)
    dims = [k for k in WL_DIMENSIONS if k < 3 or g.n <= ENGINE_K3_MAX_N]
    monotone, stable_json, invariant = (OrderedDict(), OrderedDict(),
                                        OrderedDict())
    for k in dims:
        rounds = [cs[0] for cs in refinement_rounds([g], k)]
        monotone[k] = all(b.refines(a) for a, b in zip(rounds, rounds[1:]))
        stable_json[k] = (rounds[-1].to_json() ==
                          stable_coloring(g, k).to_json())
        copies = [g.relabeled(rng.permutation(g.n))
                  for _ in range(relabelings)]
        histograms = stable_histograms([g] + copies, k)
        invariant[k] = all(h == histograms[0] for h in histograms)
    passed = all(list(monotone.values()) + list(stable_json.values()) +
                 list(invariant.values()))
    return _case(passed, [('n', g.n), ('dimensions', dims),
                          ('relabelings', relabelings),
                          ('monotone', monotone),
                          ('byte_stable', stable_json),
                          ('relabeling_invariant', invariant)])


def _hierarchy_case(graphs):
    histograms = dict((k, stable_histograms(graphs, k))
                      for k in WL_DIMENSIONS)
    distinguished = OrderedDict((k, 0) for k in WL_DIMENSIONS)
    violations = []
    for i, j in combinations(range(len(graphs)), 2):
        verdicts = [histograms[k][i] != histograms[k][j]
                    for k in WL_DIMENSIONS]
        for k, verdict in zip(WL_DIMENSIONS, verdicts):
            distinguished[k] += verdict
        if verdicts != sorted(verdicts):
            violations.append([graphs[i].name, graphs[j].name])
    return _case(not violations, [
        ('graphs', len(graphs)), ('distinguished_pairs', distinguished),
        ('violations', violations)])


def engine_props(options):
    graphs = corpus(options.max_n)
    tasks = [('graph/{}'.format(g.name), _engine_case,
              (g, options.seed + i, options.relabelings))
             for i, g in enumerate(graphs)]
    small = connected_graphs(options.max_n)
    for n in range(1, options.max_n + 1):
        members = [g for g in small if g.n == n]
        tasks.append(('hierarchy/n={}'.format(n), _hierarchy_case,
                      (members,)))
    inputs = _describe(graphs) + [
        '3-WL on graphs with n <= {}'.format(ENGINE_K3_MAX_N)]
    return inputs, tasks


# Registry ####################################################################

EXPERIMENTS = OrderedDict([
    ('solid-table', solid_table),
    ('exceptions', exceptions),
    ('fixing-numbers', fixing_numbers),
    ('face-triples', face_triple_experiment),
    ('non-exceptions', non_exceptions),
    ('small-planar', small_planar),
    ('reduction', reduction),
    ('block-props', block_props),
    ('separator-props', separator_props),
    ('orbits', orbit_experiment),
    ('tutte', tutte_experiment),
    ('engine-props', engine_props),
])


# the acceptance labels, one alias per suite
EXPERIMENT_ALIASES = OrderedDict([
    ('table1', 'solid-table'),
    ('fixing', 'fixing-numbers'),
    ('lemma62', 'face-triples'),
    ('theorem64', 'non-exceptions'),
    ('soundness-n6', 'small-planar'),
    ('lemma32', 'reduction'),
    ('section4-props', 'block-props'),
    ('section5-props', 'separator-props'),
])


def experiment_names(aliases=False):
    """The experiment names; with `aliases`, followed by the acceptance
    labels that name the same suites."""
    names = list(EXPERIMENTS)
    if aliases:
        names += list(EXPERIMENT_ALIASES)
    return names


def run_experiment(name, options=None):
    """Runs the experiment `name` and returns its ExperimentReport.

    Args:
        name (str): one of experiment_names(aliases=True).  The report
            carries the name as given.
        options (ExperimentOptions): flags; `jobs` only changes how the
            cases are executed, never the report.
    """
    suite = EXPERIMENT_ALIASES.get(name, name)
    if suite not in EXPERIMENTS:
        raise ValueError("Unknown experiment {!r}; expected one of {}."
                         "".format(name, ', '.join(experiment_names(True))))
    if options is None:
        options = ExperimentOptions()
    inputs, tasks = EXPERIMENTS[suite](options)
    logger.info('experiment %s: %s cases', name, len(tasks))
    cases = _run_cases(tasks, options.jobs, options.timings)
    flags = OrderedDict((key, value) for key, value in
                        options._asdict().items() if key != 'jobs')
    return ExperimentReport(name, flags, _jsonable(inputs), cases)
