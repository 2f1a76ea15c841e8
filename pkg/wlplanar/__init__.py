from .graph import (ColoredGraph, EmbeddingError, faces, face_lengths,
                    rotation_from_coordinates, is_k_connected, connectivity,
                    min_separators, smooth_degree2, is_planar_small)
from .parser import (parse_graph, read_graph, dump_graph, GraphFormatError,
                     MalformedLineError, DuplicateEdgeError, LoopError,
                     RotationError)
from .misctools import ColorPalette, parse_vertex_list
from .wl import (Coloring, initial_coloring, refinement_rounds,
                 refine_to_stable, joint_stable, stable_coloring,
                 distinguishes, stable_histograms, individualize, is_discrete,
                 individualized_is_discrete, walk_counts,
                 determines_orbits_check)
from .oracle import (OracleLimitError, oracle_limit, is_isomorphism,
                     isomorphic, automorphisms, pointwise_stabilizer, orbits,
                     fixing_number, canonical_form)
from .decompose import (SeparatorPair, TorsoGraph, ReducedGraph,
                        DecompositionContext, p_set, p0_set,
                        minimal_pairs_by_separators,
                        minimal_pairs_meet_in_separators, bottom_vertices,
                        min_separator_vertices, lift_vertex_colors, g_top,
                        isotype, g_bot, bottom_exclusion_witnessed)
from .tutte import (TutteLinkError, EmbeddingState, check_face_triple,
                    tutte_rounds, tutte_iterate, tutte_solve,
                    discreteness_link_check)
from .catalog import (path_graph, cycle_graph, complete_graph, star_graph,
                      disjoint_union, Polyhedron, bipyramid, tetrahedron,
                      cube, octahedron, icosahedron, rhombic_dodecahedron,
                      triakis_tetrahedron, triakis_octahedron,
                      tetrakis_hexahedron, triakis_icosahedron, kleetope,
                      prism, antiprism, wheel, SolidSpec, solid_specs,
                      solid_names, generate, exception_solids,
                      non_exception_polyhedra, subdivided_solids, polyhedra,
                      discrete_pair, is_exception,
                      consecutive_neighbor_property, face_triples,
                      gadget_graph, gadget_graphs, exhaustive_graphs,
                      connected_graphs, planar_graphs, corpus)
from .graph2svg import embedding2Drawing, embedding2svg
from .experiments import (ExperimentOptions, ExperimentReport,
                          experiment_names, run_experiment)
