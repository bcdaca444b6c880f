"""Chromatic MST-ratio toolkit.

Given a two-coloring of a point set (or of an abstract positive-weight
complete graph), its ratio is the combined weight of the two color-class
MSTs divided by the MST weight of everything.  This package computes the
ratio exactly, maximizes and averages it by enumeration or sampling,
certifies the metric upper bound constructively, runs the clique reduction
with its decoder and Euclidean realization, generates the named extremal
instance families, and reproduces the random-cloud experiments.
"""

from .core import (Coloring, DegenerateGeometryError, DegenerateInstanceError,
                   EnumerationGuardError, ImproperColoringError, MstRatioError,
                   NotMetricError, PointSet, RealizationError, Tree,
                   WeightedCompleteGraph, distance_graph,
                   enumerate_proper_colorings, load_graph, load_point_set,
                   parse_coloring, proper_coloring_count, validate_metric)
from .mst import (RootedTreeView, heaviest_internal_path, mst, mst_of_subset,
                  path_double_cover, rooted_view, tree_path)
from .ratio import (MaxRatioResult, RatioEvaluation, average_lower_bound,
                    average_ratio_exact, average_ratio_floor,
                    average_ratio_sampled, max_ratio_exact,
                    max_subset_mst_exact, metric_max_ratio_bound, mst_ratio,
                    subset_mst_table)
from .approx import (CertificateReport, Certifier, approx_coloring,
                     bipartite_coloring, certify_upper_bound)
from .hardness import (RealizationLift, ReductionInstance, SimpleGraph,
                       clique_to_coloring, coloring_to_clique, coloring_value,
                       lift_and_realize, lift_preserves_argmax,
                       max_clique_bruteforce, reduce_clique)
from .generators import (GeneratorSpec, child_rng, gen_metric_extremal,
                         gen_pentagon_core, gen_triangular_chain, gen_tripod,
                         gen_uniform, generate, random_graph,
                         random_metric_graph, random_weight_graph)
from .analysis import (CONSTANTS, ConstantsTable, ExperimentRecord,
                       bernstein_average_limit, chromatic_crossing_number,
                       estimate_beta, max_crossing_exact, run_sweep,
                       scatter_pairs, scatter_summary, scatter_to_csv,
                       sweep_to_csv)

__version__ = "0.1.0"
