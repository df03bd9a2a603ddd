"""Triangle detection, counting and listing; sampling estimators;
independent-set-or-triangle dichotomy; certified extremal generators."""

from .backend import backend_name, get_kernels, set_backend, use_backend
from .errors import (EllOutOfRangeError, InvalidProbabilityError,
                     MatrixMissingError, MatrixTooLargeError,
                     ParamOutOfRangeError, SelfLoopError, TrigraphError,
                     UnknownAlgorithmError, VertexOutOfRangeError)
from .graph import (DEFAULT_MATRIX_BUDGET, Graph, GraphStats, build_matrix,
                    compute_stats, degeneracy, edge_cost_sum,
                    induced_subgraph, read_edge_list, write_edge_list)
from .exact import (Triangle, ListingReport, brute_force_list, count,
                    count_matrix, detect_matrix, list_ayz,
                    list_chiba_nishizeki, list_cliques, list_hybrid,
                    list_itai_rodeh, list_triangles, triangle_set)
from .approx import (ApproxParams, ApproxResult, TrialStats, approx_count,
                     detect_via_sampling, sample_vertices, variance_bound)
from .indep import (IndependentSetFound, TriangleFound, approx_is_or_triangle,
                    greedy_independent_set, is_or_triangle, turan_guarantee)
from .generate import (FAMILIES, GeneratedInstance, gen_clique_plus, gen_gnp,
                       gen_layered_cliques, gen_random)

__version__ = "0.1.0"
