"""Quantum-walk search on the complete graph and the simplex of complete graphs."""

from .analytic import (CasePrediction, StagePrediction, complete_gap, predict,
                       predict_complete, predicted_gap)
from .graphs import (CASE_TAGS, Graph, InvalidSizeError, MarkedConfiguration,
                     build_complete, build_simplex, named_configuration,
                     parse_custom_config, partner, simplex_coordinate,
                     simplex_vertex_id)
from .hamiltonian import (DENSE_SOLVER_CAP, DimensionCapError,
                          HamiltonianMatrix, TimeSeries, build_hamiltonian,
                          evolve_ode, evolve_spectral, propagate,
                          success_probability, uniform_state)
from .reduction import (EquitablePartition, ReducedOperator, classify_pairs,
                        coarsest_equitable_partition, lift_state, project_state,
                        quotient_adjacency, reduced_hamiltonian)
from .reference import (CaseSubspace, MatchReport, case_subspace, cell_labels,
                        reference_case, validate_reduction)
from .schedule import (Schedule, auto_schedule, conjecture_check, peak_summary,
                       run_named_case, run_schedule_full, run_schedule_reduced)
from .spectral import GapReport, gamma_sweep, gap_at, scaling_fit

__version__ = "0.1.0"
