"""Bi-objective permutation flow shop search.

Minimizes makespan and total tardiness with a Pareto iterated local
search (pils_run), a one-neighborhood archive baseline (mos_run), and
the supporting machinery: exact-integer evaluation, an unbounded
non-dominated archive, three permutation neighborhoods, front quality
metrics, and an exhaustive oracle for small instances.
"""

from .archive import ArchiveEntry, ParetoArchive, dominates, parse_front, render_front
from .metrics import (
    MetricReport,
    brute_force_pareto,
    d_metrics,
    parse_front_points,
    pooled_reference,
    render_front_points,
)
from .neighborhoods import (
    MOVES,
    Move,
    backward_shift_all,
    exchange_all,
    forward_shift_all,
    neighbors,
    perturb,
    reverse_block,
    shuffle_order,
)
from .problem import (
    Evaluator,
    Instance,
    ParseError,
    assign_due_dates,
    completion_matrix,
    evaluate_objectives,
    load_instance,
    parse_due_dates,
    parse_taillard,
    random_instance,
    random_permutation,
)
from .solvers import (
    RunResult,
    SolverConfig,
    descent_stats,
    mos_run,
    parse_run_result,
    pils_run,
    random_sample,
    render_run_result,
)

__all__ = [
    "ArchiveEntry",
    "Evaluator",
    "Instance",
    "MetricReport",
    "Move",
    "MOVES",
    "ParetoArchive",
    "ParseError",
    "RunResult",
    "SolverConfig",
    "assign_due_dates",
    "backward_shift_all",
    "brute_force_pareto",
    "completion_matrix",
    "d_metrics",
    "descent_stats",
    "dominates",
    "evaluate_objectives",
    "exchange_all",
    "forward_shift_all",
    "load_instance",
    "mos_run",
    "neighbors",
    "parse_due_dates",
    "parse_front",
    "parse_front_points",
    "parse_run_result",
    "parse_taillard",
    "perturb",
    "pils_run",
    "pooled_reference",
    "random_instance",
    "random_permutation",
    "random_sample",
    "render_front",
    "render_front_points",
    "render_run_result",
    "reverse_block",
    "shuffle_order",
]

__version__ = "0.1.0"
