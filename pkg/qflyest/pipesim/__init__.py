from .clause_pipeline import CLAUSE_POOLS, build_clause_pipeline, pipeline_makespan, validate_analytic
from .scheduler import critical_path_bound, job_graph, resource_bound, simulate

__all__ = [
    "CLAUSE_POOLS",
    "build_clause_pipeline",
    "critical_path_bound",
    "job_graph",
    "pipeline_makespan",
    "resource_bound",
    "simulate",
    "validate_analytic",
]
