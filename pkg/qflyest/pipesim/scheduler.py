"""
Deterministic serial schedule generation for jobs with pooled resources.

Jobs are placed one at a time in lexicographic topological order, each at the
earliest start that respects its predecessors and the per-cycle capacity of every
pool it draws from.
"""

import bisect
import math
from collections import defaultdict
from typing import Dict, List, Sequence

import networkx as nx
from loguru import logger

from ..datamodel import Job, ResourcePool, Schedule
from ..errors import ScheduleError


def job_graph(jobs: Sequence[Job]) -> nx.DiGraph:
    """
    Precedence graph of the jobs.

    Raises:
        ScheduleError: on duplicate ids, unknown predecessors or cycles.
    """
    graph = nx.DiGraph()
    for job in jobs:
        if job.id in graph:
            raise ScheduleError(f"Duplicate job id: {job.id}")
        graph.add_node(job.id, job=job)
    for job in jobs:
        for pred in job.predecessors:
            if pred not in graph:
                raise ScheduleError(f"Job {job.id} depends on unknown job {pred}")
            graph.add_edge(pred, job.id)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise ScheduleError(f"Cyclic dependencies: {' -> '.join(u for u, _ in cycle)}")
    return graph


def _check_demands(jobs: Sequence[Job], capacities: Dict[str, int]) -> None:
    for job in jobs:
        for pool, amount in job.demands.items():
            if pool not in capacities:
                raise ScheduleError(f"Job {job.id} draws from unknown pool {pool}")
            if amount > capacities[pool]:
                raise ScheduleError(f"Job {job.id} needs {amount} of {pool}, capacity is {capacities[pool]}")


def simulate(jobs: Sequence[Job], pools: Sequence[ResourcePool]) -> Schedule:
    """Greedy list schedule; identical inputs always give identical schedules."""
    capacities = {pool.name: pool.capacity for pool in pools}
    graph = job_graph(jobs)
    _check_demands(jobs, capacities)

    usage: Dict[str, Dict[int, int]] = {name: defaultdict(int) for name in capacities}
    starts: Dict[str, int] = {}
    finish: Dict[str, int] = {}
    release_points: List[int] = [0]

    def fits(job: Job, start: int) -> bool:
        for pool, amount in job.demands.items():
            if amount == 0:
                continue
            used = usage[pool]
            cap = capacities[pool]
            for cycle in range(start, start + job.duration):
                if used[cycle] + amount > cap:
                    return False
        return True

    for job_id in nx.lexicographical_topological_sort(graph):
        job: Job = graph.nodes[job_id]["job"]
        earliest = max((finish[p] for p in job.predecessors), default=0)
        candidates = [earliest] + release_points[bisect.bisect_right(release_points, earliest) :]
        # every pool is idle from the last release point on, so some candidate fits
        start = next(t for t in candidates if fits(job, t))
        for pool, amount in job.demands.items():
            for cycle in range(start, start + job.duration):
                usage[pool][cycle] += amount
        starts[job_id] = start
        finish[job_id] = start + job.duration
        bisect.insort(release_points, finish[job_id])

    makespan = max(finish.values(), default=0)
    logger.debug(f"Scheduled {len(jobs)} jobs, makespan {makespan}")
    return Schedule(starts=starts, makespan=makespan)


def critical_path_bound(jobs: Sequence[Job]) -> int:
    """Longest duration-weighted precedence chain."""
    graph = job_graph(jobs)
    finish: Dict[str, int] = {}
    for job_id in nx.topological_sort(graph):
        job: Job = graph.nodes[job_id]["job"]
        finish[job_id] = job.duration + max((finish[p] for p in job.predecessors), default=0)
    return max(finish.values(), default=0)


def resource_bound(jobs: Sequence[Job], pools: Sequence[ResourcePool]) -> int:
    """Total work drawn from each pool over its capacity, worst pool."""
    work: Dict[str, int] = defaultdict(int)
    for job in jobs:
        for pool, amount in job.demands.items():
            work[pool] += amount * job.duration
    return max((math.ceil(work[pool.name] / pool.capacity) for pool in pools), default=0)
