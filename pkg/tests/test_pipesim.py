import random
from collections import defaultdict
from fractions import Fraction
from typing import List

import pytest

from qflyest.datamodel import Job, QAOAInstance, ResourcePool
from qflyest.errors import ScheduleError
from qflyest.pipesim import (
    CLAUSE_POOLS,
    build_clause_pipeline,
    critical_path_bound,
    job_graph,
    pipeline_makespan,
    resource_bound,
    simulate,
    validate_analytic,
)

POOLS = [ResourcePool(name="link", capacity=1), ResourcePool(name="factory", capacity=2)]


def random_jobs(rng: random.Random) -> List[Job]:
    jobs = []
    for i in range(rng.randint(1, 12)):
        preds = {f"j{p:02d}" for p in range(i) if rng.random() < 0.25}
        demands = {}
        if rng.random() < 0.6:
            demands["link"] = 1
        if rng.random() < 0.6:
            demands["factory"] = rng.randint(1, 2)
        jobs.append(Job(id=f"j{i:02d}", duration=rng.randint(0, 9), demands=demands, predecessors=frozenset(preds)))
    return jobs


class TestScheduler:
    """Serial schedule generation with pooled resources"""

    def test_chain(self):
        jobs = [
            Job(id="a", duration=3),
            Job(id="b", duration=4, predecessors=frozenset({"a"})),
        ]
        schedule = simulate(jobs, [])
        assert schedule.starts == {"a": 0, "b": 3}
        assert schedule.makespan == 7

    def test_contention_serializes(self):
        jobs = [Job(id=name, duration=5, demands={"link": 1}) for name in ("a", "b", "c")]
        schedule = simulate(jobs, POOLS)
        assert schedule.starts == {"a": 0, "b": 5, "c": 10}
        assert schedule.makespan == resource_bound(jobs, POOLS) == 15

    def test_backfill(self):
        jobs = [
            Job(id="a", duration=10, demands={"link": 1}),
            Job(id="b", duration=2, demands={"factory": 2}),
            Job(id="c", duration=3, demands={"factory": 1}, predecessors=frozenset({"b"})),
        ]
        assert simulate(jobs, POOLS).starts == {"a": 0, "b": 0, "c": 2}

    def test_empty(self):
        assert simulate([], POOLS).makespan == 0

    def test_cycle(self):
        jobs = [
            Job(id="a", duration=1, predecessors=frozenset({"b"})),
            Job(id="b", duration=1, predecessors=frozenset({"a"})),
        ]
        with pytest.raises(ScheduleError, match="Cyclic"):
            simulate(jobs, POOLS)

    def test_bad_graphs(self):
        with pytest.raises(ScheduleError):
            job_graph([Job(id="a", duration=1), Job(id="a", duration=2)])
        with pytest.raises(ScheduleError):
            job_graph([Job(id="a", duration=1, predecessors=frozenset({"x"}))])

    def test_bad_demands(self):
        with pytest.raises(ScheduleError):
            simulate([Job(id="a", duration=1, demands={"link": 2})], POOLS)
        with pytest.raises(ScheduleError):
            simulate([Job(id="a", duration=1, demands={"qram": 1})], POOLS)

    def test_random_graphs_respect_bounds(self):
        rng = random.Random(42)
        capacities = {pool.name: pool.capacity for pool in POOLS}
        for _ in range(500):
            jobs = random_jobs(rng)
            schedule = simulate(jobs, POOLS)
            assert schedule == simulate(jobs, POOLS)
            assert schedule.makespan >= critical_path_bound(jobs)
            assert schedule.makespan >= resource_bound(jobs, POOLS)
            assert schedule.makespan <= sum(job.duration for job in jobs)

            by_id = {job.id: job for job in jobs}
            usage = defaultdict(int)
            for job in jobs:
                start = schedule.starts[job.id]
                for pred in job.predecessors:
                    assert start >= schedule.starts[pred] + by_id[pred].duration
                for pool, amount in job.demands.items():
                    for cycle in range(start, start + job.duration):
                        usage[pool, cycle] += amount
            assert all(used <= capacities[pool] for (pool, _), used in usage.items())


class TestClausePipeline:
    """The scheduled clause stage against its analytic cost"""

    def test_single_round(self):
        assert pipeline_makespan(QAOAInstance(), None, 1, 10) == 291

    def test_full_stage(self):
        assert pipeline_makespan(QAOAInstance(), None, 176, 10) == 47_716

    def test_job_shape(self):
        jobs = build_clause_pipeline(QAOAInstance(), None, 2, 5)
        assert len(jobs) == 8
        durations = {job.id: job.duration for job in jobs}
        assert durations["r00001.prep"] == 10
        assert durations["r00001.gather"] == 35
        assert durations["r00001.mct"] == 20
        assert durations["r00001.phase"] == 201
        assert all(pool in {p.name for p in CLAUSE_POOLS} for job in jobs for pool in job.demands)

    def test_fractional_bell_rounds_up(self):
        jobs = build_clause_pipeline(QAOAInstance(), None, 1, Fraction(5, 2))
        assert jobs[0].duration == 6

    def test_negative_rounds(self):
        with pytest.raises(ScheduleError):
            build_clause_pipeline(QAOAInstance(), None, -1, 2)

    def test_validate_analytic(self):
        checks = validate_analytic()
        assert [c.simulated_per_round for c in checks] == [221, 236, 271]
        assert all(c.slack == 0 for c in checks)
        assert [c.startup for c in checks] == [4, 10, 20]
        assert checks[-1].simulated_makespan == 47_716
        assert checks[-1].analytic_stage == 47_696

    def test_validate_analytic_single_point(self):
        (check,) = validate_analytic(t_points=(5,))
        assert check.rounds == 176
        assert check.analytic_per_round == 236
