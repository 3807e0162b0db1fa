"""Benchmark sweeps over random instances, emitted as CSV records."""
from __future__ import annotations

import csv
import io
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterable, Mapping, Sequence

from .bounds import lower_bound
from .generators import gen_erdos_renyi, gen_k_regular
from .solvers import PIPELINES, is_fvs

GENERATORS = ("er", "kreg")


@dataclass(frozen=True)
class BenchRecord:
    generator: str
    n: int
    param: float
    seed: int
    algorithm: str
    fvs_size: int
    lower_bound: int
    ratio: float
    wall_ms: float

    def csv_row(self) -> list[str]:
        return [
            self.generator,
            str(self.n),
            repr(float(self.param)),
            str(self.seed),
            self.algorithm,
            str(self.fvs_size),
            str(self.lower_bound),
            f"{self.ratio:.6f}",
            f"{self.wall_ms:.3f}",
        ]


CSV_COLUMNS = tuple(f.name for f in fields(BenchRecord))


@dataclass(frozen=True)
class BenchConfig:
    """One sweep: ``reps`` instances per parameter value, every algorithm on each.

    ``params`` are edge probabilities for ``er`` and degrees for ``kreg``.
    For ``er`` the sweep may instead be given as ``expected_degrees``, which
    is turned into ``p = degree / n``.
    """

    generator: str
    n: int
    params: tuple[float, ...]
    reps: int
    seed_base: int = 0
    algorithms: tuple[str, ...] = tuple(PIPELINES)

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.n < 1 or self.reps < 1:
            raise ValueError("invalid sweep: n and reps must be positive")
        if not self.params:
            raise ValueError("invalid sweep: no parameter values")
        if not self.algorithms:
            raise ValueError("invalid sweep: no algorithms")
        bad = [a for a in self.algorithms if a not in PIPELINES]
        if bad:
            raise ValueError(f"invalid sweep: unknown algorithms {bad}")
        for p in self.params:
            if self.generator == "er" and not 0.0 <= p <= 1.0:
                raise ValueError(f"invalid sweep: p={p} outside [0, 1]")
            if self.generator == "kreg" and (p != int(p) or not 1 <= p < self.n):
                raise ValueError(f"invalid sweep: k={p} must be an integer in [1, n)")

    @classmethod
    def from_dict(cls, raw: Mapping) -> BenchConfig:
        raw = dict(raw)
        n = int(raw["n"])
        if "expected_degrees" in raw:
            if raw.get("generator") != "er":
                raise ValueError("invalid sweep: expected_degrees only applies to er")
            params = tuple(float(d) / n for d in raw.pop("expected_degrees"))
        else:
            params = tuple(float(p) for p in raw.pop("params", ()))
        return cls(
            generator=raw["generator"],
            n=n,
            params=params,
            reps=int(raw["reps"]),
            seed_base=int(raw.get("seed_base", 0)),
            algorithms=tuple(raw.get("algorithms", PIPELINES)),
        )


def make_instance(generator: str, n: int, param: float, seed: int):
    if generator == "er":
        return gen_erdos_renyi(n, param, seed)
    return gen_k_regular(n, int(param), seed)


def _run_instance(job) -> list[BenchRecord]:
    generator, n, param, seed, algorithms, timing = job
    g = make_instance(generator, n, param, seed)
    records = []
    for algo in algorithms:
        start = time.perf_counter()
        result = PIPELINES[algo](g)
        elapsed = (time.perf_counter() - start) * 1e3 if timing else 0.0
        if not is_fvs(g, result.final):
            raise RuntimeError(f"{algo} returned a non-FVS on {generator} n={n} seed={seed}")
        cert = lower_bound(g, result.final)
        records.append(
            BenchRecord(generator, n, param, seed, algo, result.size, cert.t, cert.ratio, elapsed)
        )
    return records


def default_workers() -> int:
    env = os.environ.get("FVS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_benchmark(
    config: BenchConfig, workers: int | None = None, timing: bool = True
) -> list[BenchRecord]:
    """Run the sweep; records come out in (param, rep, algorithm) order.

    With ``timing=False`` every ``wall_ms`` is 0 so the output depends only
    on the configuration.
    """
    jobs = [
        (config.generator, config.n, param, config.seed_base + rep, config.algorithms, timing)
        for param in config.params
        for rep in range(config.reps)
    ]
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(jobs) == 1:
        batches = map(_run_instance, jobs)
        return [r for batch in batches for r in batch]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        batches = pool.map(_run_instance, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
        return [r for batch in batches for r in batch]


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.csv_row())
    return buf.getvalue()


def records_from_csv(text: str) -> list[BenchRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {header}")
    out = []
    for row in reader:
        if not row:
            continue
        g, n, param, seed, algo, size, lb, ratio, ms = row
        out.append(
            BenchRecord(g, int(n), float(param), int(seed), algo, int(size), int(lb),
                        float(ratio), float(ms))
        )
    return out


SUMMARY_COLUMNS = (
    "generator", "n", "param", "algorithm", "instances",
    "mean_fvs_size", "mean_lower_bound", "mean_ratio", "max_ratio", "mean_wall_ms",
)


def summarize(records: Sequence[BenchRecord]) -> str:
    """Mean of ratios (and sizes, bounds, times) per (generator, n, param, algorithm)."""
    groups: dict[tuple, list[BenchRecord]] = defaultdict(list)
    for rec in records:
        groups[(rec.generator, rec.n, rec.param, rec.algorithm)].append(rec)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for (gen, n, param, algo), recs in groups.items():
        k = len(recs)
        writer.writerow([
            gen, n, repr(float(param)), algo, k,
            f"{sum(r.fvs_size for r in recs) / k:.4f}",
            f"{sum(r.lower_bound for r in recs) / k:.4f}",
            f"{sum(r.ratio for r in recs) / k:.6f}",
            f"{max(r.ratio for r in recs):.6f}",
            f"{sum(r.wall_ms for r in recs) / k:.3f}",
        ])
    return buf.getvalue()
