"""Timing comparison of the matrix-power partition against Floyd-Warshall."""
from __future__ import annotations

import csv
import io
import logging
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from .baseline import floyd_warshall_partition, oracle_partition
from .graph import GraphError, Morphology, generate_morphology
from .partition import partition

log = logging.getLogger(__name__)

CSV_COLUMNS = ["N", "NA", "P_target", "P_measured", "seed", "t_fw_ms", "t_new_ms", "speedup", "flag"]

# N in {100, 200, 300}; sparse to dense, shallow to deep (P up to N/4)
DESK_PRESET = [
    Morphology(N, NA, P)
    for N in (100, 200, 300)
    for NA, P in (
        (2 * N, 2),
        (2 * N, N // 10),
        (N * N // 20, 3),
        (int(0.15 * N * N), 2),
        (int(0.15 * N * N), 6),
        (N + N // 10, N // 4),
    )
]


class BenchmarkError(RuntimeError):
    """An algorithm disagreed with the BFS oracle; timings would be meaningless."""


@dataclass(frozen=True)
class BenchmarkRecord:
    morphology: Morphology  # P is the measured depth
    p_target: int
    seed: int
    t_fw: float
    t_new: float
    correct: bool = True

    @property
    def speedup(self) -> float:
        return self.t_fw / self.t_new

    @property
    def flag(self) -> str:
        if self.speedup < 1:
            return "slower"
        if self.speedup >= 10:
            return "10x"
        return ""


def median_time(fn: Callable[[], object], repetitions: int = 3, warmup: int = 1) -> float:
    """Median wall-clock seconds of ``fn()`` over ``repetitions`` runs after ``warmup`` runs."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    for _ in range(warmup):
        fn()
    samples = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def run_benchmark(
    specs: Iterable[Morphology],
    seeds: int = 1,
    repetitions: int = 3,
    threads: int | None = None,
    base_seed: int = 0,
) -> list[BenchmarkRecord]:
    records = []
    for spec in specs:
        spec.validate()
        for s in range(seeds):
            seed = base_seed + s
            g = generate_morphology(spec, seed)
            expected = oracle_partition(g)
            for name, got in (
                ("matrix-power", partition(g, threads=threads)),
                ("floyd-warshall", floyd_warshall_partition(g)),
            ):
                if got != expected:
                    raise BenchmarkError(
                        f"{name} disagrees with BFS oracle on {spec} seed={seed}: "
                        f"radius {got.radius} vs {expected.radius}"
                    )
            t_fw = median_time(lambda: floyd_warshall_partition(g), repetitions)
            t_new = median_time(lambda: partition(g, threads=threads), repetitions)
            rec = BenchmarkRecord(Morphology(g.n, g.num_edges, expected.depth), spec.P, seed, t_fw, t_new)
            log.info("%s seed=%d P=%d fw=%.2fms new=%.2fms", spec, seed, expected.depth, t_fw * 1e3, t_new * 1e3)
            records.append(rec)
    return records


def parse_spec_file(text: str) -> list[Morphology]:
    """One ``N NA P`` triple per line (commas or whitespace); ``#`` starts a comment."""
    specs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if not line:
            continue
        try:
            N, NA, P = (int(x) for x in line.split())
        except ValueError:
            raise GraphError(f"line {lineno}: expected three integers 'N NA P'") from None
        specs.append(Morphology(N, NA, P))
    return specs


def _row(r: BenchmarkRecord) -> list:
    m = r.morphology
    return [m.N, m.NA, r.p_target, m.P, r.seed, f"{r.t_fw * 1e3:.3f}", f"{r.t_new * 1e3:.3f}", f"{r.speedup:.3f}", r.flag]


def emit_table(records: list[BenchmarkRecord], format: str = "markdown", threads: int | None = None) -> str:
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(_row(r) for r in records)
        return buf.getvalue()
    if format != "markdown":
        raise ValueError(f"unknown format {format!r}")
    lines = []
    if threads is not None:
        lines += [f"Median timings in ms, threads={threads}.", ""]
    lines += [
        "| Graph morphology | Floyd-Warshall (ms) | New algorithm (ms) | Speedup | Flag |",
        "|---|---|---|---|---|",
    ]
    for r in records:
        m = r.morphology
        lines.append(
            f"| N={m.N}, NA={m.NA}, P={m.P} (target {r.p_target}) "
            f"| {r.t_fw * 1e3:.3f} | {r.t_new * 1e3:.3f} | {r.speedup:.2f} | {r.flag} |"
        )
    return "\n".join(lines) + "\n"


def read_csv_table(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))
