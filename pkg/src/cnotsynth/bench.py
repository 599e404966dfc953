"""Paired gate-count benchmark: sectioned synthesis vs. Gaussian elimination."""

from __future__ import annotations

import csv
import hashlib
import io
import time
from dataclasses import dataclass
from typing import Callable, TextIO

from .gf2 import random_invertible
from .synth import MAX_SECTION_WIDTH, cnot_synth_pmh, default_section_size, gaussian_synth, verify

DEFAULT_SIZES = (4, 8, 16, 32, 64, 128)

CSV_FIELDS = (
    "n",
    "m",
    "trials",
    "seed",
    "mean_gates_pmh",
    "mean_gates_gauss",
    "mean_nanos_pmh",
    "mean_nanos_gauss",
)


class BenchError(RuntimeError):
    pass


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = DEFAULT_SIZES
    trials: int = 100
    seed: int = 0
    m_override: int | None = None

    def validate(self) -> None:
        if not self.sizes:
            raise ValueError("sizes must be nonempty")
        if any(n < 2 for n in self.sizes):
            raise ValueError(f"every size must be >= 2, got {list(self.sizes)}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.m_override is not None and self.m_override < 1:
            raise ValueError(f"m must be >= 1, got {self.m_override}")


@dataclass
class BenchRecord:
    n: int
    m: int
    trials: int
    seed: int
    mean_gates_pmh: float
    mean_gates_gauss: float
    mean_nanos_pmh: float
    mean_nanos_gauss: float


def trial_seed(seed: int, n: int, trial: int) -> int:
    """64-bit matrix seed for one trial; depends only on its arguments."""
    digest = hashlib.blake2b(f"{seed}:{n}:{trial}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def _timed(fn: Callable, *args):
    start = time.perf_counter_ns()
    result = fn(*args)
    return result, time.perf_counter_ns() - start


def run_benchmark(config: BenchConfig) -> list[BenchRecord]:
    """Run both synthesizers on the same random matrices for every size.

    Every circuit is checked against its matrix before being counted.

    Raises:
        BenchError: if a synthesized circuit does not reproduce its matrix.
    """
    config.validate()
    records = []
    for n in config.sizes:
        m = min(config.m_override or default_section_size(n), n, MAX_SECTION_WIDTH)
        gates_pmh = gates_gauss = 0
        nanos_pmh = nanos_gauss = 0
        for t in range(config.trials):
            mseed = trial_seed(config.seed, n, t)
            A = random_invertible(n, mseed)
            (circ_pmh, _), dt_pmh = _timed(cnot_synth_pmh, A, m)
            (circ_gauss, _), dt_gauss = _timed(gaussian_synth, A)
            for method, circ in (("pmh", circ_pmh), ("gauss", circ_gauss)):
                if not verify(A, circ):
                    raise BenchError(
                        f"{method} circuit does not match matrix (n={n}, trial={t}, matrix seed={mseed})"
                    )
            gates_pmh += len(circ_pmh)
            gates_gauss += len(circ_gauss)
            nanos_pmh += dt_pmh
            nanos_gauss += dt_gauss
        k = config.trials
        records.append(
            BenchRecord(
                n=n,
                m=m,
                trials=k,
                seed=config.seed,
                mean_gates_pmh=gates_pmh / k,
                mean_gates_gauss=gates_gauss / k,
                mean_nanos_pmh=nanos_pmh / k,
                mean_nanos_gauss=nanos_gauss / k,
            )
        )
    return records


def _format_real(value: float) -> str:
    return f"{value:.6g}"


def _format_mean_gates(value: float) -> str:
    # 6 significant digits unless that would lose the exact mean
    text = f"{value:.6g}"
    return text if float(text) == value else repr(value)


def write_csv(records: list[BenchRecord], sink: TextIO | None = None) -> str:
    """Render records as CSV, write to ``sink`` if given, and return the text."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow(
            [
                r.n,
                r.m,
                r.trials,
                r.seed,
                _format_mean_gates(r.mean_gates_pmh),
                _format_mean_gates(r.mean_gates_gauss),
                _format_real(r.mean_nanos_pmh),
                _format_real(r.mean_nanos_gauss),
            ]
        )
    text = buf.getvalue()
    if sink is not None:
        sink.write(text)
    return text


def read_csv(text: str) -> list[BenchRecord]:
    """Parse CSV produced by :func:`write_csv` back into records."""
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header: {reader.fieldnames}")
    return [
        BenchRecord(
            n=int(row["n"]),
            m=int(row["m"]),
            trials=int(row["trials"]),
            seed=int(row["seed"]),
            mean_gates_pmh=float(row["mean_gates_pmh"]),
            mean_gates_gauss=float(row["mean_gates_gauss"]),
            mean_nanos_pmh=float(row["mean_nanos_pmh"]),
            mean_nanos_gauss=float(row["mean_nanos_gauss"]),
        )
        for row in reader
    ]
