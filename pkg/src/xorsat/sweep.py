"""Seeded Monte Carlo sweeps of satisfiability probability versus L/n.

Reproducibility contract: trial ``t`` of sweep point ``p`` draws its
formula from PCG64 seeded with ``SeedSequence(entropy=seed,
spawn_key=(p, t))``.  Every trial owns its stream, so results are
byte-identical for a fixed (seed, config) regardless of thread count or
scheduling; aggregation is plain integer addition over fixed chunks.
"""

from __future__ import annotations

import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from .model import ModelDomainError

#: two-sided 95% normal quantile, for the Wilson score interval
Z95 = 1.959963984540054

CSV_HEADER = "k,n,L,ratio,samples,sat_count,proportion,ci_low,ci_high"


class NoCrossingError(ValueError):
    """The sweep points never cross proportion 0.5."""


@dataclass(frozen=True)
class SweepPoint:
    """One Monte Carlo measurement at a fixed (n, L)."""

    n: int
    L: int
    ratio: float
    sat_count: int
    samples: int
    proportion: float
    ci_low: float
    ci_high: float


@dataclass(frozen=True)
class SweepConfig:
    """Protocol for a sweep: widths, ratio grid, sample count, seed."""

    k: int
    n_values: tuple[int, ...]
    ratio_start: float
    ratio_end: float
    ratio_step: float
    samples_per_point: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        if self.k < 3:
            raise ModelDomainError(f"clause width must be >= 3, got {self.k}")
        if not self.n_values:
            raise ValueError("n_values must be non-empty")
        for n in self.n_values:
            if n < self.k:
                raise ModelDomainError(f"n={n} smaller than clause width k={self.k}")
        if self.ratio_step <= 0:
            raise ValueError("ratio_step must be positive")
        if self.ratio_start > self.ratio_end:
            raise ValueError("ratio_start must be <= ratio_end")
        if self.samples_per_point < 1:
            raise ValueError("samples_per_point must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    def ratios(self) -> list[float]:
        """Grid start, start+step, ...; the end is included when within half a step."""
        out = []
        i = 0
        while True:
            r = self.ratio_start + i * self.ratio_step
            if r > self.ratio_end + 0.5 * self.ratio_step:
                break
            out.append(r)
            i += 1
        return out

    def points(self) -> list[tuple[int, float, int]]:
        """(n, ratio, L) in configuration order; L = round(ratio * n), half-to-even."""
        return [
            (n, ratio, int(round(ratio * n)))
            for n in self.n_values
            for ratio in self.ratios()
        ]

    def to_json(self, indent: int | None = None) -> str:
        d = asdict(self)
        d["n_values"] = list(d["n_values"])
        return json.dumps(d, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "SweepConfig":
        d = json.loads(text)
        return cls(
            k=d["k"],
            n_values=tuple(d["n_values"]),
            ratio_start=d["ratio_start"],
            ratio_end=d["ratio_end"],
            ratio_step=d["ratio_step"],
            samples_per_point=d["samples_per_point"],
            seed=d["seed"],
        )


def wilson_interval(successes: int, samples: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval; well behaved at proportions near 0 and 1."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not 0 <= successes <= samples:
        raise ValueError("successes out of [0, samples]")
    p = successes / samples
    z2 = z * z
    denom = 1.0 + z2 / samples
    center = (p + z2 / (2 * samples)) / denom
    half = (z / denom) * math.sqrt(p * (1 - p) / samples + z2 / (4 * samples * samples))
    # the interval brackets p exactly in real arithmetic; enforce it
    # against float rounding at p = 0 and p = 1
    return max(0.0, min(p, center - half)), min(1.0, max(p, center + half))


def point_stream(seed: int, point_index: int) -> np.random.SeedSequence:
    """Root stream for one sweep point."""
    return np.random.SeedSequence(entropy=seed, spawn_key=(point_index,))


def trial_generator(stream: np.random.SeedSequence, trial: int) -> np.random.Generator:
    """PCG64 generator for one trial, derived from the point stream."""
    child = np.random.SeedSequence(entropy=stream.entropy, spawn_key=(*stream.spawn_key, trial))
    return np.random.Generator(np.random.PCG64(child))


def run_point(
    n: int,
    L: int,
    k: int,
    samples: int,
    stream: np.random.SeedSequence,
    threads: int = 1,
    ratio: Optional[float] = None,
) -> SweepPoint:
    """Estimate P(SAT) at one (n, L) from ``samples`` i.i.d. formulas.

    ``ratio`` defaults to L/n; sweeps pass the configured grid value.
    """
    if k < 3 or k > n:
        raise ModelDomainError(f"clause width must satisfy 3 <= k <= n, got k={k}, n={n}")
    if L < 0:
        raise ModelDomainError(f"clause count must be >= 0, got {L}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    from . import _kernels  # deferred: importing numba is slow

    def chunk_count(bounds: tuple[int, int]) -> int:
        lo, hi = bounds
        count = 0
        for t in range(lo, hi):
            if _kernels.sat_trial(trial_generator(stream, t), n, L, k):
                count += 1
        return count

    if threads <= 1:
        sat = chunk_count((0, samples))
    else:
        size = max(1, math.ceil(samples / (threads * 4)))
        chunks = [(lo, min(lo + size, samples)) for lo in range(0, samples, size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sat = sum(pool.map(chunk_count, chunks))
    proportion = sat / samples
    lo, hi = wilson_interval(sat, samples)
    return SweepPoint(
        n=n,
        L=L,
        ratio=L / n if ratio is None else ratio,
        sat_count=sat,
        samples=samples,
        proportion=proportion,
        ci_low=lo,
        ci_high=hi,
    )


def run_sweep(cfg: SweepConfig, threads: Optional[int] = None) -> list[SweepPoint]:
    """One SweepPoint per (n, ratio) pair, in configuration order."""
    if threads is None:
        threads = os.cpu_count() or 1
    out = []
    for index, (n, ratio, L) in enumerate(cfg.points()):
        out.append(
            run_point(
                n=n,
                L=L,
                k=cfg.k,
                samples=cfg.samples_per_point,
                stream=point_stream(cfg.seed, index),
                threads=threads,
                ratio=ratio,
            )
        )
    return out


def estimate_crossing(points: Sequence[SweepPoint]) -> float:
    """Ratio at which the proportion curve crosses 0.5, linearly interpolated.

    Uses the last point with proportion >= 0.5 and the first point below
    0.5 after it; an exact 0.5 hit returns that point's ratio.  Points
    must be sorted by ratio (one n per call).
    """
    if not points:
        raise NoCrossingError("no points given")
    ratios = [p.ratio for p in points]
    if any(b < a for a, b in zip(ratios, ratios[1:])):
        raise ValueError("points must be sorted by ratio")
    above = [i for i, p in enumerate(points) if p.proportion >= 0.5]
    if not above:
        raise NoCrossingError("no point with proportion >= 0.5")
    i = above[-1]
    if points[i].proportion == 0.5:
        return points[i].ratio
    if i + 1 >= len(points):
        raise NoCrossingError("no point below 0.5 after the last point above it")
    hi, lo = points[i], points[i + 1]
    frac = (hi.proportion - 0.5) / (hi.proportion - lo.proportion)
    return hi.ratio + frac * (lo.ratio - hi.ratio)


# -- CSV schema --------------------------------------------------------


def format_csv(points: Iterable[SweepPoint], k: int) -> str:
    """Render the documented CSV schema; ratios to 4 decimals."""
    lines = [CSV_HEADER]
    for p in points:
        lines.append(
            f"{k},{p.n},{p.L},{p.ratio:.4f},{p.samples},{p.sat_count},"
            f"{p.proportion:.6f},{p.ci_low:.6f},{p.ci_high:.6f}"
        )
    return "\n".join(lines) + "\n"


def write_csv(points: Iterable[SweepPoint], k: int, fp: TextIO) -> None:
    fp.write(format_csv(points, k))


def read_csv(fp: TextIO) -> tuple[int, list[SweepPoint]]:
    """Parse the sweep CSV back into (k, points); validates the header."""
    text = fp.read() if hasattr(fp, "read") else fp
    lines = [ln for ln in io.StringIO(text).read().splitlines() if ln.strip()]
    if not lines or lines[0] != CSV_HEADER:
        found = lines[0] if lines else "<empty>"
        raise ValueError(f"bad CSV header {found!r}, expected {CSV_HEADER!r}")
    ks = set()
    points = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 9:
            raise ValueError(f"bad CSV row {ln!r}")
        ks.add(int(parts[0]))
        points.append(
            SweepPoint(
                n=int(parts[1]),
                L=int(parts[2]),
                ratio=float(parts[3]),
                samples=int(parts[4]),
                sat_count=int(parts[5]),
                proportion=float(parts[6]),
                ci_low=float(parts[7]),
                ci_high=float(parts[8]),
            )
        )
    if len(ks) > 1:
        raise ValueError(f"mixed clause widths in CSV: {sorted(ks)}")
    return (ks.pop() if ks else 0, points)
