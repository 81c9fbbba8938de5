"""Seeded Monte Carlo estimates of the shifted lattice count.

Shifts are exact dyadic rationals ``(a, b) / 2**32``.  Sample ``i`` is the
``i``-th 64-bit output of a Philox counter-based generator keyed by the
seed, so a shard covering samples ``[start, stop)`` starts its generator at
counter ``start // 4`` and produces the same values whatever the sharding.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .counting import count_shifted, count_via_sides_batch
from .distribution import Pmf
from .geom import IntPolygon, RationalPoint

DENOM_BITS = 32
DENOM = 1 << DENOM_BITS
_MASK = np.uint64(DENOM - 1)
_RETRY_TAG = 0x5EED


class SpotCheckFailed(AssertionError):
    pass


@dataclass(frozen=True)
class SimConfig:
    samples: int
    seed: int = 0
    shards: int = 1
    spot_check_rate: float = 0.01

    def __post_init__(self):
        if self.samples < 1 or self.shards < 1:
            raise ValueError("samples and shards must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class Comparison:
    passed: bool
    z_scores: dict
    max_abs_z: float
    tv_distance: float
    tv_threshold: float
    unexpected_values: list = field(default_factory=list)


@dataclass(frozen=True)
class EmpiricalReport:
    samples: int
    counts: dict  # value -> tally
    mean: float
    variance: float
    resampled: int
    spot_checks: int
    comparison: Comparison | None = None

    def to_json(self) -> dict:
        out = {
            "samples": self.samples,
            "tallies": [[v, c] for v, c in sorted(self.counts.items())],
            "mean": self.mean,
            "variance": self.variance,
            "resampled": self.resampled,
            "spot_checks": self.spot_checks,
        }
        if self.comparison is not None:
            c = self.comparison
            out["comparison"] = {
                "passed": c.passed,
                "z_scores": [[v, z] for v, z in sorted(c.z_scores.items())],
                "max_abs_z": c.max_abs_z,
                "tv_distance": c.tv_distance,
                "tv_threshold": c.tv_threshold,
                "unexpected_values": c.unexpected_values,
            }
        return out

    def to_csv(self) -> str:
        lines = ["value,count"]
        lines += [f"{v},{c}" for v, c in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"


def _raw(seed: int, start: int, stop: int, key_tag: int = 0) -> np.ndarray:
    key = np.array([seed, key_tag], dtype=np.uint64)
    bg = np.random.Philox(key=key, counter=start // 4)
    skip = start % 4
    out = bg.random_raw(stop - start + skip)
    return out[skip:]


def shifts(seed: int, start: int, stop: int):
    """Numerators ``(px, py)`` of samples ``start..stop-1`` over :data:`DENOM`."""
    raw = _raw(seed, start, stop)
    px = (raw & _MASK).astype(np.int64)
    py = (raw >> np.uint64(DENOM_BITS)).astype(np.int64)
    return px, py


def _replacement(seed: int, index: int, attempt: int):
    raw = int(_raw(seed, index, index + 1, key_tag=_RETRY_TAG + attempt)[0])
    return raw & (DENOM - 1), raw >> DENOM_BITS


def _run_shard(P: IntPolygon, seed: int, start: int, stop: int, check_every: int):
    px, py = shifts(seed, start, stop)
    counts, clean = count_via_sides_batch(P, px, py, DENOM)
    resampled = 0
    for j in np.flatnonzero(~clean):
        idx = start + int(j)
        attempt = 0
        while True:
            a, b = _replacement(seed, idx, attempt)
            c, ok = count_via_sides_batch(
                P, np.array([a], dtype=np.int64), np.array([b], dtype=np.int64), DENOM
            )
            attempt += 1
            if ok[0]:
                px[j], py[j], counts[j] = a, b, c[0]
                break
        resampled += 1
    checks = 0
    if check_every:
        first = (-start) % check_every
        for j in range(first, stop - start, check_every):
            x = RationalPoint(Fraction(int(px[j]), DENOM), Fraction(int(py[j]), DENOM))
            direct = count_shifted(P, x)
            if not direct.boundary_clean or direct.count != counts[j]:
                raise SpotCheckFailed(
                    f"sample {start + j}: side formula {counts[j]} vs direct {direct}"
                )
            checks += 1
    values, tallies = np.unique(counts, return_counts=True)
    return dict(zip(values.tolist(), tallies.tolist())), resampled, checks


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("LATTICESHIFT_THREADS", "1")))
    except ValueError:
        return 1


def simulate(P: IntPolygon, cfg: SimConfig, exact: Pmf | None = None) -> EmpiricalReport:
    """Tally ``X_P`` at ``cfg.samples`` pseudo-random shifts.

    Every shift is evaluated with the side formula; about
    ``cfg.spot_check_rate`` of them are recounted directly.  When ``exact``
    is given the report carries a :func:`compare_to_exact` block.
    """
    n = cfg.samples
    bounds = [n * s // cfg.shards for s in range(cfg.shards + 1)]
    check_every = round(1 / cfg.spot_check_rate) if cfg.spot_check_rate > 0 else 0
    jobs = [(P, cfg.seed, bounds[s], bounds[s + 1], check_every)
            for s in range(cfg.shards) if bounds[s] < bounds[s + 1]]
    workers = min(_threads(), len(jobs))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda a: _run_shard(*a), jobs))
    else:
        results = [_run_shard(*a) for a in jobs]
    tally: dict[int, int] = {}
    resampled = checks = 0
    for t, r, c in results:
        for v, k in t.items():
            tally[v] = tally.get(v, 0) + k
        resampled += r
        checks += c
    tally = dict(sorted(tally.items()))
    s1 = sum(v * k for v, k in tally.items())
    mean = Fraction(s1, n)
    var = Fraction(sum(v * v * k for v, k in tally.items()), n) - mean * mean
    report = EmpiricalReport(n, tally, float(mean), float(var), resampled, checks)
    if exact is not None:
        report = EmpiricalReport(n, tally, float(mean), float(var), resampled, checks,
                                 compare_to_exact(report, exact))
    return report


def compare_to_exact(report: EmpiricalReport, pmf: Pmf, z_max: float = 5.0) -> Comparison:
    """Per-value z-scores and total variation distance against ``pmf``.

    Passes iff every ``|z| <= z_max``, the TV distance is at most
    ``5 sqrt(|support| / N)`` and no value outside the support was seen.
    """
    n = report.samples
    probs = pmf.as_dict()
    unexpected = sorted(v for v in report.counts if v not in probs)
    z = {}
    tv = 0.0
    for v in sorted(set(probs) | set(report.counts)):
        p = float(probs.get(v, 0))
        phat = report.counts.get(v, 0) / n
        tv += abs(phat - p)
        sd = math.sqrt(p * (1 - p) / n)
        if sd > 0:
            z[v] = (phat - p) / sd
        else:
            z[v] = 0.0 if phat == p else math.inf
    tv /= 2
    threshold = 5 * math.sqrt(len(probs) / n)
    max_z = max((abs(x) for x in z.values()), default=0.0)
    passed = not unexpected and max_z <= z_max and tv <= threshold
    return Comparison(passed, z, max_z, tv, threshold, unexpected)


def report_json(report: EmpiricalReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True)
