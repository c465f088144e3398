"""Prime-knot regression, scaling benchmarks and the colorability survey."""

from __future__ import annotations

import csv
import io
import itertools
import math
import platform
import random
import timeit
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional, Sequence

from .errors import EvenPetalNumber, InternalInconsistency, InvalidPetalNumber, NotPrime
from .exactdet import SURVEY_PRIMES, knot_determinant
from .numtheory import is_prime
from .permutation import PetalPermutation, random_permutation, validate

EXHAUSTIVE_THRESHOLD = 1000
DEFAULT_SAMPLES = 1000


@dataclass(frozen=True)
class KnotFixture:
    name: str
    petal_number: int
    permutation: tuple[int, ...]
    expected_determinant: int


@dataclass(frozen=True)
class RegressionResult:
    fixture: KnotFixture
    computed: int

    @property
    def passed(self) -> bool:
        return self.computed == self.fixture.expected_determinant


def load_fixtures() -> list[KnotFixture]:
    """The prime knots below 10 crossings with minimal petal permutations."""
    text = resources.files("petalknots").joinpath("data/prime_knots.csv").read_text()
    fixtures = []
    for row in csv.DictReader(io.StringIO(text)):
        perm = tuple(int(x) for x in row["permutation"].split(","))
        fixtures.append(KnotFixture(row["knot"], int(row["petal_number"]), perm,
                                    int(row["determinant"])))
    return fixtures


def regression_suite(fixtures: Optional[Sequence[KnotFixture]] = None) -> list[RegressionResult]:
    if fixtures is None:
        fixtures = load_fixtures()
    return [RegressionResult(f, knot_determinant(f.permutation)) for f in fixtures]


def regression_csv(results: Sequence[RegressionResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["knot", "petal_number", "permutation", "expected", "computed", "passed"])
    for r in results:
        f = r.fixture
        w.writerow([f.name, f.petal_number, ",".join(map(str, f.permutation)),
                    f.expected_determinant, r.computed, r.passed])
    return buf.getvalue()


def _check_odd(p: int) -> None:
    if p % 2 == 0:
        raise EvenPetalNumber(f"petal number {p} is even")
    if p < 1:
        raise InvalidPetalNumber(f"petal number must be positive, got {p}")


@dataclass
class BenchResult:
    p: int
    mode: str
    runtimes_ms: list[float]
    determinants: list[int]
    seed: Optional[int] = None
    host: str = field(default_factory=lambda: f"{platform.platform()} {platform.processor()}".strip())

    @property
    def min_ms(self) -> float:
        return min(self.runtimes_ms)

    @property
    def mean_ms(self) -> float:
        return sum(self.runtimes_ms) / len(self.runtimes_ms)

    def to_json(self) -> dict:
        return {
            "p": self.p, "mode": self.mode, "runs": len(self.runtimes_ms),
            "seed": self.seed, "min_ms": self.min_ms, "mean_ms": self.mean_ms,
            "runtimes_ms": self.runtimes_ms,
            "determinants": [str(d) for d in self.determinants],
            "host": self.host,
        }


def bench(p: int, mode: str = "identity", runs: int = 10, seed: Optional[int] = None) -> BenchResult:
    """Time knot_determinant on the identity permutation or random ones.

    Identity runs must always give 1, since that projection cancels down to
    the unknot.  Timings are wall-clock and only reported.
    """
    _check_odd(p)
    if mode not in ("identity", "random"):
        raise ValueError(f"unknown bench mode {mode!r}")
    if runs < 1:
        raise ValueError("runs must be positive")
    rng = random.Random(seed)
    times, dets = [], []
    for _ in range(runs):
        if mode == "identity":
            perm = PetalPermutation(tuple(range(1, p + 1)))
        else:
            perm = random_permutation(p, rng)
        start = timeit.default_timer()
        det = knot_determinant(perm)
        times.append(1000 * (timeit.default_timer() - start))
        if mode == "identity" and det != 1:
            raise InternalInconsistency(f"identity permutation of length {p} gave determinant {det}")
        dets.append(det)
    return BenchResult(p, mode, times, dets, seed)


@dataclass(frozen=True)
class SurveyRow:
    n: int
    samples: int
    mode: str
    primes: tuple[int, ...]
    nc_count: int
    prime_counts: dict
    seed: Optional[int] = None

    @property
    def nc_percent(self) -> float:
        return 100 * self.nc_count / self.samples

    @property
    def per_prime_percent(self) -> dict:
        return {q: 100 * c / self.samples for q, c in self.prime_counts.items()}

    def to_json(self) -> dict:
        return {
            "n": self.n, "samples": self.samples, "mode": self.mode, "seed": self.seed,
            "nc_count": self.nc_count, "nc_percent": round(self.nc_percent, 1),
            "prime_counts": {str(q): c for q, c in self.prime_counts.items()},
            "per_prime_percent": {str(q): round(v, 1) for q, v in self.per_prime_percent.items()},
        }


def sample_permutations(n: int, samples: int, seed) -> list[PetalPermutation]:
    """One independent stream per sample index, derived from (seed, index)."""
    return [random_permutation(n, random.Random(f"{seed}/{i}")) for i in range(samples)]


def survey(n: int, samples: int = DEFAULT_SAMPLES, primes: Sequence[int] = SURVEY_PRIMES,
           seed: Optional[int] = None, threshold: int = EXHAUSTIVE_THRESHOLD) -> SurveyRow:
    """Share of petal permutations of length n whose determinant each prime divides.

    Every permutation is tested when n! < threshold; otherwise ``samples``
    seeded random permutations are drawn.
    """
    _check_odd(n)
    primes = tuple(primes)
    for q in primes:
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
    if math.factorial(n) < threshold:
        perms = [validate(pm) for pm in itertools.permutations(range(1, n + 1))]
        mode = "exhaustive"
    else:
        if seed is None:
            seed = random.randrange(2**32)
        perms = sample_permutations(n, samples, seed)
        mode = "sampled"
    counts = {q: 0 for q in primes}
    nc = 0
    for perm in perms:
        det = knot_determinant(perm)
        hit = False
        for q in primes:
            if det % q == 0:
                counts[q] += 1
                hit = True
        nc += not hit
    return SurveyRow(n, len(perms), mode, primes, nc, counts,
                     seed if mode == "sampled" else None)


def survey_csv(rows: Sequence[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    primes = rows[0].primes if rows else SURVEY_PRIMES
    w.writerow(["n", "samples", "mode", "seed", "NC"] + [str(q) for q in primes])
    for r in rows:
        pct = r.per_prime_percent
        w.writerow([r.n, r.samples, r.mode, "" if r.seed is None else r.seed,
                    f"{r.nc_percent:.1f}"] + [f"{pct[q]:.1f}" for q in r.primes])
    return buf.getvalue()
