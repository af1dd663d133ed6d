"""Seeded random inputs and the law-checking campaign.

Entries are drawn from a small integer lattice with configurable ghost and
zero probabilities: a tight lattice makes ties (and therefore ghosts)
frequent, which is where the interesting behavior is. Every trial derives
its own generator from the campaign seed and trial index, so any reported
violation can be reproduced from the summary alone.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product

from .errors import DomainError
from .matrix import Matrix
from .polynomial import Polynomial
from .scalar import Kind, Scalar, ZERO, tangible
from .spectral import (
    Verdict,
    check_charpoly_power,
    check_corner_root_power,
    check_det_rule,
    check_eigenpair,
    check_tangible_equality,
    check_trace_power,
    eigenvalues,
)

CAMPAIGN_CHECKS = ("thm13", "thm36", "cor37", "cor38", "trace")


@dataclass(frozen=True)
class Config:
    """Campaign shape; the seed fully determines every generated input."""

    trials: int = 100
    seed: int = 0
    min_n: int = 2
    max_n: int = 4
    min_m: int = 2
    max_m: int = 3
    value_min: int = -5
    value_max: int = 5
    ghost_prob: float = 0.2
    zero_prob: float = 0.05
    det_bound: int | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError("trials must be at least 1")
        if not 1 <= self.min_n <= self.max_n:
            raise DomainError("need 1 <= min_n <= max_n")
        if not 1 <= self.min_m <= self.max_m:
            raise DomainError("need 1 <= min_m <= max_m")
        if self.value_min > self.value_max:
            raise DomainError("empty value lattice")
        if not (0 <= self.ghost_prob <= 1 and 0 <= self.zero_prob <= 1):
            raise DomainError("probabilities must lie in [0, 1]")


def trial_seed(seed: int, trial: int) -> str:
    return f"{seed}:{trial}"


def random_scalar(rng: random.Random, cfg: Config, allow_zero: bool = True) -> Scalar:
    if allow_zero and rng.random() < cfg.zero_prob:
        return ZERO
    value = rng.randint(cfg.value_min, cfg.value_max)
    kind = Kind.GHOST if rng.random() < cfg.ghost_prob else Kind.TANGIBLE
    return Scalar(kind, Fraction(value))


def random_matrix(rng: random.Random, n: int, cfg: Config) -> Matrix:
    return Matrix(
        tuple(tuple(random_scalar(rng, cfg) for _ in range(n)) for _ in range(n))
    )


def random_polynomial(rng: random.Random, max_degree: int, cfg: Config) -> Polynomial:
    """Random nonzero polynomial with a guaranteed nonzero leading term."""
    degree = rng.randint(1, max_degree)
    coeffs = [random_scalar(rng, cfg) for _ in range(degree)]
    coeffs.append(random_scalar(rng, cfg, allow_zero=False))
    return Polynomial(tuple(coeffs))


def search_eigenpairs(
    a: Matrix,
    lattice: range = range(-3, 4),
    bound: int | None = None,
    max_results: int | None = 1,
) -> list[tuple[tuple[Scalar, ...], Scalar]]:
    """Exhaustive grid search for tangible eigenpairs: candidate vectors are
    drawn from the lattice, candidate values from the corner roots."""
    found = []
    values = [v for v, _ in eigenvalues(a, bound).eigenvalues]
    for x in values:
        for combo in product(lattice, repeat=a.n):
            v = tuple(tangible(c) for c in combo)
            if check_eigenpair(a, v, x).holds:
                found.append((v, x))
                if max_results is not None and len(found) >= max_results:
                    return found
    return found


@dataclass
class CampaignResult:
    config: Config
    tallies: dict[str, dict[str, int]]
    violations: list[dict]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "config": {k: v for k, v in asdict(self.config).items()},
            "results": self.tallies,
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


def _run_trial_checks(a: Matrix, b: Matrix, m: int, bound, checks) -> dict[str, Verdict]:
    out = {}
    if "thm36" in checks:
        out["thm36"] = check_charpoly_power(a, m, bound)
    if "thm13" in checks:
        out["thm13"] = check_det_rule(a, b, bound)
    if "cor37" in checks:
        out["cor37"] = check_tangible_equality(a, m, bound)
    if "cor38" in checks:
        out["cor38"] = check_corner_root_power(a, m, bound)
    if "trace" in checks:
        out["trace"] = check_trace_power(a, m)
    return out


def run_campaign(cfg: Config, checks: tuple[str, ...] = CAMPAIGN_CHECKS) -> CampaignResult:
    tallies = {c: {"pass": 0, "fail": 0, "na": 0} for c in checks}
    violations: list[dict] = []
    for trial in range(cfg.trials):
        rng = random.Random(trial_seed(cfg.seed, trial))
        n = rng.randint(cfg.min_n, cfg.max_n)
        m = rng.randint(cfg.min_m, cfg.max_m)
        a = random_matrix(rng, n, cfg)
        b = random_matrix(rng, n, cfg)
        for name, verdict in _run_trial_checks(a, b, m, cfg.det_bound, checks).items():
            if verdict.holds is None:
                tallies[name]["na"] += 1
            elif verdict.holds:
                tallies[name]["pass"] += 1
            else:
                tallies[name]["fail"] += 1
                violations.append(
                    {
                        "trial": trial,
                        "seed": trial_seed(cfg.seed, trial),
                        "check": name,
                        "verdict": verdict.to_json_dict(),
                    }
                )
    return CampaignResult(cfg, tallies, violations)
