"""Instance generation, randomized suites, and counterexample search.

Everything here is deterministic under a master seed: per-trial seeds
are derived arithmetically from (seed, trial index), so suites can be
replayed and reports compared byte for byte.  Entry magnitudes stay
small (numerators in [-5, 5], denominators in {1, 2, 3}) to keep exact
arithmetic growth polynomial at the supported sizes (n <= 8).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

import random

from .errors import InvalidSpec, NoMPInverse
from .laws import (
    COMMUTE_SIDE,
    EQUIVALENT,
    INCONCLUSIVE,
    SAMPLED_STATEMENT,
    STATEMENTS,
    VIOLATION,
    EquivalenceReport,
    LawContext,
    LawId,
    check_equivalence,
    inclusion_statement_sampled,
    law_statement,
)
from .errors import HypothesisNotMet
from .matrices import Matrix, matrix_to_json, domain_to_json, random_matrix, rank
from .peirce import matrix_equation_basis, random_combination, sample_commutant
from .scalars import ScalarDomain

MAX_SIZE = 8
_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class InstanceSpec:
    """Parameters for one generated (a, b, c) triple."""

    domain: ScalarDomain
    size: int
    rank_a: int | None = None
    rank_b: int | None = None
    weight_mode: str = "identity"  # identity | scalar | commutant
    weight_scalar: object = None  # fixed scalar for "scalar" mode; None = random
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.size, int) or not 1 <= self.size <= MAX_SIZE:
            raise InvalidSpec(f"size must be in 1..{MAX_SIZE}, got {self.size}")
        for name in ("rank_a", "rank_b"):
            val = getattr(self, name)
            if val is not None and not 0 <= val <= self.size:
                raise InvalidSpec(f"{name} must be in 0..{self.size}, got {val}")
        if self.weight_mode not in ("identity", "scalar", "commutant"):
            raise InvalidSpec(f"unknown weight_mode {self.weight_mode!r}")


def random_matrix_of_rank(domain, rows, cols, target_rank, rng) -> Matrix:
    """Product of full-rank factors, resampled until the rank is exact."""
    if target_rank == 0:
        return Matrix.zeros(rows, cols, domain)
    for _ in range(1000):
        u = random_matrix(domain, rows, target_rank, rng)
        v = random_matrix(domain, target_rank, cols, rng)
        a = u @ v
        if rank(a) == target_rank:
            return a
    raise InvalidSpec(f"cannot hit rank {target_rank} for {rows}x{cols} over {domain.name}")


def _nonzero_scalar(domain, rng):
    for _ in range(64):
        s = domain.sample(rng)
        if not s.is_zero():
            return s
    return domain.one()


def _constrained_weight(m: Matrix, ab: Matrix, rng) -> Matrix:
    """Weight for the four-way laws: c = e + y with y commuting with m and
    m*, y ab = 0 and (ab)* y = 0 (the latter is c* ab = ab).  Falls back
    to c = e when the solution space is trivial."""
    n = m.rows
    basis = matrix_equation_basis(
        n, m.domain,
        commute_with=(m, m.star()),
        left_zero=(ab.star(),),
        right_zero=(ab,),
    )
    e = Matrix.identity(n, m.domain)
    if not basis:
        return e
    y = random_combination(basis, m.domain, rng)
    return e + y


def gen_instance(spec: InstanceSpec, law: LawId | None = None):
    """Deterministic (a, b, c) triple for the spec (and target law, which
    fixes the side c must commute with)."""
    rng = random.Random(spec.seed)
    n = spec.size
    rank_a = spec.rank_a if spec.rank_a is not None else rng.randint(0, n)
    rank_b = spec.rank_b if spec.rank_b is not None else rng.randint(0, n)
    a = random_matrix_of_rank(spec.domain, n, n, rank_a, rng)
    b = random_matrix_of_rank(spec.domain, n, n, rank_b, rng)

    mode = spec.weight_mode
    if law == LawId.C27 and mode == "commutant":
        raise InvalidSpec("C27 takes a scalar weight; use weight_mode scalar or identity")
    if mode == "identity":
        c = Matrix.identity(n, spec.domain)
    elif mode == "scalar":
        lam = spec.weight_scalar
        lam = spec.domain.coerce(lam) if lam is not None else _nonzero_scalar(spec.domain, rng)
        c = Matrix.identity(n, spec.domain).scale(lam)
    else:  # commutant
        if law in (LawId.T38, LawId.T39):
            side_matrix = a if law == LawId.T38 else b
            c = _constrained_weight(side_matrix, a @ b, rng)
        else:
            side = COMMUTE_SIDE.get(law) if law is not None else "b"
            if side == "a":
                c = sample_commutant(a, rng.getrandbits(32))
            elif side == "b":
                c = sample_commutant(b, rng.getrandbits(32))
            else:
                c = Matrix.identity(n, spec.domain)
    return a, b, c


@dataclass
class SuiteResult:
    """Aggregated outcome of check_equivalence over generated instances.

    equivalent + len(violations) + inconclusive + hypothesis_skips == trials.
    """

    law: LawId
    trials: int
    equivalent: int
    violations: list
    inconclusive: int
    hypothesis_skips: int
    seed: int
    domain_tag: object
    size: int
    elapsed: float

    def to_json_dict(self) -> dict:
        # elapsed is intentionally omitted: reports must be byte-identical
        # across runs with the same seed.
        return {
            "law": self.law.value,
            "trials": self.trials,
            "equivalent": self.equivalent,
            "violations": self.violations,
            "inconclusive": self.inconclusive,
            "hypothesis_skips": self.hypothesis_skips,
            "seed": self.seed,
            "domain": self.domain_tag,
            "size": self.size,
        }


def _trial_seeds(master: int, trial: int):
    base = master * _SEED_STRIDE + 2 * trial
    return base, base + 1


def _serialize_instance(trial, a, b, c, report: EquivalenceReport) -> dict:
    out = {
        "trial": trial,
        "a": matrix_to_json(a),
        "b": matrix_to_json(b),
        "c": matrix_to_json(c),
        "statement_values": dict(report.statement_values),
    }
    if report.details is not None:
        out["details"] = report.details
    return out


def run_suite(
    law: LawId,
    spec: InstanceSpec,
    trials: int,
    samples: int = 200,
    falsify_samples: int = 500,
) -> SuiteResult:
    """Run check_equivalence on `trials` generated instances.

    Instances whose context cannot be built (no Moore-Penrose inverse
    over a prime field) or which fail a law hypothesis are counted as
    hypothesis skips, never silently dropped."""
    if trials < 1:
        raise InvalidSpec("trials must be >= 1")
    start = time.perf_counter()
    equivalent = 0
    inconclusive = 0
    skips = 0
    violations = []
    for trial in range(trials):
        gen_seed, sample_seed = _trial_seeds(spec.seed, trial)
        a, b, c = gen_instance(replace(spec, seed=gen_seed), law)
        try:
            ctx = LawContext(a, b, c)
        except NoMPInverse:
            skips += 1
            continue
        report = check_equivalence(
            law, ctx, samples=samples, seed=sample_seed, falsify_samples=falsify_samples
        )
        if report.verdict == EQUIVALENT:
            equivalent += 1
        elif report.verdict == INCONCLUSIVE:
            inconclusive += 1
        elif report.verdict == VIOLATION:
            violations.append(_serialize_instance(trial, a, b, c, report))
        else:
            skips += 1
    return SuiteResult(
        law=law,
        trials=trials,
        equivalent=equivalent,
        violations=violations,
        inconclusive=inconclusive,
        hypothesis_skips=skips,
        seed=spec.seed,
        domain_tag=domain_to_json(spec.domain),
        size=spec.size,
        elapsed=time.perf_counter() - start,
    )


def search_counterexample(
    law: LawId,
    spec: InstanceSpec,
    budget: int,
    stmt: str | None = None,
    samples: int = 200,
    falsify_samples: int = 500,
):
    """Search generated instances for a counterexample.

    With `stmt` given, looks for an instance where that single statement
    is false (hypothesis-satisfying instances only).  Without it, looks
    for an equivalence violation, which for the theorems should never be
    found.  Returns a serialized witness dict or None."""
    if budget < 1:
        raise InvalidSpec("budget must be >= 1")
    if stmt is not None and stmt not in STATEMENTS[law]:
        raise InvalidSpec(f"law {law} has no statement {stmt!r}")
    for trial in range(budget):
        gen_seed, sample_seed = _trial_seeds(spec.seed, trial)
        a, b, c = gen_instance(replace(spec, seed=gen_seed), law)
        try:
            ctx = LawContext(a, b, c)
        except NoMPInverse:
            continue
        if stmt is None:
            report = check_equivalence(
                law, ctx, samples=samples, seed=sample_seed,
                falsify_samples=falsify_samples,
            )
            if report.verdict == VIOLATION:
                return _serialize_instance(trial, a, b, c, report)
            continue
        try:
            if SAMPLED_STATEMENT.get(law) == stmt:
                verdict = inclusion_statement_sampled(law, ctx, falsify_samples, sample_seed)
                value = None if verdict.all_passed else False
            else:
                value = law_statement(law, stmt, ctx)
        except HypothesisNotMet:
            continue
        if value is False:
            return {
                "trial": trial,
                "a": matrix_to_json(a),
                "b": matrix_to_json(b),
                "c": matrix_to_json(c),
                "statement": stmt,
                "value": False,
            }
    return None
