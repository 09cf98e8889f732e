"""Generator-driven soundness checks of every bound against the oracles."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, Optional

from .inequalities import SLACK_RTOL, Direction, run_suite
from .moments import compute_moments
from .oracles import generators
from .oracles.jacobi import jacobi_eigenvalues
from .oracles.sturm import sturm_real_roots
from .span import BRACKET_RTOL, Polynomial, span_report
from .spread import all_estimates

SPREAD_ATOL = 1e-8


@dataclass
class Counterexample:
    kind: str
    seed: int
    index: int
    check: str
    detail: str

    def to_dict(self) -> dict:
        return self.__dict__.copy()


@dataclass
class FuzzSummary:
    seed: int
    samples: int = 0
    matrices: int = 0
    polynomials: int = 0
    checks: int = 0
    failures: List[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[Counterexample]:
        return self.failures[0] if self.failures else None

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "matrices": self.matrices,
            "polynomials": self.polynomials,
            "checks": self.checks,
            "ok": self.ok,
            "failures": [f.to_dict() for f in self.failures],
        }


def _le(a: float, b: float, rtol: float) -> bool:
    return a <= b + rtol * max(1.0, abs(a), abs(b))


def check_sample(summary: FuzzSummary, index: int, rtol: float = SLACK_RTOL) -> None:
    sample = generators.sample_instance(summary.seed, index)
    reports = run_suite(sample)
    by_name = {r.name: r for r in reports}

    def fail(check, detail):
        summary.failures.append(Counterexample("sample", summary.seed, index, check, detail))

    for r in reports:
        summary.checks += 1
        if not r.holds(rtol):
            fail(r.name, f"lhs={r.lhs!r} rhs={r.rhs!r} slack={r.slack!r}")
    mu4 = compute_moments(sample, 4).mu(4)
    lo, hi = by_name["pearson_lower"], by_name["mu4_upper_refined"]
    if lo.applicable and hi.applicable:
        summary.checks += 1
        if not (_le(lo.rhs, mu4, rtol) and _le(mu4, hi.rhs, rtol)):
            fail("sandwich", f"{lo.rhs!r} <= {mu4!r} <= {hi.rhs!r}")
    for name in ("hankel_gap_upper", "pearson_gap_upper"):
        r = by_name[name]
        if r.applicable:
            summary.checks += 1
            if not (_le(r.lhs, r.rhs, rtol) and _le(r.rhs, r.rhs_alt, rtol)):
                fail(f"chain:{name}", f"{r.lhs!r} <= {r.rhs!r} <= {r.rhs_alt!r}")


def check_matrix(summary: FuzzSummary, index: int, atol: float = SPREAD_ATOL) -> None:
    a = generators.symmetric_instance(summary.seed, index)
    exact = jacobi_eigenvalues(a).spread
    for est in all_estimates(a):
        summary.checks += 1
        if est.direction is Direction.LOWER:
            bad = est.value > exact + atol
        else:
            bad = est.value < exact - atol
        if bad:
            summary.failures.append(
                Counterexample(
                    "matrix", summary.seed, index, est.label,
                    f"estimate={est.value!r} exact={exact!r}",
                )
            )


def check_polynomial(summary: FuzzSummary, index: int, rtol: float = BRACKET_RTOL) -> None:
    coeffs, roots = generators.real_rooted_instance(summary.seed, index)
    rs = sturm_real_roots(coeffs)
    summary.checks += 1
    if not rs.real_rooted:
        summary.failures.append(
            Counterexample("polynomial", summary.seed, index, "sturm_count",
                           f"{rs.count} real roots for degree {rs.degree}")
        )
        return
    report = replace(span_report(Polynomial(tuple(coeffs))), exact=rs.span)
    for b in report.bounds:
        if b.applicable:
            summary.checks += 1
    for b in report.violations(rtol):
        summary.failures.append(
            Counterexample("polynomial", summary.seed, index, b.name,
                           f"bound={b.value!r} exact={rs.span!r}")
        )


def run_fuzz(
    seed: int = 0,
    samples: int = 10_000,
    matrices: int = 1_000,
    polynomials: int = 1_000,
    rtol: float = SLACK_RTOL,
) -> FuzzSummary:
    summary = FuzzSummary(seed)
    for i in range(samples):
        check_sample(summary, i, rtol)
        summary.samples += 1
    for i in range(matrices):
        check_matrix(summary, i)
        summary.matrices += 1
    for i in range(polynomials):
        check_polynomial(summary, i)
        summary.polynomials += 1
    return summary
