"""Grid sweeps: evaluate each identity at every binding and classify it."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from genpell import __version__
from genpell.errors import QuarantinedIdentityError
from genpell.harness.catalog import catalog
from genpell.harness.model import (
    PROFILES,
    Binding,
    Counterexample,
    GridProfile,
    IdentityResult,
    IdentitySpec,
    grid,
    render,
)


def evaluate(spec: IdentitySpec, binding: Binding) -> tuple[Any, Any]:
    """Both sides of ``spec`` at ``binding``, exactly."""
    if spec.quarantined:
        raise QuarantinedIdentityError(f"{spec.id} contains an undefined symbol and cannot be evaluated")
    missing = [v for v in spec.vars if v not in binding]
    if missing:
        raise ValueError(f"{spec.id}: binding lacks {missing}")
    args = {v: binding[v] for v in spec.vars}
    for var, lo in spec.lower_bounds.items():
        if args[var] < lo:
            raise ValueError(f"{spec.id}: {var}={args[var]} is below its bound {lo}")
    return spec.lhs(**args), spec.rhs(**args)


def verify(spec: IdentitySpec, bindings: Iterable[Binding]) -> IdentityResult:
    """Sweep every binding; the first failure in iteration order is the counterexample."""
    if spec.quarantined:
        return IdentityResult(spec.id, "quarantined", 0)
    lhs_fn, rhs_fn, names = spec.lhs, spec.rhs, spec.vars
    trials = failures = 0
    first: Counterexample | None = None
    for b in bindings:
        args = {v: b[v] for v in names}
        left, right = lhs_fn(**args), rhs_fn(**args)
        trials += 1
        if left != right:
            failures += 1
            if first is None:
                first = Counterexample(dict(args), render(left), render(right))
    if trials == 0:
        raise ValueError(f"{spec.id}: empty grid")
    if first is None:
        return IdentityResult(spec.id, "verified", trials)
    return IdentityResult(spec.id, "fails_as_printed", trials, failures, first)


@dataclass(frozen=True)
class VerificationReport:
    profile: GridProfile
    results: tuple[IdentityResult, ...]
    specs: tuple[IdentitySpec, ...]
    version: str = __version__

    def result(self, identity_id: str) -> IdentityResult:
        for r in self.results:
            if r.id == identity_id:
                return r
        raise KeyError(identity_id)

    def mismatches(self) -> list[tuple[IdentitySpec, IdentityResult]]:
        """Non-quarantined entries whose status differs from the expected one."""
        from genpell.harness.model import STATUS_FOR_EXPECTED

        out = []
        for spec, res in zip(self.specs, self.results):
            if res.status != "quarantined" and res.status != STATUS_FOR_EXPECTED[spec.expected_status]:
                out.append((spec, res))
        return out


def resolve_profile(profile: str | GridProfile) -> GridProfile:
    if isinstance(profile, GridProfile):
        return profile
    try:
        return PROFILES[profile]
    except KeyError:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}") from None


def verify_all(profile: str | GridProfile = "small", ids: Iterable[str] | None = None) -> VerificationReport:
    prof = resolve_profile(profile)
    specs = catalog()
    if ids is not None:
        wanted = set(ids)
        unknown = wanted - {s.id for s in specs}
        if unknown:
            raise KeyError(f"unknown identity ids: {sorted(unknown)}")
        specs = [s for s in specs if s.id in wanted]
    results = tuple(verify(s, grid(s, prof)) for s in specs)
    return VerificationReport(prof, results, tuple(specs))
