from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Literal

Ring = Literal["integer", "rational", "complex", "dual", "quad"]
Expected = Literal["pass", "fail", "quarantine"]
Status = Literal["verified", "fails_as_printed", "quarantined"]

# Canonical iteration order; the first failing binding in this row-major
# order (each coordinate ascending) is the reported counterexample.
VAR_ORDER = ("p", "q", "n", "m", "r", "s", "l")

Binding = Mapping[str, int]

STATUS_FOR_EXPECTED: dict[str, str] = {
    "pass": "verified",
    "fail": "fails_as_printed",
    "quarantine": "quarantined",
}


@dataclass(frozen=True)
class IdentitySpec:
    """One printed identity as data: variables, domains and two exact evaluators.

    ``lhs`` and ``rhs`` take the identity's variables as keyword arguments.
    Identities printed with a division are stored with the denominator
    cleared, so both sides stay exact.
    """

    id: str
    locator: str
    formula: str
    ring: Ring
    vars: tuple[str, ...]
    lhs: Callable[..., Any] | None
    rhs: Callable[..., Any] | None
    expected_status: Expected = "pass"
    lower_bounds: Mapping[str, int] = field(default_factory=dict)
    conjectured: bool = False
    corrects: str | None = None
    notes: str = ""

    def __post_init__(self) -> None:
        unknown = set(self.vars) - set(VAR_ORDER)
        if unknown:
            raise ValueError(f"{self.id}: unknown variables {sorted(unknown)}")
        ordered = tuple(v for v in VAR_ORDER if v in self.vars)
        if ordered != self.vars:
            raise ValueError(f"{self.id}: variables must follow canonical order {ordered}")
        if (self.lhs is None) != (self.expected_status == "quarantine"):
            raise ValueError(f"{self.id}: only quarantined identities may lack evaluators")

    @property
    def quarantined(self) -> bool:
        return self.lhs is None


@dataclass(frozen=True)
class GridProfile:
    """Finite variable domains: ``index`` for n, m, l; ``shift`` for r, s; ``param`` for p, q."""

    name: str
    index: tuple[int, int]
    shift: tuple[int, int]
    param: tuple[int, int]

    def domain(self, var: str) -> range:
        lo, hi = {
            "p": self.param,
            "q": self.param,
            "n": self.index,
            "m": self.index,
            "l": self.index,
            "r": self.shift,
            "s": self.shift,
        }[var]
        return range(lo, hi + 1)

    def describe(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "n_m_l": list(self.index),
            "r_s": list(self.shift),
            "p_q": list(self.param),
            "order": list(VAR_ORDER),
        }


PROFILES = {
    "small": GridProfile("small", index=(-6, 12), shift=(0, 5), param=(-3, 3)),
    "full": GridProfile("full", index=(-10, 20), shift=(0, 8), param=(-4, 4)),
}


def grid(spec: IdentitySpec, profile: GridProfile) -> Iterator[dict[str, int]]:
    """All bindings of the identity's variables in canonical row-major order."""
    domains = []
    for var in spec.vars:
        dom = profile.domain(var)
        lo = spec.lower_bounds.get(var)
        if lo is not None and lo > dom.start:
            dom = range(lo, dom.stop)
        domains.append(dom)
    for values in product(*domains):
        yield dict(zip(spec.vars, values))


def format_binding(b: Binding) -> str:
    return " ".join(f"{k}={b[k]}" for k in VAR_ORDER if k in b)


def render(value: Any) -> str:
    """Exact decimal rendering of an identity side (no scientific notation)."""
    if isinstance(value, tuple):
        return "(" + ", ".join(render(v) for v in value) + ")"
    return str(value)


@dataclass(frozen=True)
class Counterexample:
    binding: dict[str, int]
    lhs: str
    rhs: str


@dataclass(frozen=True)
class IdentityResult:
    id: str
    status: Status
    trials: int
    failures: int = 0
    counterexample: Counterexample | None = None

    def __post_init__(self) -> None:
        if (self.status == "fails_as_printed") != (self.counterexample is not None):
            raise ValueError(f"{self.id}: counterexample present iff fails_as_printed")
