"""Data models and serialization helpers for verification runs."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields
from typing import Any, Optional

from qschur.errors import PreconditionError
from qschur.tensor.sampling import Window, default_exhaustive_window, default_sample_window

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class SuiteConfig:
    n: int = 2
    r: int = 2
    N: Optional[int] = None
    lprime: Optional[int] = None
    trials: int = 100
    seed: int = 0
    window: Optional[Window] = None
    support_bound: int = 6
    coeff_bound: int = 3
    enable_affine_node: bool = False
    exhaustive_limit: int = 5000
    lemma_m_max: int = 40
    ml_bound: int = 40
    injectivity_bound: int = 200
    formula_x_max: int = 30

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 1:
            raise PreconditionError(f"n and r must be >= 1, got n={self.n}, r={self.r}")
        if self.trials < 1:
            raise PreconditionError(f"trials must be >= 1, got {self.trials}")
        if self.N is not None and self.N < self.n:
            raise PreconditionError(f"N must be >= n, got N={self.N}, n={self.n}")
        if self.lprime is not None and self.lprime < 1:
            raise PreconditionError(f"lprime must be >= 1, got {self.lprime}")
        if self.window is not None:
            lo, hi = (int(x) for x in self.window)
            if lo > hi:
                raise PreconditionError(f"Empty window [{lo}, {hi}]")
            object.__setattr__(self, "window", (lo, hi))
        if self.support_bound < 1 or self.coeff_bound < 1:
            raise PreconditionError("support_bound and coeff_bound must be >= 1")

    @property
    def ambient_n(self) -> int:
        """Size whose windows are used: N for truncation runs, n otherwise."""
        return self.N if self.N is not None else self.n

    @property
    def sample_window(self) -> Window:
        return self.window or default_sample_window(self.ambient_n)

    @property
    def exhaustive_window(self) -> Window:
        return self.window or default_exhaustive_window(self.ambient_n)

    @property
    def ring_label(self) -> str:
        return "generic" if self.lprime is None else f"eps(l'={self.lprime})"

    def to_dict(self) -> dict[str, Any]:
        payload = asdict(self)
        payload["window"] = list(self.window) if self.window is not None else None
        payload["sample_window"] = list(self.sample_window)
        payload["exhaustive_window"] = list(self.exhaustive_window)
        return payload

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "SuiteConfig":
        known = {f.name for f in fields(cls)}
        values = {k: v for k, v in payload.items() if k in known}
        if values.get("window") is not None:
            values["window"] = tuple(values["window"])
        return cls(**values)


@dataclass
class IdentityResult:
    id: str
    anchor: str
    status: str
    trials: int = 0
    counterexample: Optional[dict[str, Any]] = None
    asserted: bool = True
    note: Optional[str] = None

    @property
    def blocking(self) -> bool:
        return self.asserted and self.status == FAIL

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "IdentityResult":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in payload.items() if k in known})


@dataclass
class VerificationReport:
    suite: str
    config: SuiteConfig
    results: list[IdentityResult] = field(default_factory=list)
    label: Optional[str] = None

    @property
    def status(self) -> str:
        return FAIL if any(result.blocking for result in self.results) else PASS

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for result in self.results:
            out[result.status] = out.get(result.status, 0) + 1
        return out

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "suite": self.suite,
            "config": self.config.to_dict(),
            "results": [result.to_dict() for result in self.results],
            "status": self.status,
        }
        if self.label is not None:
            payload["label"] = self.label
        return payload

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "VerificationReport":
        return cls(
            suite=str(payload["suite"]),
            config=SuiteConfig.from_dict(payload.get("config", {})),
            results=[IdentityResult.from_dict(item) for item in payload.get("results", [])],
            label=payload.get("label"),
        )


@dataclass
class ReportBundle:
    reports: list[VerificationReport] = field(default_factory=list)
    conflicts: list[dict[str, Any]] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.conflicts or any(report.status == FAIL for report in self.reports):
            return FAIL
        return PASS

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "reports": [report.to_dict() for report in self.reports],
            "status": self.status,
        }
        if self.conflicts:
            payload["conflicts"] = self.conflicts
        return payload

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "ReportBundle":
        """Accepts a bundle or a single bare report."""
        if "reports" in payload:
            return cls(
                reports=[VerificationReport.from_dict(item) for item in payload["reports"]],
                conflicts=list(payload.get("conflicts", [])),
            )
        return cls(reports=[VerificationReport.from_dict(payload)])
