"""Report records shared by the identity checks and the quadrature suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

WITNESS_CAP = 500


@dataclass
class IdentityReport:
    """Outcome of one machine check of one identity.

    status is 'exact-pass' for coefficientwise rational equality, 'pass' for
    a numeric check within tolerance, 'fail' otherwise. residual is None for
    exact checks (exact zero); witness, when present, pinpoints the first
    discrepancy and is capped at 500 characters.
    """

    id: str
    mode: str
    order: int | None
    params: dict = field(default_factory=dict)
    status: str = "fail"
    residual: float | None = None
    witness: str | None = None
    elapsed_ms: float = 0.0
    description: str = ""

    def passed(self) -> bool:
        return self.status in ("exact-pass", "pass")

    def to_json_dict(self, include_timing: bool = False) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.description,
            "mode": self.mode,
            "order": self.order,
            "params": {k: encode_param(v) for k, v in sorted(self.params.items())},
            "status": self.status,
            "residual": self.residual,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timing else None,
        }


def encode_param(v):
    """JSON-safe parameter encoding: rationals as 'num/den', complex as [re, im]."""
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [encode_param(x) for x in v]
    return str(v)


def clip_witness(text: str | None) -> str | None:
    if text is None:
        return None
    return text if len(text) <= WITNESS_CAP else text[: WITNESS_CAP - 3] + "..."
