from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from app.modules.tails.delta_tail import ALPHA
from app.shared.certificates import CertificateLine, line
from app.shared.enclosure import Interval, make_interval
from app.shared.enums import HNormalization


class TestFunctionParams(BaseModel):
    """g(z) = (sin(αz)/(αz))³·(1 − z/λ)"""

    alpha: Interval = ALPHA
    lam: float = Field(..., gt=0)

    class Config:
        arbitrary_types_allowed = True

    @field_validator("lam")
    @classmethod
    def lam_finite(cls, v):
        if v == float("inf"):
            raise ValueError("λ debe ser finito")
        return v

    @property
    def lam_interval(self) -> Interval:
        return make_interval(repr(float(self.lam)))


class LowerBoundCertificate(BaseModel):
    """δ, |H(X)| ≥ h_bound y lim inf I(X)/X² ≥ i_constant"""

    delta_finite: Interval
    delta_tail: Interval
    delta: float
    h_bound: float
    i_constant: float
    T: float
    lam: float
    zeros_used: int = Field(..., ge=0)
    normalization: HNormalization = HNormalization.DIVIDED
    popov_stechkin_ratio: float = 0.0
    valid: bool
    source: str = ""
    snapped_from: Optional[float] = None

    class Config:
        arbitrary_types_allowed = True

    def lines(self) -> List[CertificateLine]:
        items = [
            line("name", "lower_bound"),
            line("T", self.T),
            line("lambda", self.lam),
            line("zeros_used", self.zeros_used),
            line("delta_finite_lo", float(self.delta_finite.lo), "≥", "delta_finite"),
            line("delta_tail_hi", float(self.delta_tail.hi), "≤", "delta_tail"),
            line("delta_lo", self.delta, "≥", "delta"),
            line("h_bound", self.h_bound, "≥", "|H(X)|"),
            line("i_constant", self.i_constant, "≥", "liminf I(X)/X^2"),
            line("popov_stechkin_ratio", self.popov_stechkin_ratio, "≥", "i_constant*40000"),
            line("normalization", self.normalization.value),
            line("denominators", "|rho_n|"),
            line("analytic_step", "Popov-Stechkin (cited)"),
            line("valid", self.valid),
        ]
        if self.snapped_from is not None:
            items.append(line("snapped_from", self.snapped_from))
        if self.source:
            items.append(line("source", Path(self.source).name))
        return items
