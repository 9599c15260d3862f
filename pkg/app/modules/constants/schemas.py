from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from app.shared.certificates import CertificateLine, line
from app.shared.enclosure import Interval


class BoundCertificate(BaseModel):
    """Constante certificada: suma finita + cola, con sus parámetros"""

    name: str
    finite_part: Interval
    tail_part: Interval
    total_lower: float
    total_upper: float
    height: float
    height_label: str = "T"
    zeros_used: int = Field(..., ge=0)
    source: str = ""
    lam: Optional[float] = None
    snapped_from: Optional[float] = None
    extras: Dict[str, float] = Field(default_factory=dict)

    class Config:
        arbitrary_types_allowed = True

    @model_validator(mode="after")
    def ordered_bounds(self):
        if self.total_lower > self.total_upper:
            raise ValueError("total_lower > total_upper")
        return self

    def lines(self) -> List[CertificateLine]:
        items = [
            line("name", self.name),
            line(self.height_label, self.height),
            line("zeros_used", self.zeros_used),
            line("finite_lo", float(self.finite_part.lo), "≥", f"{self.name}_finite"),
            line("finite_hi", float(self.finite_part.hi), "≤", f"{self.name}_finite"),
            line("tail_hi", float(self.tail_part.hi), "≤", f"{self.name}_tail"),
            line("total_lower", self.total_lower, "≥", self.name),
            line("total_upper", self.total_upper, "≤", self.name),
        ]
        if self.lam is not None:
            items.append(line("lambda", self.lam))
        if self.snapped_from is not None:
            items.append(line("snapped_from", self.snapped_from))
        for key in sorted(self.extras):
            items.append(line(key, self.extras[key], "≥" if key.endswith("_lower") else "="))
        if self.source:
            items.append(line("source", Path(self.source).name))
        return items


class JumpDecomposition(BaseModel):
    """Salto J(γ̂_k) de S(Y) partido en diagonal, antidiagonal y regiones A, B, C"""

    k: int = Field(..., ge=1)
    gamma: Interval
    total: Interval
    diagonal: Interval
    antidiagonal: Interval
    sum_a: Interval
    sum_b: Interval
    sum_c: Interval
    abs_sum_a: Interval
    abs_sum_b: Interval

    class Config:
        arbitrary_types_allowed = True
