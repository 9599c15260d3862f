from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from app.shared.certificates import CertificateLine, line
from app.shared.enclosure import Interval
from app.shared.enums import CheckpointMode


# Tabla de ordenadas positivas γ̂_1 < γ̂_2 < ...
class ZeroTable(BaseModel):
    ordinates: Interval
    source_path: str
    stated_radius: float = Field(..., ge=0)
    max_height: float

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    def __len__(self) -> int:
        return len(self.ordinates)

    def gamma(self, k: int) -> Interval:
        """k-ésima ordenada, con k ≥ 1"""
        if k < 1 or k > len(self):
            raise IndexError(f"índice de cero fuera de rango: {k}")
        return self.ordinates[k - 1]

    def prefix(self, n: int) -> "ZeroTable":
        """Primeras n ordenadas como tabla propia"""
        if n < 1 or n > len(self):
            raise IndexError(f"prefijo fuera de rango: {n}")
        head = self.ordinates[:n]
        return ZeroTable(
            ordinates=head,
            source_path=self.source_path,
            stated_radius=self.stated_radius,
            max_height=float(head.hi[-1]),
        )

    def moduli(self, n: Optional[int] = None) -> Interval:
        """|ρ| = √(¼ + γ²) de las primeras n ordenadas"""
        g = self.ordinates if n is None else self.ordinates[:n]
        return (g * g + 0.25).sqrt()


class ValidationReport(BaseModel):
    A: float
    mode: CheckpointMode
    checkpoints: pd.DataFrame
    worst_margin: Interval
    worst_height: float
    worst_ratio: float
    passed: bool
    height_ceiling: float
    backlund_crossover: float
    reaches_backlund: bool

    class Config:
        arbitrary_types_allowed = True

    @property
    def failures(self) -> int:
        return int((~self.checkpoints["ok"]).sum())

    def lines(self) -> List[CertificateLine]:
        return [
            line("name", "counting"),
            line("checkpoints", len(self.checkpoints)),
            line("A", self.A),
            line("mode", self.mode.value),
            line("worst_height", self.worst_height),
            line("worst_margin_hi", float(self.worst_margin.hi), "≤", "worst_margin"),
            line("worst_ratio", self.worst_ratio, "≤"),
            line("failures", self.failures),
            line("height_ceiling", self.height_ceiling),
            line("backlund_crossover", self.backlund_crossover, "≤"),
            line("reaches_backlund", self.reaches_backlund),
            line("passed", self.passed),
        ]
