import math
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from app.shared.certificates import CertificateLine, line

CSV_COLUMNS = ["X", "I", "I_over_X2"]
CSV_COLUMNS_WITH_J = ["X", "I", "I_over_X2", "J", "two_J_over_X2"]


class VonMangoldtValue(BaseModel):
    """Λ(n) sin evaluar: p y si n = p^k; el logaritmo se toma una sola vez"""

    n: int = Field(..., ge=1)
    p: int = 0
    is_prime_power: bool = False

    @property
    def value(self) -> float:
        return math.log(self.p) if self.is_prime_power else 0.0


class MeanSquareSeries(BaseModel):
    """
    Registros (X, I(X), I(X)/X²) en orden creciente de X.

    Si la corrida escribió a un sumidero, ``records`` queda vacío y solo se
    guardan los extremos de I(X)/X².
    """

    records: pd.DataFrame
    stride: int = Field(..., ge=1)
    count: int = 0
    min_ratio: float = math.inf
    max_ratio: float = -math.inf
    min_I: float = math.inf
    with_j: bool = False

    class Config:
        arbitrary_types_allowed = True

    def summary_lines(self) -> List[CertificateLine]:
        return [
            line("stride", self.stride),
            line("count", self.count),
            line("min_ratio", self.min_ratio, "≥", "I_over_X2"),
            line("max_ratio", self.max_ratio, "≤", "I_over_X2"),
            line("min_I", self.min_I, "≥", "I"),
        ]

    def to_csv(self, path_or_buf: Optional[object] = None) -> Optional[str]:
        return self.records.to_csv(path_or_buf, index=False, float_format="%.17g")
