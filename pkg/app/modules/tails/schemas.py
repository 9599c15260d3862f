import math

import numpy as np
from pydantic import BaseModel, Field, model_validator

from app.config import COUNTING_CONSTANT_A
from app.shared.enclosure import TWO_PI, Interval, as_interval, make_interval
from app.shared.errors import DomainError


class TailParams(BaseModel):
    """Altura T con L = log T, L̂ = log(T/2π) y la constante de conteo A"""

    T: float = Field(..., gt=0)
    T_interval: Interval
    L: Interval
    Lhat: Interval
    A: Interval

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    @model_validator(mode="after")
    def finite_height(self):
        if not math.isfinite(self.T):
            raise ValueError("T debe ser finito")
        if not self.T_interval.contains(self.T):
            raise ValueError("T_interval no contiene T")
        return self

    @classmethod
    def from_height(
        cls,
        T: float,
        threshold=TWO_PI,
        name: str = "la altura",
        A: str = COUNTING_CONSTANT_A,
    ) -> "TailParams":
        """
        Valida T contra el umbral de la cota que lo usa.

        Las alturas no finitas o por debajo de max(2π, threshold) son
        DomainError, no ValidationError: llegan desde la grilla del CLI.
        """
        T_iv = as_interval(T)
        if not T_iv.is_scalar or not np.isfinite(T_iv.hi):
            raise DomainError(f"{name}: T = {T!r} no es una altura finita")
        for bound in (TWO_PI, as_interval(threshold)):
            if T_iv.hi < bound.lo:
                raise DomainError(f"{name} requiere T ≥ {float(bound.lo):.6g}")
        return cls(
            T=float(T_iv.hi),
            T_interval=T_iv,
            L=T_iv.ln(),
            Lhat=(T_iv / TWO_PI).ln(),
            A=make_interval(str(A)),
        )
