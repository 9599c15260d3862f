from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings
from typing import Optional

# Valores por defecto del paquete
DEFAULT_RADIUS = 1e-8
COUNTING_CONSTANT_A = "0.28"
PAIR_BLOCK_SIZE = 1024
SUM_CHUNK_SIZE = 4096
SIEVE_SEGMENT = 1 << 20
MAX_TRIG_ARGUMENT = float(1 << 24)
MEANSQUARE_DESK_RANGE = (1, 10**7)


class Settings(BaseSettings):
    # Única entrada desde el entorno: ruta por defecto de la tabla de ceros
    zeros_path: Optional[str] = None

    class Config:
        case_sensitive = False
        extra = "ignore"  # Ignora el resto de variables del entorno


class RunConfig(BaseModel):
    """Configuración validada de una ejecución del CLI"""

    zeros_path: Optional[str] = None
    radius: float = Field(DEFAULT_RADIUS, ge=0)
    workers: int = Field(1, ge=1)
    deterministic: bool = False
    output_path: Optional[str] = None
    T: Optional[float] = Field(None, gt=0)
    Y: Optional[float] = Field(None, gt=0)
    lam: Optional[float] = Field(None, gt=0)
    x_from: Optional[int] = Field(None, ge=1)
    x_to: Optional[int] = Field(None, ge=1)
    stride: int = Field(1, ge=1)

    @field_validator("radius")
    @classmethod
    def radius_finite(cls, v):
        if v != v or v == float("inf"):
            raise ValueError("el radio debe ser finito")
        return v

    @model_validator(mode="after")
    def range_nonempty(self):
        if self.x_from is not None and self.x_to is not None and self.x_from > self.x_to:
            raise ValueError("rango vacío: --from debe ser ≤ --to")
        return self


def get_settings() -> Settings:
    """Lee el entorno en cada llamada para que los tests puedan cambiar ZEROS_PATH"""
    return Settings()

