# Componentes compartidos del sistema de certificación
"""
Componentes compartidos del sistema
"""
from .enclosure import Interval, make_interval, sum_enclosure
from .errors import (
    CertificationError, DomainError, ParseError, IngestionError,
    HeightError, AmbiguityError, CertificateInvalid
)
from .enums import OutputFormat, PairKernel, HNormalization

__all__ = [
    "Interval", "make_interval", "sum_enclosure",
    "CertificationError", "DomainError", "ParseError", "IngestionError",
    "HeightError", "AmbiguityError", "CertificateInvalid",
    "OutputFormat", "PairKernel", "HNormalization"
]
