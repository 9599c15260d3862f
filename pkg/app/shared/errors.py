"""
Jerarquía de errores del sistema de certificación.

Cada excepción lleva un ``status_code`` que el CLI usa como código de salida
y un ``detail`` legible, igual que ``HTTPException`` en una API.
"""
from typing import Optional


class CertificationError(Exception):
    """Error base: entrada inválida o cálculo imposible"""

    status_code: int = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    def __str__(self) -> str:
        return self.detail


class DomainError(CertificationError):
    """Argumento fuera del dominio de una operación (ln en 0, división por 0, altura bajo el umbral de una cota)"""


class ParseError(CertificationError):
    """Cadena decimal mal formada"""


class IngestionError(CertificationError):
    """Archivo de ceros inválido; indica el número de línea cuando se conoce"""

    def __init__(self, detail: str, line_number: Optional[int] = None):
        if line_number is not None:
            detail = f"línea {line_number}: {detail}"
        super().__init__(detail)
        self.line_number = line_number


class HeightError(CertificationError):
    """La altura pedida supera la altura confiable de la tabla"""


class AmbiguityError(CertificationError):
    """La altura cae dentro del encierro de una ordenada"""


class CertificateInvalid(CertificationError):
    """El certificado se calculó pero no prueba nada (por ejemplo δ ≤ 0)"""

    status_code = 1
