"""
Serialización de certificados en formato de líneas.

Cada línea tiene una clave estable para CI (``key = value``) y una etiqueta
legible con la dirección de redondeo (``B ≤ 0.8602...``).
"""
from typing import Iterable, List, NamedTuple, Union

import numpy as np

from app.shared.enums import OutputFormat


class CertificateLine(NamedTuple):
    key: str
    label: str
    relation: str
    value: str


def format_value(value: Union[float, int, str, bool, np.floating]) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    return repr(float(value))


def line(key: str, value, relation: str = "=", label: str = None) -> CertificateLine:
    return CertificateLine(key, label or key, relation, format_value(value))


def render(lines: Iterable[CertificateLine], fmt: OutputFormat = OutputFormat.TEXT) -> str:
    fmt = OutputFormat(fmt)
    out: List[str] = []
    for item in lines:
        if fmt == OutputFormat.KV:
            out.append(f"{item.key} = {item.value}")
        else:
            out.append(f"{item.label} {item.relation} {item.value}")
    return "\n".join(out) + "\n"


def parse_kv(text: str) -> dict:
    """Lee de vuelta el formato ``key = value``"""
    result = {}
    for raw in text.splitlines():
        if not raw.strip():
            continue
        key, _, value = raw.partition(" = ")
        result[key.strip()] = value.strip()
    return result
