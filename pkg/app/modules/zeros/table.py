"""
Lectura de tablas de ordenadas de ceros y acceso ordenado.
"""
import logging
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from app.config import DEFAULT_RADIUS
from app.shared.enclosure import DECIMAL_PATTERN, make_intervals
from app.shared.errors import AmbiguityError, HeightError, IngestionError
from .schemas import ZeroTable

logger = logging.getLogger(__name__)

# γ̂_1 = 14.13472514...: el primer encierro debe cortar [14.13472514, 14.13472515]
FIRST_ORDINATE_RANGE = (14.13472514, 14.13472515)


def load_zero_table(path: Union[str, Path], radius: float = DEFAULT_RADIUS) -> ZeroTable:
    """Lee una ordenada decimal por línea; '#' inicia comentario y se ignoran líneas vacías"""
    p = Path(path)
    if not p.is_file():
        raise IngestionError(f"no existe el archivo de ceros: {p}")

    texts: List[str] = []
    line_numbers: List[int] = []
    with p.open(encoding="utf-8") as fh:
        for number, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if not DECIMAL_PATTERN.match(line):
                raise IngestionError(f"decimal mal formado {line[:40]!r}", number)
            texts.append(line)
            line_numbers.append(number)

    if not texts:
        raise IngestionError(f"la tabla de ceros está vacía: {p}")

    ordinates = make_intervals(texts, radius)
    lines = np.asarray(line_numbers)

    not_positive = np.nonzero(ordinates.lo <= 14.0)[0]
    if not_positive.size:
        raise IngestionError("toda ordenada debe ser mayor que 14", int(lines[not_positive[0]]))

    overlap = np.nonzero(ordinates.hi[:-1] >= ordinates.lo[1:])[0]
    if overlap.size:
        k = int(overlap[0]) + 1
        raise IngestionError("ordenada no creciente o solapada con la anterior tras el ensanche", int(lines[k]))

    low, high = FIRST_ORDINATE_RANGE
    if not (ordinates.lo[0] <= high and low <= ordinates.hi[0]):
        raise IngestionError("la primera ordenada debe encerrar 14.13472514…", int(lines[0]))

    table = ZeroTable(
        ordinates=ordinates,
        source_path=str(p),
        stated_radius=float(radius),
        max_height=float(ordinates.hi[-1]),
    )
    logger.info(f"Tabla cargada: {len(table)} ceros hasta altura {table.max_height:.6f} ({p.name})")
    return table


def count_zeros(table: ZeroTable, T: float) -> int:
    """N(T): número de encierros con hi < T"""
    if T > table.max_height:
        raise HeightError(f"T = {T!r} supera la altura de la tabla {table.max_height!r}")
    idx = int(np.searchsorted(table.ordinates.hi, T, side="left"))
    if idx < len(table) and table.ordinates.lo[idx] <= T:
        raise AmbiguityError(f"T = {T!r} cae dentro del encierro del cero {idx + 1}")
    return idx


def snap_height(table: ZeroTable, T: float) -> Tuple[float, bool]:
    """
    Si T cae dentro de un encierro, lo mueve al punto medio más cercano
    entre ordenadas consecutivas. Devuelve (T', hubo_ajuste).
    """
    g = table.ordinates
    idx = int(np.searchsorted(g.hi, T, side="left"))
    if idx >= len(table) or g.lo[idx] > T:
        return T, False

    candidates = []
    if idx > 0:
        candidates.append(0.5 * float(g.hi[idx - 1]) + 0.5 * float(g.lo[idx]))
    if idx + 1 < len(table):
        candidates.append(0.5 * float(g.hi[idx]) + 0.5 * float(g.lo[idx + 1]))
    if not candidates:
        raise AmbiguityError(f"no hay punto medio disponible para ajustar T = {T!r}")
    snapped = min(candidates, key=lambda m: abs(m - T))
    logger.warning(f"T = {T!r} cae en el cero {idx + 1}; se ajusta a {snapped!r}")
    return snapped, True
