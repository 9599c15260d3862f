"""
Fixtures compartidas: tabla de 200 ceros generada con mpmath y, si existe,
la tabla de escritorio de ZEROS_PATH.
"""
import os
from pathlib import Path

import mpmath
import pytest

from app.modules.zeros.table import load_zero_table
from seeders.zeros_seeder import write_zero_table

mpmath.mp.dps = 40

DESK_ZEROS = 100_000
FULL_ZEROS = 721_913
# γ̂_100000 ≈ 74920.8275: las pruebas de escritorio no pasan de esta altura
DESK_HEIGHT = 74920.0
WORKERS = min(8, os.cpu_count() or 1)


def encloses(iv, value) -> bool:
    """lo ≤ value ≤ hi comparando en mpmath (sin redondear value a float)"""
    value = mpmath.mpf(value)
    return mpmath.mpf(float(iv.lo)) <= value <= mpmath.mpf(float(iv.hi))


@pytest.fixture(scope="session")
def zeros_file(tmp_path_factory) -> Path:
    return write_zero_table(tmp_path_factory.mktemp("zeros") / "zeros_200.txt", 200)


@pytest.fixture(scope="session")
def table(zeros_file):
    return load_zero_table(zeros_file)


def _env_table(minimum: int):
    path = os.environ.get("ZEROS_PATH")
    if not path or not Path(path).is_file():
        pytest.skip("ZEROS_PATH no apunta a una tabla de ceros")
    loaded = load_zero_table(path)
    if len(loaded) < minimum:
        pytest.skip(f"la tabla de ZEROS_PATH tiene {len(loaded)} ceros, se necesitan {minimum}")
    return loaded


@pytest.fixture(scope="session")
def desk_table():
    loaded = _env_table(DESK_ZEROS)
    assert loaded.max_height > DESK_HEIGHT
    return loaded


@pytest.fixture(scope="session")
def full_table():
    return _env_table(FULL_ZEROS)
