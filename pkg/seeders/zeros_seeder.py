#!/usr/bin/env python3
"""
Seeder de tablas de ceros para desarrollo y pruebas.
Calcula las primeras ordenadas con mpmath.zetazero.
"""
import sys
from pathlib import Path
BASE_DIR = Path(__file__).resolve().parents[1]
if str(BASE_DIR) not in sys.path:
    sys.path.append(str(BASE_DIR))

from typing import Union

import mpmath


def write_zero_table(path: Union[str, Path], count: int, digits: int = 20) -> Path:
    """Escribe las primeras ``count`` ordenadas, una por línea, con ``digits`` decimales"""
    if count < 1:
        raise ValueError("count debe ser ≥ 1")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with mpmath.workdps(digits + 10):
        with path.open("w", encoding="utf-8") as fh:
            fh.write(f"# mpmath {mpmath.__version__} zetazero, {digits} decimales\n")
            for k in range(1, count + 1):
                gamma = mpmath.zetazero(k).imag
                fh.write(mpmath.nstr(gamma, digits + 3, min_fixed=-1, max_fixed=30, strip_zeros=False) + "\n")
                if k % 100 == 0:
                    print(f"   {k}/{count} ceros...")
    return path


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else BASE_DIR / "data" / "zeros_200.txt"
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 200
    try:
        print(f"🔍 Generando {count} ceros en {target}...")
        write_zero_table(target, count)
        print("✅ Tabla de ceros generada.")
    except Exception as e:
        print(f"❌ Error encontrado: {str(e)}")
        sys.exit(1)
