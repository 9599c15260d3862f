"""
Opciones comunes de los subcomandos y dependencias compartidas:
configuración validada, tabla de ceros y salida.
"""
import logging
import sys
import time
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Iterable

import click

from app.config import DEFAULT_RADIUS, RunConfig, get_settings
from app.modules.zeros.schemas import ZeroTable
from app.modules.zeros.table import load_zero_table
from app.shared.certificates import CertificateLine, line, render
from app.shared.enums import OutputFormat
from app.shared.errors import IngestionError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format=LOG_FORMAT,
        force=True,
    )


def common_options(fn):
    """Agrega --zeros, --radius, --workers, --deterministic, --out, --verbose y --format"""
    options = [
        click.option("--zeros", "zeros_path", type=click.Path(dir_okay=False), default=None,
                     help="Tabla de ordenadas (por defecto ZEROS_PATH)."),
        click.option("--radius", type=float, default=DEFAULT_RADIUS, show_default=True,
                     help="Radio de error declarado de cada ordenada."),
        click.option("--workers", type=int, default=1, show_default=True, help="Procesos para las sumas."),
        click.option("--deterministic", is_flag=True, help="Salida sin datos de la máquina ni tiempos."),
        click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None,
                     help="Archivo de salida (por defecto stdout)."),
        click.option("--verbose", is_flag=True, help="Log en nivel DEBUG."),
        click.option("--format", "fmt", type=click.Choice([f.value for f in OutputFormat]),
                     default=OutputFormat.TEXT.value, show_default=True),
    ]

    @wraps(fn)
    def wrapper(zeros_path, radius, workers, deterministic, output_path, verbose, fmt, **kwargs):
        configure_logging(verbose)
        config = RunConfig(
            zeros_path=zeros_path,
            radius=radius,
            workers=workers,
            deterministic=deterministic,
            output_path=output_path,
        )
        started = time.perf_counter()
        result = fn(config=config, fmt=OutputFormat(fmt), **kwargs)
        logger.info(f"{fn.__name__} terminado en {time.perf_counter() - started:.2f}s")
        return result

    for option in reversed(options):
        wrapper = option(wrapper)
    return wrapper


def load_table(config: RunConfig) -> ZeroTable:
    """Tabla de --zeros o, si falta, de ZEROS_PATH"""
    path = config.zeros_path or get_settings().zeros_path
    if not path:
        raise IngestionError("falta la tabla de ceros: use --zeros o ZEROS_PATH")
    return load_zero_table(path, config.radius)


def emit(config: RunConfig, lines: Iterable[CertificateLine], fmt: OutputFormat) -> None:
    items = list(lines)
    if not config.deterministic:
        items.append(line("generated_at", datetime.now().isoformat(timespec="seconds")))
    write_text(config, render(items, fmt))


def write_text(config: RunConfig, text: str) -> None:
    if config.output_path:
        Path(config.output_path).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)
