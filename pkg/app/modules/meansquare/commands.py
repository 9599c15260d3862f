import logging
import sys
from datetime import datetime
from pathlib import Path

import click

from app.config import MEANSQUARE_DESK_RANGE, RunConfig
from app.shared.certificates import line, render
from app.shared.cli_options import common_options
from app.shared.enums import OutputFormat
from .integrals import CsvSink, stream_mean_square

logger = logging.getLogger(__name__)


def _discard(block):
    return None


@click.command("meansquare")
@click.option("--from", "x_from", type=int, default=MEANSQUARE_DESK_RANGE[0], show_default=True)
@click.option("--to", "x_to", type=int, default=MEANSQUARE_DESK_RANGE[1], show_default=True)
@click.option("--stride", type=int, default=1, show_default=True)
@click.option("--with-j", is_flag=True, help="Agrega J(X) y 2J(X)/X².")
@common_options
def meansquare(config, fmt, x_from, x_to, stride, with_j):
    """
    Serie CSV de I(X) e I(X)/X².

    Con --format kv la salida estándar lleva solo el resumen de la serie
    (extremos de I/X² y de I); las filas van a --out si se indicó.
    """
    config = RunConfig(**{**config.model_dump(), "x_from": x_from, "x_to": x_to, "stride": stride})
    summary = fmt == OutputFormat.KV
    if config.output_path:
        with Path(config.output_path).open("w", encoding="utf-8", newline="") as handle:
            series = stream_mean_square(x_from, x_to, stride, CsvSink(handle, with_j), config.workers, with_j)
    else:
        sink = _discard if summary else CsvSink(sys.stdout, with_j)
        series = stream_mean_square(x_from, x_to, stride, sink, config.workers, with_j)
    logger.info(f"I/X² ∈ [{series.min_ratio!r}, {series.max_ratio!r}] en {series.count} registros")

    if summary:
        items = [line("from", x_from), line("to", x_to)] + series.summary_lines()
        if not config.deterministic:
            items.append(line("generated_at", datetime.now().isoformat(timespec="seconds")))
        click.echo(render(items, fmt), nl=False)
