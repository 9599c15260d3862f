import logging

import click

from app.config import COUNTING_CONSTANT_A
from app.shared.cli_options import common_options, emit, load_table
from app.shared.enums import CheckpointMode
from app.shared.errors import CertificateInvalid
from .counting import validate_counting

logger = logging.getLogger(__name__)


@click.command("validate-zeros")
@click.option("--A", "A", type=float, default=float(COUNTING_CONSTANT_A), show_default=True,
              help="Constante de |Q(T)| ≤ A log T.")
@click.option("--mode", type=click.Choice([m.value for m in CheckpointMode]),
              default=CheckpointMode.MIDPOINTS.value, show_default=True)
@common_options
def validate_zeros(config, fmt, A, mode):
    """Valida la tabla de ceros contra la fórmula de conteo N(T)"""
    table = load_table(config)
    report = validate_counting(table, A=A, mode=CheckpointMode(mode))
    emit(config, report.lines(), fmt)
    if not report.passed:
        raise CertificateInvalid(f"{report.failures} puntos de control fallan con A = {A!r}")
