import logging

import click

from app.modules.zeros.table import snap_height
from app.shared.cli_options import common_options, emit, load_table
from app.shared.enums import ConstantName
from app.shared.errors import DomainError
from .schemas import BoundCertificate
from .series import b_bounds, c1_bound, c1_c2_separation, c2_lower_certificate, c3_bound

logger = logging.getLogger(__name__)


def _with_snap(cert: BoundCertificate, requested: float, snapped: bool) -> BoundCertificate:
    return cert.model_copy(update={"snapped_from": requested}) if snapped else cert


@click.command("bound-b")
@click.option("--T", "T", type=float, required=True, help="Altura de truncamiento.")
@click.option("--sharp-tail", is_flag=True, help="Cola afinada, válida para T ≥ 80000.")
@common_options
def bound_b(config, fmt, T, sharp_tail):
    """Certificado de la constante B"""
    table = load_table(config)
    height, snapped = snap_height(table, T)
    cert = b_bounds(table, height, sharp=sharp_tail, workers=config.workers)
    emit(config, _with_snap(cert, T, snapped).lines(), fmt)


@click.command("constants")
@click.option("--which", type=click.Choice([c.value for c in ConstantName]), required=True)
@click.option("--T", "T", type=float, default=None, help="Altura para c1 y c3.")
@click.option("--Y", "Y", type=float, default=None, help="Altura de S(Y) para c2 (por defecto T).")
@common_options
def constants(config, fmt, which, T, Y):
    """Certificados de c1, c2 (cota inferior y separación de c1) o c3"""
    which = ConstantName(which)
    if T is None and Y is None:
        raise DomainError("constants requiere --T o --Y")
    table = load_table(config)
    if which == ConstantName.C2:
        requested_y = Y if Y is not None else T
        requested_t = T if T is not None else Y
        y, snapped_y = snap_height(table, requested_y)
        t, snapped_t = snap_height(table, requested_t)
        lower = _with_snap(c2_lower_certificate(table, y, workers=config.workers), requested_y, snapped_y)
        separation = _with_snap(c1_c2_separation(table, y, t, workers=config.workers), requested_y, snapped_y)
        if snapped_t:
            logger.warning(f"T de c1 ajustado de {requested_t!r} a {t!r}")
        emit(config, lower.lines() + separation.lines(), fmt)
        return
    if T is None:
        raise DomainError(f"constants --which {which.value} requiere --T")
    height, snapped = snap_height(table, T)
    cert = c1_bound(table, height) if which == ConstantName.C1 else c3_bound(table, height)
    emit(config, _with_snap(cert, T, snapped).lines(), fmt)


@click.command("s-of-y")
@click.option("--Y", "Y", type=float, required=True)
@common_options
def s_of_y(config, fmt, Y):
    """Certificado de S(Y), cota inferior de c2"""
    table = load_table(config)
    height, snapped = snap_height(table, Y)
    cert = c2_lower_certificate(table, height, workers=config.workers)
    emit(config, _with_snap(cert, Y, snapped).lines(), fmt)
