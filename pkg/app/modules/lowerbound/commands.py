import click

from app.config import COUNTING_CONSTANT_A
from app.modules.zeros.table import snap_height
from app.shared.cli_options import common_options, emit, load_table
from app.shared.enums import HNormalization
from app.shared.errors import CertificateInvalid
from .certify import certify_lower_bound


@click.command("delta")
@click.option("--T", "T", type=float, required=True, help="Altura de corte de la suma finita.")
@click.option("--lambda", "lam", type=float, required=True, help="Parámetro λ > 0 de la función de prueba.")
@click.option("--A", "A", default=COUNTING_CONSTANT_A, show_default=True, help="Constante de conteo (decimal).")
@click.option("--normalization", type=click.Choice([n.value for n in HNormalization]),
              default=HNormalization.DIVIDED.value, show_default=True)
@common_options
def delta(config, fmt, T, lam, A, normalization):
    """Certificado de δ, |H(X)| y lim inf I(X)/X²"""
    table = load_table(config)
    height, snapped = snap_height(table, T)
    cert = certify_lower_bound(table, height, lam, A=A, normalization=HNormalization(normalization))
    if snapped:
        cert = cert.model_copy(update={"snapped_from": T})
    emit(config, cert.lines(), fmt)
    if not cert.valid:
        raise CertificateInvalid(f"δ = {cert.delta!r} ≤ 0: el certificado no prueba nada")
