import logging
import sys
from typing import List, Optional

import click
from pydantic import ValidationError

from app.shared.errors import CertificationError

# Importar los subcomandos de cada módulo
from app.modules.zeros.commands import validate_zeros
from app.modules.constants.commands import bound_b, constants, s_of_y
from app.modules.lowerbound.commands import delta
from app.modules.meansquare.commands import meansquare
from app.modules.tails.commands import tails

logger = logging.getLogger("main")


@click.group()
@click.version_option("1.0.0", prog_name="zeta-meansquare")
def cli():
    """Certificación de cotas de la media cuadrática del término de error del TNP"""


# Registrar todos los subcomandos
cli.add_command(validate_zeros)
cli.add_command(bound_b)
cli.add_command(constants)
cli.add_command(s_of_y)
cli.add_command(delta)
cli.add_command(meansquare)
cli.add_command(tails)


def run(argv: Optional[List[str]] = None) -> int:
    """Ejecuta el CLI y devuelve el código de salida: 0 éxito, 1 certificado inválido, 2 error de entrada"""
    try:
        cli.main(args=argv, prog_name="zeta-meansquare", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return 2
    except click.exceptions.Abort:
        return 2
    except ValidationError as e:
        logger.error(f"Parámetros inválidos: {e.error_count()} error(es)")
        click.echo(f"Error: {e}", err=True)
        return 2
    except CertificationError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        click.echo(f"Error: {e.detail}", err=True)
        return e.status_code
    return 0


if __name__ == "__main__":
    sys.exit(run())
